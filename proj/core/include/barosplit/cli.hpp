#pragma once

namespace barosplit {

/// Entry point behind the command-line tool. Subcommands: run, converge,
/// taylor, stability. Returns the process exit status: 0 on success, 2 on
/// configuration errors, 3 when a `run` blows up mid-simulation.
int cli_main(int argc, const char* const* argv);

} // namespace barosplit
