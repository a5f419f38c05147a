#include "barosplit/cli.hpp"

int main(int argc, char** argv) { return barosplit::cli_main(argc, argv); }
