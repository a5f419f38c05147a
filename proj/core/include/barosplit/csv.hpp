#pragma once

#include <string>
#include <vector>

#include "barosplit/studies.hpp"

namespace barosplit {
namespace csv {

/// Uppercase scientific notation (e.g. 3.632E-04) with the shortest digit
/// string that parses back to the identical double.
std::string format_double(double x);

/// Inverse of format_double (also accepts plain decimal forms).
double parse_double(const std::string& s);

/// Header: dt,dt_btr,M,err_u,rate_u,err_h,rate_h,status
/// Diverged rows carry N/A error cells; missing rates print as '-'.
std::string convergence_table(const std::vector<ConvergenceRow>& rows);
std::vector<ConvergenceRow> parse_convergence_table(const std::string& text);

/// Header: dt,residual,exponent
std::string taylor_table(const std::vector<TaylorRow>& rows);

/// Header: dt_btr,bounded
std::string stability_table(const StabilityReport& report);

} // namespace csv
} // namespace barosplit
