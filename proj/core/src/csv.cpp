#include "barosplit/csv.hpp"

#include <charconv>
#include <sstream>

#include "barosplit/errors.hpp"

namespace barosplit {
namespace csv {

std::string format_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::scientific);
    std::string s(buf, res.ptr);
    for (char& c : s)
        if (c == 'e') c = 'E';
    return s;
}

double parse_double(const std::string& s) {
    double x = 0.0;
    std::string lower = s;
    for (char& c : lower)
        if (c == 'E') c = 'e';
    const auto res = std::from_chars(lower.data(), lower.data() + lower.size(), x);
    if (res.ec != std::errc() || res.ptr != lower.data() + lower.size())
        throw ConfigError("value", 0, "cannot parse number '" + s + "'");
    return x;
}

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::string opt_cell(const std::optional<double>& v, const char* missing) {
    return v ? format_double(*v) : std::string(missing);
}

} // namespace

std::string convergence_table(const std::vector<ConvergenceRow>& rows) {
    std::ostringstream os;
    os << "dt,dt_btr,M,err_u,rate_u,err_h,rate_h,status\r\n";
    for (const auto& r : rows) {
        os << format_double(r.dt) << ',' << format_double(r.dt_btr) << ',' << r.M << ',';
        if (r.ok) {
            os << opt_cell(r.err_u, "N/A") << ',' << opt_cell(r.rate_u, "-") << ','
               << opt_cell(r.err_h, "N/A") << ',' << opt_cell(r.rate_h, "-") << ",ok";
        } else {
            os << "N/A,-,N/A,-,N/A";
        }
        os << "\r\n";
    }
    return os.str();
}

std::vector<ConvergenceRow> parse_convergence_table(const std::string& text) {
    std::vector<ConvergenceRow> rows;
    std::istringstream is(text);
    std::string line;
    bool header = true;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (header) {
            header = false;
            continue;
        }
        const auto cells = split_line(line);
        if (cells.size() != 8)
            throw ConfigError("csv", 0, "convergence row must have 8 cells");
        ConvergenceRow r;
        r.dt = parse_double(cells[0]);
        r.dt_btr = parse_double(cells[1]);
        r.M = static_cast<int>(parse_double(cells[2]));
        auto opt = [&](const std::string& s) -> std::optional<double> {
            if (s == "N/A" || s == "-") return std::nullopt;
            return parse_double(s);
        };
        r.err_u = opt(cells[3]);
        r.rate_u = opt(cells[4]);
        r.err_h = opt(cells[5]);
        r.rate_h = opt(cells[6]);
        r.ok = cells[7] == "ok";
        rows.push_back(r);
    }
    return rows;
}

std::string taylor_table(const std::vector<TaylorRow>& rows) {
    std::ostringstream os;
    os << "dt,residual,exponent\r\n";
    for (const auto& r : rows) {
        os << format_double(r.dt) << ',' << format_double(r.residual) << ','
           << (r.exponent ? format_double(*r.exponent) : std::string("-")) << "\r\n";
    }
    return os.str();
}

std::string stability_table(const StabilityReport& report) {
    std::ostringstream os;
    os << "dt_btr,bounded\r\n";
    for (const auto& r : report.rows)
        os << format_double(r.dt_btr) << ',' << (r.bounded ? "yes" : "N/A") << "\r\n";
    return os.str();
}

} // namespace csv
} // namespace barosplit
