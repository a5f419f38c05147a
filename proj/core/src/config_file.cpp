#include "barosplit/config_file.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "barosplit/csv.hpp"

namespace barosplit {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

} // namespace

ConfigFile ConfigFile::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("config", 0, "cannot open configuration file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_string(ss.str(), path);
}

ConfigFile ConfigFile::parse_string(const std::string& text, const std::string& origin) {
    ConfigFile cfg;
    std::istringstream is(text);
    std::string line;
    std::string section;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const std::string t = trim(line.substr(0, line.find('#')));
        if (t.empty()) continue;
        if (t.front() == '[') {
            if (t.back() != ']')
                throw ConfigError("section", lineno,
                                  origin + ":" + std::to_string(lineno) + ": malformed section");
            section = trim(t.substr(1, t.size() - 2));
            continue;
        }
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw ConfigError(t, lineno, origin + ":" + std::to_string(lineno) +
                                             ": expected key = value, got '" + t + "'");
        const std::string key =
            (section.empty() ? "" : section + ".") + trim(t.substr(0, eq));
        const std::string value = trim(t.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError(key, lineno, origin + ":" + std::to_string(lineno) +
                                               ": empty key or value");
        cfg.entries_[key] = value;
        cfg.lines_[key] = lineno;
    }
    return cfg;
}

std::optional<std::string> ConfigFile::get(const std::string& key) const {
    const auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

int ConfigFile::line_of(const std::string& key) const {
    const auto it = lines_.find(key);
    return it == lines_.end() ? 0 : it->second;
}

double ConfigFile::get_double(const std::string& key, double fallback) const {
    const auto v = get(key);
    if (!v) return fallback;
    try {
        return csv::parse_double(*v);
    } catch (const ConfigError&) {
        throw ConfigError(key, line_of(key), "key '" + key + "': cannot parse '" + *v +
                                                 "' as a number");
    }
}

int ConfigFile::get_int(const std::string& key, int fallback) const {
    const double d = get_double(key, fallback);
    const int i = static_cast<int>(d);
    if (static_cast<double>(i) != d)
        throw ConfigError(key, line_of(key), "key '" + key + "' must be an integer");
    return i;
}

bool ConfigFile::get_bool(const std::string& key, bool fallback) const {
    const auto v = get(key);
    if (!v) return fallback;
    if (*v == "true" || *v == "on" || *v == "1" || *v == "yes") return true;
    if (*v == "false" || *v == "off" || *v == "0" || *v == "no") return false;
    throw ConfigError(key, line_of(key), "key '" + key + "' must be a boolean");
}

std::string ConfigFile::get_string(const std::string& key, const std::string& fallback) const {
    return get(key).value_or(fallback);
}

std::vector<double> ConfigFile::get_double_list(const std::string& key) const {
    std::vector<double> out;
    const auto v = get(key);
    if (!v) return out;
    std::string cur;
    auto flush = [&]() {
        if (!cur.empty()) {
            out.push_back(csv::parse_double(cur));
            cur.clear();
        }
    };
    for (char c : *v) {
        if (c == ',' || c == ' ')
            flush();
        else
            cur += c;
    }
    flush();
    return out;
}

void ConfigFile::require_known_keys(const std::vector<std::string>& allowed) const {
    for (const auto& [key, value] : entries_) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            throw ConfigError(key, line_of(key), "unknown configuration key '" + key + "'");
    }
}

} // namespace barosplit
