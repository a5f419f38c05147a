#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "barosplit/errors.hpp"

namespace barosplit {

/// Plain-text `key = value` configuration with [section] headers and #
/// comments. Keys are reported as section.key. Unknown keys are the caller's
/// concern (see RunConfig::from_file, which validates against the documented
/// key list).
class ConfigFile {
public:
    static ConfigFile parse_file(const std::string& path);
    static ConfigFile parse_string(const std::string& text, const std::string& origin = "<string>");

    bool has(const std::string& key) const { return entries_.count(key) > 0; }
    std::optional<std::string> get(const std::string& key) const;
    double get_double(const std::string& key, double fallback) const;
    int get_int(const std::string& key, int fallback) const;
    bool get_bool(const std::string& key, bool fallback) const;
    std::string get_string(const std::string& key, const std::string& fallback) const;
    std::vector<double> get_double_list(const std::string& key) const;

    int line_of(const std::string& key) const;
    const std::map<std::string, std::string>& entries() const { return entries_; }

    /// Throws ConfigError naming the first key not in `allowed` (with line).
    void require_known_keys(const std::vector<std::string>& allowed) const;

private:
    std::map<std::string, std::string> entries_;
    std::map<std::string, int> lines_;
};

} // namespace barosplit
