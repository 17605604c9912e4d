#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "common.hpp"

namespace ipm {

// Flat key=value run configuration: one pair per line, '#' starts a comment,
// unknown keys are rejected against the caller's schema with the offending
// line named.
class KeyValues {
  public:
    static KeyValues parse_file(const std::string& path);
    static KeyValues parse_string(const std::string& text, const std::string& origin = "<string>");

    // Errors on any key outside `allowed`, naming its line.
    void restrict_keys(const std::set<std::string>& allowed) const;
    void require_keys(const std::vector<std::string>& required) const;

    bool has(const std::string& key) const;
    std::string get_string(const std::string& key) const;
    std::string get_string(const std::string& key, const std::string& fallback) const;
    double get_double(const std::string& key) const;
    double get_double(const std::string& key, double fallback) const;
    long get_int(const std::string& key) const;
    long get_int(const std::string& key, long fallback) const;
    bool get_bool(const std::string& key, bool fallback) const;
    std::vector<double> get_list(const std::string& key) const;
    std::vector<double> get_list(const std::string& key, const std::vector<double>& fallback) const;

    // Range guard producing spec-style messages, e.g. "eps2=1.5 violates 0 < eps2 < 1".
    double get_double_in(const std::string& key, double lo, double hi, bool lo_strict,
                         bool hi_strict) const;
    double get_double_in(const std::string& key, double fallback, double lo, double hi,
                         bool lo_strict, bool hi_strict) const;

    const std::map<std::string, std::pair<std::string, std::size_t>>& entries() const {
        return entries_;
    }
    const std::string& origin() const { return origin_; }

    [[noreturn]] void fail_key(const std::string& key, const std::string& why) const;

  private:
    std::string origin_;
    std::map<std::string, std::pair<std::string, std::size_t>> entries_;  // key -> (value, line)
};

}  // namespace ipm
