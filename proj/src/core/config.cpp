#include "config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace ipm {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

KeyValues KeyValues::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::Io, path + ": cannot open config");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_string(ss.str(), path);
}

KeyValues KeyValues::parse_string(const std::string& text, const std::string& origin) {
    KeyValues kv;
    kv.origin_ = origin;
    std::stringstream ss(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            fail(ErrorKind::Parse, origin + ":" + std::to_string(lineno) + ": expected key=value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            fail(ErrorKind::Parse, origin + ":" + std::to_string(lineno) + ": empty key");
        if (kv.entries_.count(key))
            fail(ErrorKind::Parse,
                 origin + ":" + std::to_string(lineno) + ": duplicate key '" + key + "'");
        kv.entries_[key] = {value, lineno};
    }
    return kv;
}

void KeyValues::restrict_keys(const std::set<std::string>& allowed) const {
    for (const auto& [key, entry] : entries_) {
        if (!allowed.count(key))
            fail(ErrorKind::Parse, origin_ + ":" + std::to_string(entry.second) +
                                       ": unknown key '" + key + "'");
    }
}

void KeyValues::require_keys(const std::vector<std::string>& required) const {
    for (const auto& key : required)
        if (!entries_.count(key))
            fail(ErrorKind::Parse, origin_ + ": missing required key '" + key + "'");
}

bool KeyValues::has(const std::string& key) const { return entries_.count(key) != 0; }

void KeyValues::fail_key(const std::string& key, const std::string& why) const {
    auto it = entries_.find(key);
    const std::string where =
        it == entries_.end() ? origin_ : origin_ + ":" + std::to_string(it->second.second);
    fail(ErrorKind::Parse, where + ": " + why);
}

std::string KeyValues::get_string(const std::string& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) fail_key(key, "missing required key '" + key + "'");
    return it->second.first;
}

std::string KeyValues::get_string(const std::string& key, const std::string& fallback) const {
    return has(key) ? get_string(key) : fallback;
}

double KeyValues::get_double(const std::string& key) const {
    const std::string v = get_string(key);
    double out = 0.0;
    auto res = std::from_chars(v.data(), v.data() + v.size(), out);
    if (res.ec != std::errc{} || res.ptr != v.data() + v.size())
        fail_key(key, "value of '" + key + "' is not a number: '" + v + "'");
    return out;
}

double KeyValues::get_double(const std::string& key, double fallback) const {
    return has(key) ? get_double(key) : fallback;
}

long KeyValues::get_int(const std::string& key) const {
    const std::string v = get_string(key);
    long out = 0;
    auto res = std::from_chars(v.data(), v.data() + v.size(), out);
    if (res.ec != std::errc{} || res.ptr != v.data() + v.size())
        fail_key(key, "value of '" + key + "' is not an integer: '" + v + "'");
    return out;
}

long KeyValues::get_int(const std::string& key, long fallback) const {
    return has(key) ? get_int(key) : fallback;
}

bool KeyValues::get_bool(const std::string& key, bool fallback) const {
    if (!has(key)) return fallback;
    std::string v = get_string(key);
    std::transform(v.begin(), v.end(), v.begin(), ::tolower);
    if (v == "on" || v == "true" || v == "1") return true;
    if (v == "off" || v == "false" || v == "0") return false;
    fail_key(key, "value of '" + key + "' must be on/off");
}

std::vector<double> KeyValues::get_list(const std::string& key) const {
    const std::string v = get_string(key);
    std::vector<double> out;
    std::stringstream ss(v);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok = trim(tok);
        double d = 0.0;
        auto res = std::from_chars(tok.data(), tok.data() + tok.size(), d);
        if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size())
            fail_key(key, "list entry of '" + key + "' is not a number: '" + tok + "'");
        out.push_back(d);
    }
    if (out.empty()) fail_key(key, "list '" + key + "' is empty");
    return out;
}

std::vector<double> KeyValues::get_list(const std::string& key,
                                        const std::vector<double>& fallback) const {
    return has(key) ? get_list(key) : fallback;
}

double KeyValues::get_double_in(const std::string& key, double lo, double hi, bool lo_strict,
                                bool hi_strict) const {
    const double v = get_double(key);
    const bool lo_ok = lo_strict ? v > lo : v >= lo;
    const bool hi_ok = hi_strict ? v < hi : v <= hi;
    if (!lo_ok || !hi_ok) {
        std::ostringstream msg;
        msg << key << "=" << v << " violates " << lo << (lo_strict ? " < " : " <= ") << key
            << (hi_strict ? " < " : " <= ") << hi;
        fail_key(key, msg.str());
    }
    return v;
}

double KeyValues::get_double_in(const std::string& key, double fallback, double lo, double hi,
                                bool lo_strict, bool hi_strict) const {
    if (!has(key)) return fallback;
    return get_double_in(key, lo, hi, lo_strict, hi_strict);
}

}  // namespace ipm
