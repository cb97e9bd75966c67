#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace kyfan {

/// Minimal JSON value for the structured report format. Serialization is
/// byte-stable: object keys sorted, floats printed with 12 significant
/// digits, no whitespace. One report object per output line.
class Report {
public:
    Report() : value_(nullptr_t{}) {}

    static Report object() { Report r; r.value_ = Object{}; return r; }
    static Report array() { Report r; r.value_ = Array{}; return r; }
    static Report number(double v) { Report r; r.value_ = v; return r; }
    static Report integer(long long v) { Report r; r.value_ = v; return r; }
    static Report boolean(bool v) { Report r; r.value_ = v; return r; }
    static Report string(std::string v) { Report r; r.value_ = std::move(v); return r; }

    Report& set(const std::string& key, Report v);
    Report& set(const std::string& key, double v) { return set(key, number(v)); }
    Report& set(const std::string& key, long long v) { return set(key, integer(v)); }
    Report& set(const std::string& key, int v) { return set(key, integer(v)); }
    Report& set(const std::string& key, std::uint64_t v) {
        return set(key, integer(static_cast<long long>(v)));
    }
    Report& set(const std::string& key, bool v) { return set(key, boolean(v)); }
    Report& set(const std::string& key, const char* v) { return set(key, string(v)); }
    Report& set(const std::string& key, const std::string& v) { return set(key, string(v)); }

    Report& push(Report v);
    Report& push(const std::string& v) { return push(string(v)); }
    Report& push(double v) { return push(number(v)); }

    // single line, no trailing newline
    std::string serialize() const;

private:
    struct nullptr_t {};
    using Object = std::map<std::string, Report>;
    using Array = std::vector<Report>;
    std::variant<nullptr_t, bool, long long, double, std::string, Object, Array> value_;

    void write(std::string& out) const;
};

} // namespace kyfan
