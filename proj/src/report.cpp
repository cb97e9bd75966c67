#include "kyfan/report.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace kyfan {

namespace {

void write_escaped(const std::string& s, std::string& out) {
    out.push_back('"');
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", ch);
                    out += buf;
                } else {
                    out.push_back(ch);
                }
        }
    }
    out.push_back('"');
}

} // namespace

Report& Report::set(const std::string& key, Report v) {
    if (!std::holds_alternative<Object>(value_))
        throw std::logic_error("Report::set on a non-object");
    std::get<Object>(value_)[key] = std::move(v);
    return *this;
}

Report& Report::push(Report v) {
    if (!std::holds_alternative<Array>(value_))
        throw std::logic_error("Report::push on a non-array");
    std::get<Array>(value_).push_back(std::move(v));
    return *this;
}

void Report::write(std::string& out) const {
    if (std::holds_alternative<nullptr_t>(value_)) {
        out += "null";
    } else if (const bool* b = std::get_if<bool>(&value_)) {
        out += *b ? "true" : "false";
    } else if (const long long* i = std::get_if<long long>(&value_)) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%lld", *i);
        out += buf;
    } else if (const double* d = std::get_if<double>(&value_)) {
        if (!std::isfinite(*d))
            throw std::logic_error("non-finite value in report");
        char buf[48];
        std::snprintf(buf, sizeof buf, "%.12g", *d);
        out += buf;
    } else if (const std::string* s = std::get_if<std::string>(&value_)) {
        write_escaped(*s, out);
    } else if (const Object* obj = std::get_if<Object>(&value_)) {
        out.push_back('{');
        bool first = true;
        for (const auto& [key, val] : *obj) { // std::map keeps keys sorted
            if (!first) out.push_back(',');
            first = false;
            write_escaped(key, out);
            out.push_back(':');
            val.write(out);
        }
        out.push_back('}');
    } else {
        const Array& arr = std::get<Array>(value_);
        out.push_back('[');
        for (size_t i = 0; i < arr.size(); ++i) {
            if (i) out.push_back(',');
            arr[i].write(out);
        }
        out.push_back(']');
    }
}

std::string Report::serialize() const {
    std::string out;
    write(out);
    return out;
}

} // namespace kyfan
