#pragma once

#include <stdexcept>
#include <string>

namespace kyfan {

// Thrown when an input is structurally valid but outside a theorem's or
// operation's domain (wrong k range, triangle present, edgeless graph, size
// caps). Distinct from std::invalid_argument, which we reserve for malformed
// data (bad CSV, bad graph6 bytes, non-finite entries).
class precondition_error : public std::runtime_error {
public:
    explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace kyfan
