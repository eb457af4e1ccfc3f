#pragma once

#include <stdexcept>
#include <string>

namespace ordercert {

// Malformed input: bad edge list, bad graph6 string, invalid partition, ...
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// An operation was asked to run beyond its instance-size guard.
class size_guard_error : public std::runtime_error {
public:
    size_guard_error(const std::string& op, int n, int guard)
        : std::runtime_error(op + ": instance too large (n=" + std::to_string(n) +
                             ", guard=" + std::to_string(guard) +
                             "); raise ORDERCERT_MAX_N to override") {}
};

} // namespace ordercert
