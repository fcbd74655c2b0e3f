#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rlp {

// Base class for everything a malformed input can trigger. Logic bugs use
// assertions instead, never InputError.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

class ParseError : public InputError {
public:
    ParseError(std::size_t offset, const std::string& expected)
        : InputError("parse error at offset " + std::to_string(offset) + ": expected " + expected),
          offset(offset),
          expected(expected) {}

    std::size_t offset;
    std::string expected;
};

class DegreeViolation : public InputError {
public:
    DegreeViolation(const std::string& where, int degree)
        : InputError("degree violation: " + where + " has degree " + std::to_string(degree)),
          where(where),
          degree(degree) {}

    std::string where;
    int degree;
};

class NotSeriesParallel : public InputError {
public:
    explicit NotSeriesParallel(const std::string& msg) : InputError("not series-parallel: " + msg) {}
};

// Raised when no terminal-joining external edge exists and inserting the
// dummy reference edge would push a terminal past degree four.
class InfeasibleRooting : public InputError {
public:
    explicit InfeasibleRooting(const std::string& msg) : InputError("infeasible rooting: " + msg) {}
};

class CapExceeded : public InputError {
public:
    CapExceeded(int64_t edges, int64_t cap)
        : InputError("instance has " + std::to_string(edges) + " edges, oracle cap is " + std::to_string(cap)) {}
};

[[noreturn]] inline void internal_error(const char* what) {
    throw std::logic_error(std::string("internal invariant violated: ") + what);
}

inline void require(bool cond, const char* what) {
    if (!cond) internal_error(what);
}

}  // namespace rlp
