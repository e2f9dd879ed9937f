#pragma once

#include <stdexcept>
#include <string>

namespace spincalc {

// Raised by any operation that leaves the supported calculus
// (unknown stratum, non-invertible weight, unresolved atoms, ...).
class CalcError : public std::runtime_error {
public:
    explicit CalcError(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised by the expression front end; carries a source position.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line, int col)
        : std::runtime_error(msg + " at " + std::to_string(line) + ":" + std::to_string(col)),
          line(line),
          col(col) {}

    int line;
    int col;
};

}  // namespace spincalc
