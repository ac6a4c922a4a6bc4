#pragma once

#include <stdexcept>
#include <string>

namespace karaflat {

// An exact polynomial division left a nonzero remainder.  All divisions in
// this library are by construction exact, so this always signals a
// bookkeeping bug in the caller.
struct NonExactDivision : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Mask construction with coefficients outside {-1, 0, +1} or with
// inconsistent length/step/offset parameters.
struct InvalidMask : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A stride compression met a nonzero coefficient off the requested grid.
struct StrideViolation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A recursion-tree path containing a digit 2 was used where a direct
// (subtraction-free) path is required.
struct NotDirectPath : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Argument outside the domain of an exact special-function evaluation.
struct OutOfDomain : std::domain_error {
    using std::domain_error::domain_error;
};

// An identity that must produce an integer produced a proper fraction.
struct NonIntegerResult : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed polynomial text; positions are 1-based.
struct ParseError : std::runtime_error {
    ParseError(const std::string& what, int line, int column)
        : std::runtime_error(what + " at line " + std::to_string(line) +
                             ", column " + std::to_string(column)),
          line(line),
          column(column) {}

    int line;
    int column;
};

}  // namespace karaflat
