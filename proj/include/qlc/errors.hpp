#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace qlc {

/// Base class of every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A zero entry lies strictly between two nonzero entries.
struct InternalZerosError : Error {
    explicit InternalZerosError(int index_)
        : Error("internal zero at index " + std::to_string(index_)), index(index_) {}
    int index;
};

/// A polynomial or sequence entry has a negative coefficient where
/// nonnegativity is required.
struct NegativeCoefficientError : Error {
    using Error::Error;
};

/// Input sequence too short (or otherwise wrongly sized) for the operation.
struct LengthError : Error {
    using Error::Error;
};

/// An index or parameter is outside its admissible range.
struct RangeError : Error {
    using Error::Error;
};

/// Unknown built-in family name.
struct UnknownNameError : Error {
    using Error::Error;
};

/// Expression depends on n or k where a pure q-polynomial is required.
struct NonConstantExprError : Error {
    using Error::Error;
};

/// Syntax error in a coefficient expression.
struct ParseError : Error {
    ParseError(std::size_t offset_, std::vector<std::string> expected_, const std::string& what_)
        : Error(what_), offset(offset_), expected(std::move(expected_)) {}
    std::size_t offset;
    std::vector<std::string> expected;
};

/// File or JSON input could not be read or decoded.
struct IoError : Error {
    using Error::Error;
};

}  // namespace qlc
