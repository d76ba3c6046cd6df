#pragma once

#include <stdexcept>
#include <string>

namespace abjadi {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A codepoint that is neither a letter of the script nor a foldable variant.
struct UnknownLetter : Error {
    using Error::Error;
};

// A value outside the representable range of the script.
struct OutOfRange : Error {
    using Error::Error;
};

// Strict decoding rejected a non-canonical class word.
struct NonCanonical : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

// Two class groups with the same thousand-power exponent.
struct DuplicateClass : Error {
    using Error::Error;
};

// A 3-digit class the script cannot write as a single word.
struct UnrepresentableClass : Error {
    using Error::Error;
};

struct NotADigit : Error {
    using Error::Error;
};

struct EmptyInput : Error {
    using Error::Error;
};

}  // namespace abjadi
