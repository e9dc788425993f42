#ifndef ANS_ERRORS_HPP
#define ANS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ans {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed regex, DFA file, word or flag value.
struct ParseError : Error {
    using Error::Error;
};

// Input violates an operation's precondition (word not in L, alphabet
// mismatch, non-square multiplier, ...).
struct DomainError : Error {
    using Error::Error;
};

// A construction exceeded its state cap.
struct ResourceError : Error {
    using Error::Error;
};

}  // namespace ans

#endif
