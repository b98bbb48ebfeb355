#pragma once

#include <stdexcept>
#include <string>

namespace cnls {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised by the expression parser; carries a 0-based input position.
struct SyntaxError : Error {
    SyntaxError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    std::size_t position;
};

struct UnsupportedConstruct : Error {
    using Error::Error;
};

// A term cannot be carried through a substitution (shift of ln t, etc).
struct UnsupportedClass : Error {
    using Error::Error;
};

// antidifferentiate: a term has no primitive inside the expression class.
struct NotElementary : Error {
    using Error::Error;
};

struct UnboundSymbol : Error {
    using Error::Error;
};

struct DomainError : Error {
    using Error::Error;
};

// exp_ad series failed to terminate within the nilpotency bound.
struct NonNilpotent : Error {
    using Error::Error;
};

struct UndecidableSign : Error {
    using Error::Error;
};

struct InternalError : Error {
    using Error::Error;
};

} // namespace cnls
