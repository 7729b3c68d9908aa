#pragma once

#include <stdexcept>
#include <string>

namespace esing {

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An operation was called outside its contract (bad input, violated
/// precondition). The CLI maps this to exit code 2.
struct PreconditionError : Error {
    using Error::Error;
};

/// A consistency check on an intermediate result failed. This means a bug,
/// not bad input. The CLI maps this to exit code 3.
struct InternalError : Error {
    using Error::Error;
};

/// Syntax or degree error while reading a germ expression. Carries the
/// 1-based position of the offending token.
struct ParseError : Error {
    int line;
    int column;

    ParseError(const std::string& what, int line_, int column_)
        : Error(what), line(line_), column(column_) {}
};

}  // namespace esing
