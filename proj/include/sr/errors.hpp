#pragma once

#include <stdexcept>
#include <string>

namespace sr {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed text input (OBJ records, config lines, manifest rows).
struct ParseError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

// Tensor/image dimensions that cannot be combined.
struct ShapeMismatchError : Error {
    using Error::Error;
};

// Arguments outside an operation's documented domain (degenerate extents,
// parallel look-at axes, empty masks, bad counts, ...).
struct InvalidArgumentError : Error {
    using Error::Error;
};

struct CorruptFileError : Error {
    using Error::Error;
};

struct VersionMismatchError : Error {
    using Error::Error;
};

}  // namespace sr
