#pragma once

#include <stdexcept>
#include <string>

namespace minrank {

// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed parameters, mismatched dimensions, bad file contents.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

// A configured size cap (enumeration or matrix) would be exceeded.
class CapExceeded : public Error {
public:
    using Error::Error;
};

}  // namespace minrank
