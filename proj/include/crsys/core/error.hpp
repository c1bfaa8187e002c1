#pragma once

#include <stdexcept>
#include <string>

namespace crsys {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (bad sizes, radii, orders).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

}  // namespace crsys
