#pragma once

#include <stdexcept>
#include <string>

namespace lcvwm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A grid, block or image has dimensions an operation cannot accept.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Malformed parameters, files or collections.
class InputError : public Error {
public:
    using Error::Error;
};

/// The payload does not fit into any subband even once.
class CapacityError : public Error {
public:
    using Error::Error;
};

}  // namespace lcvwm
