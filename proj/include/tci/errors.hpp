#pragma once

#include <stdexcept>
#include <string>

namespace tci {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A permutation map entry (or other index-like value) lies outside its domain.
class OutOfRangeError : public Error {
public:
    using Error::Error;
};

/// Two output positions gather the same source index.
class DuplicateError : public Error {
public:
    using Error::Error;
};

/// Block length does not match the permutation size (or paired sequence lengths differ).
class LengthMismatchError : public Error {
public:
    using Error::Error;
};

/// packet_size is not one of the supported reverse-link values.
class UnsupportedPacketSizeError : public Error {
public:
    using Error::Error;
};

/// Address counter outside [0, 2^(n+5)).
class CounterOutOfRangeError : public Error {
public:
    using Error::Error;
};

/// Interleaver input length K outside [40, 5114].
class KOutOfRangeError : public Error {
public:
    using Error::Error;
};

/// Operation needs a larger permutation (adjacency spread needs size >= 2).
class SizeTooSmallError : public Error {
public:
    using Error::Error;
};

/// File could not be opened, read, or written.
class IoError : public Error {
public:
    using Error::Error;
};

/// File contents inconsistent with the declared symbol format.
class FormatError : public Error {
public:
    using Error::Error;
};

} // namespace tci
