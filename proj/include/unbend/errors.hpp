#pragma once

#include <stdexcept>
#include <string>

namespace unbend {

/// Base class for every error raised by the library. All errors describe a
/// caller mistake (bad type, index, or input vector); none are recoverable
/// internal states.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// (family, rank) outside the valid range table.
class InvalidRank : public Error {
  public:
    using Error::Error;
};

/// A simple-root or fundamental-weight index outside 1..rank.
class IndexOutOfRange : public Error {
  public:
    using Error::Error;
};

/// A coefficient vector that is not a root of the given root system.
class NotARoot : public Error {
  public:
    using Error::Error;
};

/// The requested curve C_alpha is a point in G/P (n(alpha) = 0).
class CurveContracted : public Error {
  public:
    using Error::Error;
};

/// A weight whose pairings with simple coroots are not all integers.
class NotLatticeWeight : public Error {
  public:
    using Error::Error;
};

/// Parabolic marking that is empty.
class InvalidMarking : public Error {
  public:
    using Error::Error;
};

/// Horospherical family parameters outside the classification ranges.
class OutOfRange : public Error {
  public:
    using Error::Error;
};

}  // namespace unbend
