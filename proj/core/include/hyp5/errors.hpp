#pragma once
#include <stdexcept>
#include <string>

namespace hyp5 {

// Base for all library errors; every throw site uses a subclass below.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ShapeError : Error { using Error::Error; };
struct EnumerationTooLargeError : Error { using Error::Error; };
struct UndefinedDistanceError : Error { using Error::Error; };
struct EnumerationOverflowError : Error { using Error::Error; };
struct ConstructionMismatchError : Error { using Error::Error; };
struct UnsupportedLabelError : Error { using Error::Error; };
struct IndeterminateSignatureError : Error { using Error::Error; };
struct NotMaximalOrderError : Error { using Error::Error; };
struct InvalidArgumentError : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

}  // namespace hyp5
