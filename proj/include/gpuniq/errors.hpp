#ifndef GPUNIQ_ERRORS_HPP
#define GPUNIQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gpuniq {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ker A has no strictly positive vector.
class EmptyPolytope : public Error {
 public:
  EmptyPolytope() : Error("coefficient cone empty") {}
};

class LimitExceeded : public Error {
 public:
  using Error::Error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

class BadCoordinate : public Error {
 public:
  using Error::Error;
};

class NoConvergence : public Error {
 public:
  using Error::Error;
};

class Ambiguous : public Error {
 public:
  using Error::Error;
};

class NotOnVariety : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  DimensionMismatch(long dP, long d)
      : Error("dimension mismatch d_P=" + std::to_string(dP) + ", d=" + std::to_string(d)) {}
};

}  // namespace gpuniq

#endif  // GPUNIQ_ERRORS_HPP
