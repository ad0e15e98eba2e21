#pragma once

#include <stdexcept>
#include <string>

namespace hermsos {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input (JSON fields, literals, files).
class InputError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NonHermitian : public Error {
 public:
  using Error::Error;
};

class ZeroPolynomial : public Error {
 public:
  using Error::Error;
};

class GramUnavailable : public Error {
 public:
  using Error::Error;
};

class DegreeOverflow : public Error {
 public:
  using Error::Error;
};

class InsufficientSamples : public Error {
 public:
  using Error::Error;
};

}  // namespace hermsos
