#pragma once

#include <stdexcept>
#include <string>

namespace wres {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter monomial exceeded degree 1 in a or b.
class DegreeOverflow : public Error {
 public:
  using Error::Error;
};

/// pi+ requested on an expression that does not decay at infinity.
class NonDecaying : public Error {
 public:
  using Error::Error;
};

/// Real-line integral requested on an expression without enough decay.
class NotIntegrable : public Error {
 public:
  using Error::Error;
};

/// A division or parse produced a pole away from +i / -i.
class UnsupportedPole : public Error {
 public:
  using Error::Error;
};

class OddOddProduct : public Error {
 public:
  using Error::Error;
};

class UnsupportedDimension : public Error {
 public:
  using Error::Error;
};

class UnsupportedConfig : public Error {
 public:
  using Error::Error;
};

class InsufficientOrders : public Error {
 public:
  using Error::Error;
};

/// A symbol jet was asked for a normal derivative it does not carry.
class MissingJet : public Error {
 public:
  using Error::Error;
};

class DegenerateProportionality : public Error {
 public:
  using Error::Error;
};

class QuadratureUnconverged : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace wres
