#pragma once

#include <stdexcept>
#include <string>

namespace howe {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// field
class InvalidField : public Error { using Error::Error; };
class MixedFields : public Error { using Error::Error; };
class DivisionByZero : public Error { using Error::Error; };
class Unsupported : public Error { using Error::Error; };

// polynomials
class ZeroPolynomial : public Error { using Error::Error; };
class BothZero : public Error { using Error::Error; };

// ramification data / construction
class DuplicateRamificationPoint : public Error {
 public:
  DuplicateRamificationPoint(std::string first, std::string second, const std::string& value)
      : Error("duplicate ramification point: " + first + " = " + second + " = " + value),
        first_(std::move(first)),
        second_(std::move(second)) {}
  const std::string& first() const { return first_; }
  const std::string& second() const { return second_; }

 private:
  std::string first_;
  std::string second_;
};
class InfinityNotSupported : public Error { using Error::Error; };
class NormalizationImpossible : public Error { using Error::Error; };
class NotOnCurve : public Error { using Error::Error; };

// singularities
class NotSingular : public Error { using Error::Error; };
class MultiplicityExceedsTwo : public Error { using Error::Error; };
class BudgetExceeded : public Error { using Error::Error; };

// irreducibility
class UnsupportedShape : public Error { using Error::Error; };

}  // namespace howe
