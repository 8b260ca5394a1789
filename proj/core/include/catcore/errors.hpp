#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace catcore {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An error that names the cells or elements responsible for it.
class WitnessError : public Error {
 public:
  WitnessError(const std::string& what, std::vector<int> witness)
      : Error(what), witness_(std::move(witness)) {}
  const std::vector<int>& witness() const { return witness_; }

 private:
  std::vector<int> witness_;
};

class NotAssociative : public WitnessError {
  using WitnessError::WitnessError;
};
class NoUnit : public WitnessError {
  using WitnessError::WitnessError;
};
class NoInverse : public WitnessError {
  using WitnessError::WitnessError;
};
class NotComposable : public WitnessError {
  using WitnessError::WitnessError;
};
class NotHomomorphism : public WitnessError {
  using WitnessError::WitnessError;
};
class ShapeMismatch : public Error {
  using Error::Error;
};
class SourceTargetMismatch : public Error {
  using Error::Error;
};
class NotUnital : public Error {
  using Error::Error;
};
class NotStrictAction : public Error {
  using Error::Error;
};
// Raised when a construction needs every F_g to be a 2-functor.
class NotTwoFunctorAction : public Error {
  using Error::Error;
};
class SearchBudgetExceeded : public Error {
  using Error::Error;
};
class CapExceeded : public Error {
  using Error::Error;
};
class InvalidTable : public Error {
  using Error::Error;
};

}  // namespace catcore
