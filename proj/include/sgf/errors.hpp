#pragma once

#include <stdexcept>
#include <string>

namespace sgf {

// Domain errors carry a stable machine-readable code next to the human message.
// The CLI maps any DomainError to exit status 1 and prints {"error": code(), ...}
// on stderr; usage problems are handled separately and exit with status 2.
class DomainError : public std::runtime_error {
public:
  DomainError(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

struct AmbientMismatchError : DomainError {
  explicit AmbientMismatchError(const std::string& what)
      : DomainError("AmbientMismatch", what) {}
};

struct NotNumericalError : DomainError {
  explicit NotNumericalError(const std::string& what)
      : DomainError("NotNumerical", what) {}
};

struct NotInSemigroupError : DomainError {
  explicit NotInSemigroupError(const std::string& what)
      : DomainError("NotInSemigroup", what) {}
};

struct EmptySubsetError : DomainError {
  explicit EmptySubsetError(const std::string& what)
      : DomainError("EmptySubset", what) {}
};

struct DimensionMismatchError : DomainError {
  explicit DimensionMismatchError(const std::string& what)
      : DomainError("DimensionMismatch", what) {}
};

struct EmptyRangeError : DomainError {
  explicit EmptyRangeError(const std::string& what)
      : DomainError("EmptyRange", what) {}
};

struct InsufficientSamplesError : DomainError {
  explicit InsufficientSamplesError(const std::string& what)
      : DomainError("InsufficientSamples", what) {}
};

struct NoFitError : DomainError {
  explicit NoFitError(const std::string& what) : DomainError("NoFit", what) {}
};

struct NoFitWithinBoundsError : DomainError {
  explicit NoFitWithinBoundsError(const std::string& what)
      : DomainError("NoFitWithinBounds", what) {}
};

struct InvalidPresentationError : DomainError {
  explicit InvalidPresentationError(const std::string& what)
      : DomainError("InvalidPresentation", what) {}
};

struct BadDocumentError : DomainError {
  explicit BadDocumentError(const std::string& what)
      : DomainError("BadDocument", what) {}
};

}  // namespace sgf
