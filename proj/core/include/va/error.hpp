#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace va {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial text. `offset` is the byte position of the problem.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A caller violated an operation's precondition (shape mismatch, singular
/// matrix, degree out of range, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The hypersurface lies outside the supported scope.
class ScopeError : public Error {
 public:
  enum class Kind { NotHomogeneous, DegreeTooSmall, NonIsolatedSingularities, ZeroPolynomial };

  ScopeError(Kind kind, const std::string& what, int found_dimension = -1)
      : Error(what), kind_(kind), dimension_(found_dimension) {}

  Kind kind() const noexcept { return kind_; }
  /// Projective dimension of the singular locus for NonIsolatedSingularities.
  int dimension() const noexcept { return dimension_; }

 private:
  Kind kind_;
  int dimension_;
};

const char* to_string(ScopeError::Kind kind);

/// Buchberger exceeded the configured degree cap.
class DegreeCapExceeded : public Error {
 public:
  DegreeCapExceeded(int degree, int cap)
      : Error("S-polynomial degree " + std::to_string(degree) + " exceeds the degree cap " +
              std::to_string(cap)),
        degree_(degree),
        cap_(cap) {}
  int degree() const noexcept { return degree_; }
  int cap() const noexcept { return cap_; }

 private:
  int degree_;
  int cap_;
};

/// An internal consistency check failed. Indicates a bug or a theory
/// violation, never a bad input.
class DefectError : public Error {
 public:
  using Error::Error;
};

}  // namespace va
