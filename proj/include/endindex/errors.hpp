#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace endindex {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operation applied outside its domain (zero divisor, z = 0, zero polynomial).
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Structured input that is well-formed JSON but violates a schema rule.
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// Chain complex that fails shape composition or d∘d = 0.
class InvalidComplex : public Error {
 public:
  using Error::Error;
};

/// Some homology degree carries a free Λ-summand, so the homology of the
/// end-periodic manifold is infinite dimensional.
class NotFinite : public Error {
 public:
  explicit NotFinite(std::vector<std::size_t> degrees);
  const std::vector<std::size_t>& degrees() const noexcept { return degrees_; }

 private:
  std::vector<std::size_t> degrees_;
};

/// The requested weight lies on an exceptional wall.
class OnWall : public Error {
 public:
  OnWall(double delta, double wall);
  double delta() const noexcept { return delta_; }
  double wall() const noexcept { return wall_; }

 private:
  double delta_;
  double wall_;
};

/// Two root moduli overlap within their error radii but equality could not
/// be certified.
class AmbiguousWall : public Error {
 public:
  using Error::Error;
};

class UnsupportedInput : public Error {
 public:
  using Error::Error;
};

/// |λ| lies on one of the weight circles e^{δ1}, e^{δ2}.
class WeightCircle : public Error {
 public:
  using Error::Error;
};

/// Truncation window too small for the spectral gap of the shift operator.
class InsufficientWindow : public Error {
 public:
  InsufficientWindow(std::size_t given, std::size_t required);
  std::size_t required() const noexcept { return required_; }

 private:
  std::size_t required_;
};

}  // namespace endindex
