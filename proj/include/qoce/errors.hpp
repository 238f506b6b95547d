#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qoce {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. `line()` is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A set-valued measure was asked for on a set where it is undefined.
class DomainError : public Error {
 public:
  enum class Kind { EmptySet, FullSet, ZeroVolume };

  DomainError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

class ParameterError : public Error {
 public:
  using Error::Error;
};

/// A seed vertex received walk mass <= mu and fell out of the sample.
class SeedExcludedError : public Error {
 public:
  explicit SeedExcludedError(std::string vertex)
      : Error("seed vertex '" + vertex + "' excluded from sample"), vertex_(std::move(vertex)) {}

  const std::string& vertex() const noexcept { return vertex_; }

 private:
  std::string vertex_;
};

class SolverError : public Error {
 public:
  SolverError(double residual, int iterations)
      : Error("affiliation solver did not converge after " + std::to_string(iterations) +
              " iterations (projected gradient norm " + std::to_string(residual) + ")"),
        residual_(residual),
        iterations_(iterations) {}

  double residual() const noexcept { return residual_; }
  int iterations() const noexcept { return iterations_; }

 private:
  double residual_;
  int iterations_;
};

}  // namespace qoce
