#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cuntz {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Raised by hom validation when f(s_i)* f(s_j) != delta_ij I.
class RelationViolation : public Error {
public:
  RelationViolation(std::size_t i, std::size_t j)
      : Error("relation violated (" + std::to_string(i) + "," + std::to_string(j) + ")"), i_(i), j_(j) {}

  std::size_t first() const noexcept { return i_; }
  std::size_t second() const noexcept { return j_; }

private:
  std::size_t i_;
  std::size_t j_;
};

/// Raised when sum_i f(s_i) f(s_i)* != I; carries the rendered residual.
class CompletenessViolation : public Error {
public:
  explicit CompletenessViolation(std::string residual)
      : Error("completeness violated: residual " + residual), residual_(std::move(residual)) {}

  const std::string& residual() const noexcept { return residual_; }

private:
  std::string residual_;
};

class ParseError : public Error {
public:
  ParseError(std::size_t position, const std::string& message)
      : Error("syntax error at position " + std::to_string(position) + ": " + message), position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

} // namespace cuntz
