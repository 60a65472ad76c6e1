#pragma once

#include <stdexcept>
#include <string>

namespace sra {

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised by the rewriting engine and the trace solver when two exact
// computations that must agree do not.
class InconsistentSystem : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class InsufficientRelations : public std::runtime_error {
 public:
  explicit InsufficientRelations(int degree)
      : std::runtime_error("insufficient relations at degree " + std::to_string(degree)),
        degree_(degree) {}
  int degree() const { return degree_; }

 private:
  int degree_;
};

class NondegenerateSpec : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::invalid_argument(msg + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

}  // namespace sra
