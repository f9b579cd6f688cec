#pragma once

#include <stdexcept>
#include <string>

namespace h14 {

// Operands that do not fit together (mismatched variable sets, bad indices).
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A well-formed request whose mathematical precondition fails.
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A witness pack or certificate that does not satisfy a checked condition.
class WitnessError : public MathError {
 public:
  using MathError::MathError;
};

// Malformed textual or JSON input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace h14
