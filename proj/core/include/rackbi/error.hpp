#pragma once

#include <stdexcept>
#include <string>

namespace rackbi {

/// Single exception type for the whole library; the code pins down which
/// contract was broken so callers (and tests) can dispatch without parsing
/// the message.
class Error : public std::runtime_error {
 public:
  enum class Code {
    ParseError,
    DimensionMismatch,
    AlgebraMismatch,
    IndexOutOfRange,
    IdentityViolation,
    NotAnIdeal,
    IdealOutOfRange,
    UnknownName,
    MalformedCoalgebra,
    NotCoalgebraMorphism,
    NotEquivariant,
    InvalidRack,
    NotEquivariantAugmentation,
    NotCocommutative,
    NotCocycle,
    NotAugmentationIdeal,
    NonTerminating,
    TooLarge,
    CapExceeded,
  };

  Error(Code code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Code code() const { return code_; }

 private:
  Code code_;
};

}  // namespace rackbi
