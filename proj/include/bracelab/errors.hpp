#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace bracelab {

/// Base class for every error raised by the library.
struct brace_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A configured resource limit (order cap, enumeration cap, search budget
/// used as a hard limit) was exceeded.
struct cap_exceeded : brace_error {
  using brace_error::brace_error;
};

/// A certified internal invariant failed. This never indicates bad input;
/// it indicates a bug in the engine itself and should abort the computation.
struct internal_error : brace_error {
  using brace_error::brace_error;
};

/// Table validation failure with a machine-readable reason and a witness.
/// Witness slots that do not apply are -1.
struct validation_error : brace_error {
  enum class Kind {
    malformed,          // wrong shape or out-of-range entry
    add_not_group,      // addition table fails a group axiom
    add_not_abelian,    // addition table is a group but not commutative
    mul_not_group,      // multiplication table fails a group axiom
    identity_not_zero,  // shared identity exists but is not element 0
    identities_differ,  // additive and multiplicative identities disagree
    brace_law,          // a(b+c) != ab + ac - a for the witness triple
  };

  Kind kind;
  std::array<int, 3> witness;

  validation_error(Kind k, const std::string& msg,
                   std::array<int, 3> w = {-1, -1, -1})
      : brace_error(msg), kind(k), witness(w) {}
};

}  // namespace bracelab
