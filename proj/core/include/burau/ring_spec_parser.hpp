#pragma once

#include <stdexcept>
#include <string>

#include "burau/finite_ring.hpp"

namespace burau {

/// Syntax error with the byte offset into the input text.
struct ParseError : std::runtime_error {
  size_t offset;
  ParseError(const std::string& msg, size_t off)
      : std::runtime_error(msg + " (at byte " + std::to_string(off) + ")"), offset(off) {}
};

/// Grammar (whitespace-insensitive, 'l' is lambda = -1-t):
///   spec := base "[l]/(" rel {"," rel} ")"
///   base := "GF(" p ")" | "Z(" n ")" | "Z(" p "^" k ")"     (n must be p^k)
///   rel  := integer polynomial in l over + - * ^
/// Examples: "GF(7)[l]/(l^2)", "Z(9)[l]/(3*l, l^2)", "Z(25)[l]/(l-5)".
RingSpec parse_ring_spec(const std::string& text);

/// Canonical form: terms in descending degree, "*" between coefficient and
/// monomial, no unit coefficients written. parse(print(spec)) == spec.
std::string print_ring_spec(const RingSpec& spec);

}  // namespace burau
