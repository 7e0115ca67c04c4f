#pragma once

#include <string>
#include <vector>

#include "burau/gamma_set.hpp"

namespace burau {

/// Description of a congruence subgroup whose coset set we can realize by a
/// standard faithful action:
///   Gamma0(N)  on the projective line over Z/N,
///   Gamma1(N)  on +-classes of primitive order-N vectors in (Z/N)^2,
///   GammaFull(N) on SL(2, Z/N) modulo +-1,
///   intersections as the orbit of the identity-coset tuple in the product.
struct CongruenceSpec {
  enum class Kind { Gamma0, Gamma1, GammaFull, Intersection };
  Kind kind = Kind::GammaFull;
  long level = 1;
  std::vector<CongruenceSpec> parts;  // nonempty iff kind == Intersection

  static CongruenceSpec gamma0(long n) { return {Kind::Gamma0, n, {}}; }
  static CongruenceSpec gamma1(long n) { return {Kind::Gamma1, n, {}}; }
  static CongruenceSpec full(long n) { return {Kind::GammaFull, n, {}}; }
  static CongruenceSpec intersection(std::vector<CongruenceSpec> ps);

  std::string str() const;
  /// Parses "Gamma0(25)&Gamma1(5)", "Gamma(3)", "Gamma1(7)", ...
  static CongruenceSpec parse(const std::string& text);
};

/// Right coset action of the modular group on K\Gamma via the reductions of
/// the integer matrices X = [0 1; -1 1] and Y = [0 -1; 1 0] mod N. Transitive
/// by construction for the atomic kinds; intersections are built as the orbit
/// of the identity cosets inside the product action.
GammaSet coset_gamma_set(const CongruenceSpec& spec);

}  // namespace burau
