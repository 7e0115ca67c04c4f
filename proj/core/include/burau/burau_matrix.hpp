#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "burau/laurent.hpp"

namespace burau {

/// 2x2 matrix over Z[t,t^-1]. Products of the generators X, Y, t*1 and their
/// inverses have determinant +-t^k; X^3 = Y^2 = t^3 * 1.
struct BurauMatrix {
  // row-major: [[a, b], [c, d]]
  LaurentPoly a, b, c, d;

  static BurauMatrix identity();
  friend BurauMatrix operator*(const BurauMatrix& m, const BurauMatrix& n);
  friend bool operator==(const BurauMatrix& m, const BurauMatrix& n) {
    return m.a == n.a && m.b == n.b && m.c == n.c && m.d == n.d;
  }
  LaurentPoly det() const { return a * d - b * c; }
};

enum class BurauGen { X, Y, T, Xinv, Yinv, Tinv };

BurauMatrix burau_gen(BurauGen g);

/// Product of generator matrices in word order (left-to-right), matching the
/// right-action composition (a.(gh) = (a.g).h) on row vectors.
BurauMatrix burau_word_eval(std::span<const BurauGen> word);

/// Letter-by-letter abelianization with X -> 2, Y -> 3 (mod 6); T letters are
/// not part of this invariant and are rejected.
int word_ab_mod6(std::span<const BurauGen> word);

/// Element of PSL(2,Z): integer 2x2 matrix of determinant 1 stored with the
/// first nonzero entry in row-major order positive, so equality is plain data
/// comparison.
struct PSL2Elem {
  std::array<long long, 4> m{1, 0, 0, 1};  // [a b; c d]

  PSL2Elem() = default;
  PSL2Elem(long long a, long long b, long long c, long long d);

  static PSL2Elem X() { return PSL2Elem(0, 1, -1, 1); }
  static PSL2Elem Y() { return PSL2Elem(0, -1, 1, 0); }

  friend PSL2Elem operator*(const PSL2Elem& x, const PSL2Elem& y);
  friend bool operator==(const PSL2Elem& x, const PSL2Elem& y) { return x.m == y.m; }
  friend bool operator!=(const PSL2Elem& x, const PSL2Elem& y) { return !(x == y); }
  std::string str() const;
};

/// Evaluation at t = -1 followed by projectivization, paired with the degree
/// of the determinant. Rejects matrices whose determinant is not +-t^k.
std::pair<PSL2Elem, long long> reduce_c_dg(const BurauMatrix& m);

}  // namespace burau
