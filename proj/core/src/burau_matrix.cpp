#include "burau/burau_matrix.hpp"

#include <limits>
#include <stdexcept>

namespace burau {

BurauMatrix BurauMatrix::identity() {
  BurauMatrix m;
  m.a = LaurentPoly::one();
  m.d = LaurentPoly::one();
  return m;
}

BurauMatrix operator*(const BurauMatrix& m, const BurauMatrix& n) {
  BurauMatrix r;
  r.a = m.a * n.a + m.b * n.c;
  r.b = m.a * n.b + m.b * n.d;
  r.c = m.c * n.a + m.d * n.c;
  r.d = m.c * n.b + m.d * n.d;
  return r;
}

BurauMatrix burau_gen(BurauGen g) {
  using LP = LaurentPoly;
  BurauMatrix m;
  switch (g) {
    case BurauGen::X:  // [[0, -t], [t, -t]]
      m.b = LP::t_power(1, -1);
      m.c = LP::t();
      m.d = LP::t_power(1, -1);
      break;
    case BurauGen::Y:  // [[0, -t], [-t^2, 0]]
      m.b = LP::t_power(1, -1);
      m.c = LP::t_power(2, -1);
      break;
    case BurauGen::T:
      m.a = LP::t();
      m.d = LP::t();
      break;
    case BurauGen::Xinv:  // t^-3 * X^2 = [[-t^-1, t^-1], [-t^-1, 0]]
      m.a = LP::t_power(-1, -1);
      m.b = LP::t_power(-1);
      m.c = LP::t_power(-1, -1);
      break;
    case BurauGen::Yinv:  // t^-3 * Y = [[0, -t^-2], [-t^-1, 0]]
      m.b = LP::t_power(-2, -1);
      m.c = LP::t_power(-1, -1);
      break;
    case BurauGen::Tinv:
      m.a = LP::t_power(-1);
      m.d = LP::t_power(-1);
      break;
  }
  return m;
}

BurauMatrix burau_word_eval(std::span<const BurauGen> word) {
  BurauMatrix m = BurauMatrix::identity();
  for (BurauGen g : word) m = m * burau_gen(g);
  return m;
}

int word_ab_mod6(std::span<const BurauGen> word) {
  int ab = 0;
  for (BurauGen g : word) {
    switch (g) {
      case BurauGen::X: ab += 2; break;
      case BurauGen::Xinv: ab -= 2; break;
      case BurauGen::Y: ab += 3; break;
      case BurauGen::Yinv: ab -= 3; break;
      default: throw std::invalid_argument("word_ab_mod6: word must avoid T letters");
    }
  }
  return ((ab % 6) + 6) % 6;
}

PSL2Elem::PSL2Elem(long long a, long long b, long long c, long long d) : m{a, b, c, d} {
  if (a * d - b * c != 1) throw std::invalid_argument("PSL2Elem: determinant must be 1");
  for (long long v : m) {
    if (v > 0) break;
    if (v < 0) {
      for (auto& x : this->m) x = -x;
      break;
    }
  }
}

PSL2Elem operator*(const PSL2Elem& x, const PSL2Elem& y) {
  return PSL2Elem(x.m[0] * y.m[0] + x.m[1] * y.m[2], x.m[0] * y.m[1] + x.m[1] * y.m[3],
                  x.m[2] * y.m[0] + x.m[3] * y.m[2], x.m[2] * y.m[1] + x.m[3] * y.m[3]);
}

std::string PSL2Elem::str() const {
  return "[" + std::to_string(m[0]) + " " + std::to_string(m[1]) + "; " + std::to_string(m[2]) +
         " " + std::to_string(m[3]) + "]";
}

namespace {
long long to_ll(const Int& v) {
  static const Int lo = std::numeric_limits<long long>::min();
  static const Int hi = std::numeric_limits<long long>::max();
  if (v < lo || v > hi) throw std::overflow_error("reduce_c_dg: entry exceeds 64-bit range");
  return static_cast<long long>(v);
}
}  // namespace

std::pair<PSL2Elem, long long> reduce_c_dg(const BurauMatrix& m) {
  auto mono = m.det().as_monomial();
  if (!mono || (mono->second != 1 && mono->second != -1))
    throw std::invalid_argument("reduce_c_dg: determinant is not a unit +-t^k");
  long long dg = mono->first;

  Int a = m.a.evaluate_at_minus_one();
  Int b = m.b.evaluate_at_minus_one();
  Int c = m.c.evaluate_at_minus_one();
  Int d = m.d.evaluate_at_minus_one();
  if (a * d - b * c != 1)
    throw std::invalid_argument("reduce_c_dg: evaluation at t = -1 is not in SL(2,Z)");
  return {PSL2Elem(to_ll(a), to_ll(b), to_ll(c), to_ll(d)), dg};
}

}  // namespace burau
