#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <string>

namespace burau {

using Int = boost::multiprecision::cpp_int;

/// Element of Z[t, t^-1], stored as exponent -> coefficient with no zero
/// coefficients (canonical form). All arithmetic is exact; equality is map
/// equality.
class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly constant(Int c);
  static LaurentPoly t_power(int e, Int c = 1);
  static LaurentPoly t() { return t_power(1); }
  static LaurentPoly one() { return constant(1); }

  bool is_zero() const { return coeff_.empty(); }
  const std::map<int, Int>& terms() const { return coeff_; }
  Int coefficient(int e) const;

  /// Largest exponent with nonzero coefficient; throws on the zero polynomial.
  int degree() const;
  int low_degree() const;

  /// If the polynomial is c*t^e, returns (e, c).
  std::optional<std::pair<int, Int>> as_monomial() const;

  Int evaluate_at_minus_one() const;

  LaurentPoly operator-() const;
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.coeff_ == b.coeff_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  std::string str() const;

 private:
  void set(int e, Int c);
  std::map<int, Int> coeff_;
};

enum class SpecialKind { Lambda, Omega, Delta };

/// lambda = -1-t, omega_ell = sum_{i<p^ell} (-t)^i, delta_ell = sum_{i<p} (-t)^{p^(ell-1) i}.
/// Requires an odd prime p; delta requires ell >= 1; lambda ignores ell.
LaurentPoly special_element(SpecialKind kind, long p, int ell);

bool is_odd_prime(long p);

}  // namespace burau
