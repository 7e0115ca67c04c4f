#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace burau {

/// Presentation of a finite quotient of Z[t,t^-1] by an ideal primary to
/// <p, t+1>, written in lambda = -1-t: coefficients live in Z/p^base_exp and
/// the listed integer polynomials in lambda generate the rest of the ideal.
struct RingSpec {
  long p = 0;
  int base_exp = 1;
  std::vector<std::vector<long long>> relations;  // coefficient vectors, low degree first
  std::string text;                               // canonical source form, informational
};

struct BuildError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Finite local ring R = Lambda/I with nilpotent maximal ideal m = <p, lambda>
/// and residue field F_p. Elements are canonical coefficient vectors on the
/// monomial basis lambda^j, j < nil, with 0 <= c_j < order(j). Immutable after
/// build; all element operations are const.
class Ring {
 public:
  using Elem = std::vector<long long>;

  static Ring build(const RingSpec& spec);

  long p() const { return p_; }
  int base_exp() const { return base_exp_; }
  int nil() const { return nil_; }
  const std::vector<long long>& column_orders() const { return orders_; }
  long long size() const { return size_; }
  long long m_size() const { return size_ / p_; }
  long long unit_count() const { return size_ - m_size(); }
  const std::string& spec_text() const { return text_; }

  Elem zero() const { return Elem(nil_, 0); }
  Elem one() const { return from_int(1); }
  Elem lambda() const;
  Elem t() const;  // -1 - lambda
  Elem from_int(long long v) const;

  bool is_zero(const Elem& a) const;
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem pow(const Elem& a, long long e) const;
  /// Reduces an arbitrary integer coefficient vector (degree < 2*nil) to
  /// canonical form.
  Elem reduce(std::vector<long long> v) const;

  bool is_unit(const Elem& a) const { return a.empty() ? false : a[0] % p_ != 0; }
  bool in_m(const Elem& a) const { return !is_unit(a); }
  Elem inverse(const Elem& a) const;  // throws BuildError on non-units

  long long elem_index(const Elem& a) const;
  Elem elem_from_index(long long idx) const;

  long long t_order() const;
  /// index -> index of t * element; built on first use.
  const std::vector<uint32_t>& t_table() const;
  /// Indices of the elements of m, ascending.
  std::vector<long long> m_indices() const;
  /// Element indices of the cyclic subgroups <t> and <1+lambda>.
  const std::unordered_set<long long>& t_subgroup() const;
  const std::unordered_set<long long>& one_plus_lambda_subgroup() const;

  Elem omega(int ell) const;
  Elem delta(int ell) const;
  /// Least ell with omega_ell * a * (a - lambda) = 0.
  int ell0(const Elem& a) const;
  /// Common value of ell0 on units; also the least ell with omega_ell = 0.
  int ell0_unit() const;
  /// Least ell' such that -(1 + omega_{ell0(m)+ell} * (lambda - m)) lies in
  /// <t> for all ell >= ell'; the simplified membership test in <1+lambda> is
  /// computed alongside and asserted to agree.
  int ell0_prime(const Elem& m) const;
  /// Unique factorization u = u1 * u2 with u1 = 1 mod m and ord(u2) | p-1.
  std::pair<Elem, Elem> unit_decompose(const Elem& u) const;

  std::string elem_str(const Elem& a) const;  // polynomial in l

 private:
  Ring() = default;
  void ensure_cached() const;

  long p_ = 0;
  int base_exp_ = 1;
  int nil_ = 0;
  long long size_ = 1;
  std::vector<long long> orders_;               // d_j for j < nil
  std::vector<std::vector<long long>> rows_;    // reduction row for column j < 2*nil
  std::vector<long long> strides_;
  std::string text_;

  mutable std::vector<uint32_t> t_table_;
  mutable long long t_order_ = 0;
  mutable std::unordered_set<long long> t_subgroup_;
  mutable std::unordered_set<long long> opl_subgroup_;
  mutable std::vector<Elem> omegas_;  // cached omega_0..; one past the first zero
};

}  // namespace burau
