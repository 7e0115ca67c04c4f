#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "burau/burau_matrix.hpp"
#include "burau/finite_ring.hpp"

namespace burau {

/// Finite module over Lambda, local at <p, t+1>: underlying group
/// (+) Z/p^{k_i} with t acting by an integer matrix T (column convention:
/// column j holds the coordinates of T e_j). Validated so that T is a
/// well-defined invertible endomorphism, 1+T is nilpotent on the group, and
/// the residue space A/mA has dimension 1 (cyclic) or 2 (wheel).
class FiniteModule {
 public:
  using Elem = std::vector<long long>;

  static FiniteModule build(long p, std::vector<int> divisors,
                            std::vector<std::vector<long long>> t_matrix);
  static FiniteModule from_ring(const Ring& ring);

  long p() const { return p_; }
  int rank() const { return static_cast<int>(div_.size()); }
  const std::vector<int>& divisors() const { return div_; }
  long long size() const { return size_; }
  int residue_rank() const { return residue_rank_; }
  const std::vector<std::vector<long long>>& t_matrix() const { return t_; }

  Elem zero() const { return Elem(rank(), 0); }
  bool is_zero(const Elem& a) const;
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem scalar(long long c, const Elem& a) const;
  Elem apply_t(const Elem& a) const;
  Elem apply_t_inv(const Elem& a) const;
  /// f(t) . a for a Laurent polynomial f.
  Elem apply_laurent(const LaurentPoly& f, const Elem& a) const;

  long long elem_index(const Elem& a) const;
  Elem elem_from_index(long long idx) const;
  const std::vector<uint32_t>& t_table() const;      // index -> index of t.a
  const std::vector<uint32_t>& t_inv_table() const;

  long long t_order() const;  // order of the t-action (the depth of stabilizers)

  /// Projection to A/mA (coordinates in F_p^residue_rank); mA = pA + (1+T)A.
  std::vector<long long> residue(const Elem& a) const;

  std::string elem_str(const Elem& a) const;
  std::string str() const;  // short description: p, divisors, t matrix

 private:
  FiniteModule() = default;
  void validate() const;
  void compute_residue();

  long p_ = 0;
  std::vector<int> div_;
  std::vector<long long> mod_;  // p^{k_i}
  long long size_ = 1;
  std::vector<std::vector<long long>> t_, t_inv_;
  int residue_rank_ = 0;
  std::vector<std::vector<long long>> residue_proj_;  // residue_rank x rank, mod p
  std::vector<long long> strides_;
  mutable std::vector<uint32_t> t_table_, t_inv_table_;
  mutable long long t_order_ = 0;
};

using ModPair = std::pair<FiniteModule::Elem, FiniteModule::Elem>;

/// Nakayama test: the pair generates A iff its residues span A/mA.
bool is_generating_pair(const FiniteModule& a, const ModPair& pair);

/// Right action (a1, a2) . [x y; z w] = (x.a1 + z.a2, y.a1 + w.a2), with the
/// Laurent entries acting through t.
ModPair pair_act(const FiniteModule& a, const ModPair& pair, const BurauMatrix& m);

/// Group isomorphism intertwining the t-actions, decided by invariant
/// screening then anchored search. Desk-scale only.
bool module_iso(const FiniteModule& a, const FiniteModule& b);

}  // namespace burau
