#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "burau/rational.hpp"

namespace burau {

/// Finite right action of the modular group, given by the permutations of the
/// two standard generators. perm_x^3 = perm_y^2 = id. Edges are the elements;
/// black vertices are the X-orbits, white vertices the Y-orbits, and regions
/// the YX-orbits, with the YX step defined as Y first, then X.
struct GammaSet {
  int n = 0;
  std::vector<int> perm_x;
  std::vector<int> perm_y;
  std::vector<std::string> labels;  // optional, empty or size n

  int yx(int e) const { return perm_x[perm_y[e]]; }
  void validate() const;  // checks permutation axioms and the relations
};

/// Orbits of <perm_x, perm_y>, each sorted ascending, ordered by minimal edge.
std::vector<std::vector<int>> orbit_partition(const GammaSet& g);

struct Cells {
  // Each cell is a cycle listed in traversal order starting from its minimal
  // edge; cells ordered by minimal edge.
  std::vector<std::vector<int>> black;    // X-cycles, sizes 1 or 3
  std::vector<std::vector<int>> white;    // Y-cycles, sizes 1 or 2
  std::vector<std::vector<int>> regions;  // YX-cycles
};

Cells cells(const GammaSet& g, const std::vector<int>& orbit);

/// Euler characteristic of the (closed-surface) cell structure on an orbit or
/// any invariant edge subset: computed both as
///   #X-orbits + #Y-orbits - #edges + #YX-orbits
/// and as -|E|/6 + #YX-orbits + (2/3)|E^X| + (1/2)|E^Y|; the two forms are
/// asserted equal.
Rational euler_char(const GammaSet& g, const std::vector<int>& orbit);

struct Signature {
  long long index = 0;
  long long genus = 0;
  long long nu3 = 0;  // X-fixed edges
  long long nu2 = 0;  // Y-fixed edges
  std::vector<long long> cusp_widths;  // region sizes, ascending

  friend bool operator==(const Signature& a, const Signature& b) {
    return a.index == b.index && a.genus == b.genus && a.nu3 == b.nu3 && a.nu2 == b.nu2 &&
           a.cusp_widths == b.cusp_widths;
  }
  std::string str() const;
};

/// Signature of a transitive orbit; genus from chi = 2 - 2g.
Signature signature(const GammaSet& g, const std::vector<int>& orbit);

/// Equivariant bijection orbit1 -> orbit2 commuting with both permutations,
/// or nullopt. Anchored backtracking: the image of one edge determines the
/// whole map on a transitive orbit.
std::optional<std::vector<int>> iso_gamma_sets(const GammaSet& g1, const GammaSet& g2,
                                               const std::vector<int>& orbit1,
                                               const std::vector<int>& orbit2);

struct CoveringData {
  bool is_covering = false;
  bool regular = false;  // all regions above a region share one size
  std::string failure;
  // Region ramification indices when regular, one entry per region downstairs
  // keyed by its minimal edge.
  std::vector<std::pair<int, long long>> region_index;
};

/// Verifies f is equivariant from orbit1 onto orbit2; when every region
/// downstairs has equally-sized regions above it, reports the size ratios.
CoveringData covering_data(const std::function<int(int)>& f, const GammaSet& g1,
                           const GammaSet& g2, const std::vector<int>& orbit1,
                           const std::vector<int>& orbit2);

}  // namespace burau
