#include "burau/gamma_set.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace burau {

namespace {

void check_perm(const std::vector<int>& p, int n, const char* name) {
  if (static_cast<int>(p.size()) != n) throw std::invalid_argument(std::string(name) + ": size");
  std::vector<char> seen(n, 0);
  for (int v : p) {
    if (v < 0 || v >= n || seen[v]) throw std::invalid_argument(std::string(name) + ": not a permutation");
    seen[v] = 1;
  }
}

// Cycles of p restricted to an invariant sorted edge set, each starting at its
// minimal element, ordered by minimal element.
std::vector<std::vector<int>> cycles_on(const std::vector<int>& p, const std::vector<int>& orbit,
                                        const std::function<int(int)>& step) {
  (void)p;
  std::vector<std::vector<int>> out;
  std::vector<char> used;
  std::map<int, int> pos;
  for (size_t i = 0; i < orbit.size(); ++i) pos[orbit[i]] = static_cast<int>(i);
  used.assign(orbit.size(), 0);
  for (size_t i = 0; i < orbit.size(); ++i) {
    if (used[i]) continue;
    std::vector<int> cyc;
    int e = orbit[i];
    while (true) {
      auto it = pos.find(e);
      if (it == pos.end()) throw std::logic_error("cycles_on: edge set not invariant");
      if (used[it->second]) break;
      used[it->second] = 1;
      cyc.push_back(e);
      e = step(e);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

}  // namespace

void GammaSet::validate() const {
  check_perm(perm_x, n, "perm_x");
  check_perm(perm_y, n, "perm_y");
  for (int e = 0; e < n; ++e) {
    if (perm_x[perm_x[perm_x[e]]] != e) throw std::invalid_argument("GammaSet: X^3 != id");
    if (perm_y[perm_y[e]] != e) throw std::invalid_argument("GammaSet: Y^2 != id");
  }
  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    throw std::invalid_argument("GammaSet: label count");
}

std::vector<std::vector<int>> orbit_partition(const GammaSet& g) {
  std::vector<int> parent(g.n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  for (int e = 0; e < g.n; ++e) {
    unite(e, g.perm_x[e]);
    unite(e, g.perm_y[e]);
  }
  std::map<int, std::vector<int>> groups;
  for (int e = 0; e < g.n; ++e) groups[find(e)].push_back(e);
  std::vector<std::vector<int>> out;
  out.reserve(groups.size());
  for (auto& [root, edges] : groups) out.push_back(std::move(edges));
  return out;
}

Cells cells(const GammaSet& g, const std::vector<int>& orbit) {
  Cells c;
  c.black = cycles_on(g.perm_x, orbit, [&](int e) { return g.perm_x[e]; });
  c.white = cycles_on(g.perm_y, orbit, [&](int e) { return g.perm_y[e]; });
  c.regions = cycles_on(g.perm_x, orbit, [&](int e) { return g.yx(e); });
  for (const auto& cyc : c.black)
    if (cyc.size() != 1 && cyc.size() != 3) throw std::logic_error("black cell size not in {1,3}");
  for (const auto& cyc : c.white)
    if (cyc.size() != 1 && cyc.size() != 2) throw std::logic_error("white cell size not in {1,2}");
  return c;
}

Rational euler_char(const GammaSet& g, const std::vector<int>& orbit) {
  Cells c = cells(g, orbit);
  long long e = static_cast<long long>(orbit.size());
  Rational first = Rational(static_cast<long long>(c.black.size() + c.white.size())) -
                   Rational(e) + Rational(static_cast<long long>(c.regions.size()));
  long long fixed_x = 0, fixed_y = 0;
  for (const auto& cyc : c.black) fixed_x += cyc.size() == 1;
  for (const auto& cyc : c.white) fixed_y += cyc.size() == 1;
  Rational second = Rational(-e, 6) + Rational(static_cast<long long>(c.regions.size())) +
                    Rational(2 * fixed_x, 3) + Rational(fixed_y, 2);
  if (first != second) throw std::logic_error("euler_char: formula forms disagree");
  return first;
}

std::string Signature::str() const {
  std::string s = "index " + std::to_string(index) + ", genus " + std::to_string(genus) +
                  ", nu3 " + std::to_string(nu3) + ", nu2 " + std::to_string(nu2) + ", cusps {";
  for (size_t i = 0; i < cusp_widths.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(cusp_widths[i]);
  }
  return s + "}";
}

Signature signature(const GammaSet& g, const std::vector<int>& orbit) {
  Cells c = cells(g, orbit);
  Signature s;
  s.index = static_cast<long long>(orbit.size());
  for (const auto& cyc : c.black) s.nu3 += cyc.size() == 1;
  for (const auto& cyc : c.white) s.nu2 += cyc.size() == 1;
  for (const auto& cyc : c.regions) s.cusp_widths.push_back(static_cast<long long>(cyc.size()));
  std::sort(s.cusp_widths.begin(), s.cusp_widths.end());
  long long total = 0;
  for (long long w : s.cusp_widths) total += w;
  if (total != s.index) throw std::logic_error("signature: cusp widths do not sum to index");
  Rational chi = euler_char(g, orbit);
  Rational genus = (Rational(2) - chi) * Rational(1, 2);
  if (!genus.is_integer() || genus.num < 0) throw std::logic_error("signature: bad genus");
  s.genus = genus.num;
  return s;
}

std::optional<std::vector<int>> iso_gamma_sets(const GammaSet& g1, const GammaSet& g2,
                                               const std::vector<int>& orbit1,
                                               const std::vector<int>& orbit2) {
  if (orbit1.size() != orbit2.size()) return std::nullopt;
  if (orbit1.empty()) return std::vector<int>{};
  int anchor = orbit1[0];
  for (int target : orbit2) {
    // Propagate the anchor choice; a transitive orbit leaves no freedom.
    std::map<int, int> f;
    f[anchor] = target;
    std::vector<int> queue{anchor};
    bool ok = true;
    while (!queue.empty() && ok) {
      int e = queue.back();
      queue.pop_back();
      const int img = f[e];
      const std::pair<int, int> steps[2] = {{g1.perm_x[e], g2.perm_x[img]},
                                            {g1.perm_y[e], g2.perm_y[img]}};
      for (auto [src, dst] : steps) {
        auto it = f.find(src);
        if (it == f.end()) {
          f[src] = dst;
          queue.push_back(src);
        } else if (it->second != dst) {
          ok = false;
          break;
        }
      }
    }
    if (!ok || f.size() != orbit1.size()) continue;
    // Check bijectivity onto orbit2.
    std::vector<int> image;
    image.reserve(f.size());
    for (auto& [src, dst] : f) image.push_back(dst);
    std::sort(image.begin(), image.end());
    if (image != orbit2) continue;
    std::vector<int> out;
    out.reserve(orbit1.size());
    for (int e : orbit1) out.push_back(f.at(e));
    return out;
  }
  return std::nullopt;
}

CoveringData covering_data(const std::function<int(int)>& f, const GammaSet& g1,
                           const GammaSet& g2, const std::vector<int>& orbit1,
                           const std::vector<int>& orbit2) {
  CoveringData out;
  std::vector<char> hit(g2.n, 0);
  for (int e : orbit1) {
    int img = f(e);
    if (img < 0 || img >= g2.n) {
      out.failure = "image out of range";
      return out;
    }
    hit[img] = 1;
    if (f(g1.perm_x[e]) != g2.perm_x[img]) {
      out.failure = "not X-equivariant at edge " + std::to_string(e);
      return out;
    }
    if (f(g1.perm_y[e]) != g2.perm_y[img]) {
      out.failure = "not Y-equivariant at edge " + std::to_string(e);
      return out;
    }
  }
  for (int e : orbit2)
    if (!hit[e]) {
      out.failure = "not surjective onto orbit2";
      return out;
    }

  Cells below = cells(g2, orbit2);
  Cells above = cells(g1, orbit1);
  std::map<int, long long> below_size;  // region root edge -> size
  std::map<int, int> region_of;         // edge -> region root, downstairs
  for (const auto& cyc : below.regions) {
    below_size[cyc[0]] = static_cast<long long>(cyc.size());
    for (int e : cyc) region_of[e] = cyc[0];
  }
  std::map<int, long long> index_of;
  out.regular = true;
  for (const auto& cyc : above.regions) {
    int root_below = region_of.at(f(cyc[0]));
    long long idx = static_cast<long long>(cyc.size()) / below_size.at(root_below);
    if (idx * below_size.at(root_below) != static_cast<long long>(cyc.size())) {
      out.failure = "region size not a multiple of its image";
      return out;
    }
    auto it = index_of.find(root_below);
    if (it == index_of.end())
      index_of[root_below] = idx;
    else if (it->second != idx)
      out.regular = false;  // ramification differs between sheets
  }
  out.is_covering = true;
  if (out.regular)
    for (auto& [root, idx] : index_of) out.region_index.emplace_back(root, idx);
  return out;
}

}  // namespace burau
