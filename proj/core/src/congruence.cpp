#include "burau/congruence.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace burau {

namespace {

long mod(long long v, long n) {
  long r = static_cast<long>(v % n);
  return r < 0 ? r + n : r;
}

struct Vec2 {
  long c, d;
  bool operator<(const Vec2& o) const { return std::tie(c, d) < std::tie(o.c, o.d); }
  bool operator==(const Vec2& o) const { return c == o.c && d == o.d; }
};

Vec2 act_vec(const Vec2& v, const std::array<long, 4>& m, long n) {
  // row vector times matrix: (c d) * [a b; c d]
  return {mod(static_cast<long long>(v.c) * m[0] + static_cast<long long>(v.d) * m[2], n),
          mod(static_cast<long long>(v.c) * m[1] + static_cast<long long>(v.d) * m[3], n)};
}

std::vector<long> units_mod(long n) {
  std::vector<long> u;
  for (long a = 1; a < n; ++a)
    if (std::gcd(a, n) == 1) u.push_back(a);
  return u;
}

bool primitive(const Vec2& v, long n) { return std::gcd(std::gcd(v.c, v.d), n) == 1; }

Vec2 canon_gamma0(const Vec2& v, long n, const std::vector<long>& units) {
  Vec2 best = v;
  for (long u : units) {
    Vec2 w{mod(static_cast<long long>(u) * v.c, n), mod(static_cast<long long>(u) * v.d, n)};
    best = std::min(best, w);
  }
  return best;
}

Vec2 canon_gamma1(const Vec2& v, long n) {
  Vec2 neg{mod(-v.c, n), mod(-v.d, n)};
  return std::min(v, neg);
}

struct Mat2 {
  std::array<long, 4> m;
  bool operator<(const Mat2& o) const { return m < o.m; }
  bool operator==(const Mat2& o) const { return m == o.m; }
};

Mat2 canon_psl(Mat2 a, long n) {
  Mat2 neg{{mod(-a.m[0], n), mod(-a.m[1], n), mod(-a.m[2], n), mod(-a.m[3], n)}};
  return std::min(a, neg);
}

Mat2 mat_mul(const Mat2& a, const std::array<long, 4>& b, long n) {
  return Mat2{{mod(static_cast<long long>(a.m[0]) * b[0] + static_cast<long long>(a.m[1]) * b[2], n),
               mod(static_cast<long long>(a.m[0]) * b[1] + static_cast<long long>(a.m[1]) * b[3], n),
               mod(static_cast<long long>(a.m[2]) * b[0] + static_cast<long long>(a.m[3]) * b[2], n),
               mod(static_cast<long long>(a.m[2]) * b[1] + static_cast<long long>(a.m[3]) * b[3], n)}};
}

constexpr std::array<long, 4> kX{0, 1, -1, 1};
constexpr std::array<long, 4> kY{0, -1, 1, 0};

// Atomic coset space: states with id lookup and the two generator actions.
struct AtomicSpace {
  std::vector<int> x, y;
  std::vector<std::string> labels;
  int identity = -1;  // state of the identity coset
};

AtomicSpace build_atomic(const CongruenceSpec& s) {
  const long n = s.level;
  AtomicSpace out;
  if (s.kind == CongruenceSpec::Kind::Gamma0 || s.kind == CongruenceSpec::Kind::Gamma1) {
    const bool g0 = s.kind == CongruenceSpec::Kind::Gamma0;
    std::vector<long> units = units_mod(n);
    auto canon = [&](const Vec2& v) { return g0 ? canon_gamma0(v, n, units) : canon_gamma1(v, n); };
    std::map<Vec2, int> id;
    std::vector<Vec2> reps;
    for (long c = 0; c < n; ++c)
      for (long d = 0; d < n; ++d) {
        Vec2 v{c, d};
        if (!primitive(v, n)) continue;
        Vec2 cv = canon(v);
        if (id.emplace(cv, static_cast<int>(reps.size())).second) reps.push_back(cv);
      }
    out.x.resize(reps.size());
    out.y.resize(reps.size());
    for (size_t i = 0; i < reps.size(); ++i) {
      out.x[i] = id.at(canon(act_vec(reps[i], kX, n)));
      out.y[i] = id.at(canon(act_vec(reps[i], kY, n)));
      out.labels.push_back("(" + std::to_string(reps[i].c) + ":" + std::to_string(reps[i].d) + ")");
    }
    out.identity = id.at(canon(Vec2{0, 1}));
    return out;
  }
  // GammaFull: SL(2, Z/N) mod +-1.
  std::map<Mat2, int> id;
  std::vector<Mat2> reps;
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b)
      for (long c = 0; c < n; ++c)
        for (long d = 0; d < n; ++d) {
          if (mod(static_cast<long long>(a) * d - static_cast<long long>(b) * c, n) != 1 % n) continue;
          Mat2 m = canon_psl(Mat2{{a, b, c, d}}, n);
          if (id.emplace(m, static_cast<int>(reps.size())).second) reps.push_back(m);
        }
  out.x.resize(reps.size());
  out.y.resize(reps.size());
  for (size_t i = 0; i < reps.size(); ++i) {
    out.x[i] = id.at(canon_psl(mat_mul(reps[i], kX, n), n));
    out.y[i] = id.at(canon_psl(mat_mul(reps[i], kY, n), n));
    out.labels.push_back("[" + std::to_string(reps[i].m[0]) + " " + std::to_string(reps[i].m[1]) +
                         ";" + std::to_string(reps[i].m[2]) + " " + std::to_string(reps[i].m[3]) +
                         "]");
  }
  out.identity = id.at(canon_psl(Mat2{{1, 0, 0, 1}}, n));
  return out;
}

GammaSet from_atomic(const AtomicSpace& a) {
  GammaSet g;
  g.n = static_cast<int>(a.x.size());
  g.perm_x = a.x;
  g.perm_y = a.y;
  g.labels = a.labels;
  g.validate();
  return g;
}

}  // namespace

CongruenceSpec CongruenceSpec::intersection(std::vector<CongruenceSpec> ps) {
  if (ps.empty()) throw std::invalid_argument("CongruenceSpec: empty intersection");
  CongruenceSpec s;
  s.kind = Kind::Intersection;
  s.level = 1;
  for (const auto& p : ps) s.level = std::lcm(s.level, p.level);
  s.parts = std::move(ps);
  return s;
}

std::string CongruenceSpec::str() const {
  switch (kind) {
    case Kind::Gamma0: return "Gamma0(" + std::to_string(level) + ")";
    case Kind::Gamma1: return "Gamma1(" + std::to_string(level) + ")";
    case Kind::GammaFull: return "Gamma(" + std::to_string(level) + ")";
    case Kind::Intersection: {
      std::string s;
      for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += "&";
        s += parts[i].str();
      }
      return s;
    }
  }
  return "";
}

CongruenceSpec CongruenceSpec::parse(const std::string& text) {
  std::vector<CongruenceSpec> parts;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t amp = text.find('&', pos);
    std::string tok = text.substr(pos, amp == std::string::npos ? amp : amp - pos);
    size_t open = tok.find('(');
    size_t close = tok.rfind(')');
    if (open == std::string::npos || close == std::string::npos || close < open)
      throw std::invalid_argument("CongruenceSpec: cannot parse '" + tok + "'");
    std::string name = tok.substr(0, open);
    long level = std::stol(tok.substr(open + 1, close - open - 1));
    if (level < 1) throw std::invalid_argument("CongruenceSpec: level must be positive");
    CongruenceSpec s;
    if (name == "Gamma0")
      s = gamma0(level);
    else if (name == "Gamma1")
      s = gamma1(level);
    else if (name == "Gamma")
      s = full(level);
    else
      throw std::invalid_argument("CongruenceSpec: unknown group '" + name + "'");
    parts.push_back(s);
    if (amp == std::string::npos) break;
    pos = amp + 1;
  }
  if (parts.empty()) throw std::invalid_argument("CongruenceSpec: empty");
  if (parts.size() == 1) return parts[0];
  return intersection(std::move(parts));
}

GammaSet coset_gamma_set(const CongruenceSpec& spec) {
  if (spec.level < 1) throw std::invalid_argument("coset_gamma_set: level must be positive");
  if (spec.kind != CongruenceSpec::Kind::Intersection) return from_atomic(build_atomic(spec));

  // Orbit of the tuple of identity cosets in the product action.
  std::vector<AtomicSpace> spaces;
  for (const auto& p : spec.parts) {
    if (p.kind == CongruenceSpec::Kind::Intersection)
      throw std::invalid_argument("coset_gamma_set: nested intersections are flattened by parse");
    spaces.push_back(build_atomic(p));
  }
  using Tuple = std::vector<int>;
  Tuple start;
  for (const auto& s : spaces) start.push_back(s.identity);
  std::map<Tuple, int> id;
  std::vector<Tuple> reps;
  id[start] = 0;
  reps.push_back(start);
  std::vector<int> px, py;
  for (size_t i = 0; i < reps.size(); ++i) {
    Tuple cur = reps[i];
    Tuple ix(cur.size()), iy(cur.size());
    for (size_t j = 0; j < cur.size(); ++j) {
      ix[j] = spaces[j].x[cur[j]];
      iy[j] = spaces[j].y[cur[j]];
    }
    for (Tuple* img : {&ix, &iy}) {
      if (id.emplace(*img, static_cast<int>(reps.size())).second) reps.push_back(*img);
    }
    px.push_back(id.at(ix));
    py.push_back(id.at(iy));
  }
  GammaSet g;
  g.n = static_cast<int>(reps.size());
  g.perm_x = px;
  g.perm_y = py;
  for (const auto& r : reps) {
    std::string lab;
    for (size_t j = 0; j < r.size(); ++j) {
      if (j) lab += "x";
      lab += spaces[j].labels[r[j]];
    }
    g.labels.push_back(lab);
  }
  g.validate();
  return g;
}

}  // namespace burau
