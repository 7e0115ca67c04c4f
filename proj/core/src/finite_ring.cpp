#include "burau/finite_ring.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <numeric>

#include "burau/laurent.hpp"

namespace burau {

namespace {

using Big = boost::multiprecision::cpp_int;
using BigRow = std::vector<Big>;

int trailing(const BigRow& v) {
  for (int j = static_cast<int>(v.size()) - 1; j >= 0; --j)
    if (v[j] != 0) return j;
  return -1;
}

// g = a*x + b*y with g = gcd(x,y) > 0.
void egcd(const Big& x, const Big& y, Big& g, Big& a, Big& b) {
  if (y == 0) {
    g = x < 0 ? Big(-x) : x;
    a = x < 0 ? -1 : 1;
    b = 0;
    return;
  }
  Big g2, a2, b2;
  egcd(y, x % y, g2, a2, b2);
  g = g2;
  a = b2;
  b = a2 - (x / y) * b2;
}

// Row echelon by trailing column over Z: returns one pivot row per column,
// pivot positive, entries left of each pivot reduced modulo the lower pivots.
std::vector<BigRow> hermite_rows(std::vector<BigRow> rows, int m) {
  std::vector<BigRow> pivot(m);
  for (auto& v : rows) {
    int j = trailing(v);
    while (j >= 0) {
      if (pivot[j].empty()) {
        if (v[j] < 0)
          for (auto& c : v) c = -c;
        pivot[j] = std::move(v);
        break;
      }
      Big g, a, b;
      egcd(pivot[j][j], v[j], g, a, b);
      BigRow np(j + 1, 0), nv(j + 1, 0);
      Big pj = pivot[j][j] / g, vj = v[j] / g;
      for (int k = 0; k <= j; ++k) {
        Big pk = k < static_cast<int>(pivot[j].size()) ? pivot[j][k] : Big(0);
        Big vk = k < static_cast<int>(v.size()) ? v[k] : Big(0);
        np[k] = a * pk + b * vk;
        nv[k] = pj * vk - vj * pk;
      }
      pivot[j] = std::move(np);
      v = std::move(nv);
      j = trailing(v);
    }
  }
  for (int j = 0; j < m; ++j) {
    if (pivot[j].empty()) continue;
    pivot[j].resize(j + 1, 0);
    for (int k = j - 1; k >= 0; --k) {
      if (pivot[k].empty() || pivot[j][k] == 0) continue;
      Big q = pivot[j][k] / pivot[k][k];
      if (pivot[j][k] - q * pivot[k][k] < 0) q -= 1;  // floor
      for (int i = 0; i <= k; ++i) pivot[j][i] -= q * pivot[k][i];
    }
  }
  return pivot;
}

BigRow reduce_big(BigRow v, const std::vector<BigRow>& pivot) {
  for (int j = static_cast<int>(v.size()) - 1; j >= 0; --j) {
    if (v[j] == 0) continue;
    const BigRow& P = pivot[j];
    Big q = v[j] / P[j];
    if (v[j] - q * P[j] < 0) q -= 1;
    if (q == 0) continue;
    for (int k = 0; k <= j; ++k) v[k] -= q * P[k];
  }
  return v;
}

struct WindowData {
  int nil = 0;
  std::vector<Big> orders;
  std::vector<BigRow> rows;
  bool operator==(const WindowData& o) const {
    return nil == o.nil && orders == o.orders && rows == o.rows;
  }
};

}  // namespace

Ring Ring::build(const RingSpec& spec) {
  if (spec.p == 2) throw BuildError("p = 2 is excluded");
  if (!is_odd_prime(spec.p)) throw BuildError("coefficient prime must be an odd prime");
  if (spec.base_exp < 1) throw BuildError("base exponent must be >= 1");
  for (const auto& r : spec.relations) {
    if (r.empty()) continue;
    if (r[0] % spec.p != 0)
      throw BuildError("relation '" + std::to_string(r[0]) +
                       "+...' has a unit constant term: ideal is not contained in <p, lambda>");
  }

  Big pk = 1;
  for (int i = 0; i < spec.base_exp; ++i) pk *= spec.p;

  int max_deg = 1;
  for (const auto& r : spec.relations) max_deg = std::max(max_deg, static_cast<int>(r.size()));
  int window = std::max({8, 2 * max_deg + 2, 2 * spec.base_exp + 2});

  WindowData prev;
  bool have_prev = false;
  for (int rounds = 0; rounds < 8; ++rounds, window *= 2) {
    std::vector<BigRow> rows;
    for (int j = 0; j < window; ++j) {
      BigRow row(j + 1, 0);
      row[j] = pk;
      rows.push_back(std::move(row));
    }
    for (const auto& r : spec.relations) {
      if (r.empty()) continue;
      int deg = static_cast<int>(r.size()) - 1;
      for (int shift = 0; shift + deg < window; ++shift) {
        BigRow row(shift + deg + 1, 0);
        for (int k = 0; k <= deg; ++k) row[shift + k] = r[k];
        rows.push_back(std::move(row));
      }
    }
    std::vector<BigRow> pivot = hermite_rows(std::move(rows), window);

    // Least n with lambda^n in the lattice (a genuine ideal membership: the
    // lattice rows are honest ideal elements, no degree truncation).
    int nil = -1;
    for (int n = 0; n < window; ++n) {
      BigRow v(n + 1, 0);
      v[n] = 1;
      if (trailing(reduce_big(std::move(v), pivot)) < 0) {
        nil = n;
        break;
      }
    }
    if (nil == 0) throw BuildError("improper ideal: 1 lies in it");
    if (nil < 0 || 2 * nil > window) {
      have_prev = false;
      continue;  // window too small to certify nilpotency and products
    }

    WindowData cur;
    cur.nil = nil;
    for (int j = 0; j < 2 * nil && j < window; ++j) {
      cur.orders.push_back(pivot[j][j]);
      cur.rows.push_back(pivot[j]);
    }
    if (have_prev && prev == cur) {
      Ring R;
      R.p_ = spec.p;
      R.base_exp_ = spec.base_exp;
      R.nil_ = nil;
      R.text_ = spec.text;
      R.size_ = 1;
      for (int j = 0; j < nil; ++j) {
        Big d = cur.orders[j];
        // orders divide p^base_exp, so they are p-powers
        Big chk = d;
        while (chk % spec.p == 0) chk /= spec.p;
        if (chk != 1)
          throw BuildError("internal: column order is not a p-power");
        R.orders_.push_back(static_cast<long long>(d));
        R.size_ *= static_cast<long long>(d);
        if (R.size_ > (1LL << 40)) throw BuildError("ring too large");
      }
      for (const auto& row : cur.rows) {
        std::vector<long long> r;
        r.reserve(row.size());
        for (const Big& c : row) r.push_back(static_cast<long long>(c));
        R.rows_.push_back(std::move(r));
      }
      R.strides_.resize(nil);
      long long s = 1;
      for (int j = 0; j < nil; ++j) {
        R.strides_[j] = s;
        s *= R.orders_[j];
      }
      return R;
    }
    prev = std::move(cur);
    have_prev = true;
  }
  throw BuildError("lambda is not nilpotent modulo the ideal: not m-primary");
}

Ring::Elem Ring::reduce(std::vector<long long> v) const {
  if (static_cast<int>(v.size()) > 2 * nil_ - 1 && nil_ > 0) {
    for (size_t j = 2 * nil_ - 1; j < v.size(); ++j)
      if (v[j] != 0) throw BuildError("reduce: vector degree out of range");
    v.resize(2 * nil_ - 1);
  }
  for (int j = static_cast<int>(v.size()) - 1; j >= 0; --j) {
    if (v[j] == 0) continue;
    const auto& P = rows_[j];
    long long q = v[j] / P[j];
    if (v[j] - q * P[j] < 0) q -= 1;
    if (q == 0) continue;
    for (int k = 0; k <= j; ++k) v[k] -= q * P[k];
  }
  v.resize(nil_, 0);
  return v;
}

Ring::Elem Ring::from_int(long long x) const {
  std::vector<long long> v(1, x);
  return reduce(std::move(v));
}

Ring::Elem Ring::lambda() const {
  std::vector<long long> v{0, 1};
  return reduce(std::move(v));
}

Ring::Elem Ring::t() const {
  std::vector<long long> v{-1, -1};
  return reduce(std::move(v));
}

bool Ring::is_zero(const Elem& a) const {
  return std::all_of(a.begin(), a.end(), [](long long c) { return c == 0; });
}

Ring::Elem Ring::add(const Elem& a, const Elem& b) const {
  std::vector<long long> v(nil_);
  for (int j = 0; j < nil_; ++j) v[j] = a[j] + b[j];
  return reduce(std::move(v));
}

Ring::Elem Ring::sub(const Elem& a, const Elem& b) const {
  std::vector<long long> v(nil_);
  for (int j = 0; j < nil_; ++j) v[j] = a[j] - b[j];
  return reduce(std::move(v));
}

Ring::Elem Ring::neg(const Elem& a) const {
  std::vector<long long> v(nil_);
  for (int j = 0; j < nil_; ++j) v[j] = -a[j];
  return reduce(std::move(v));
}

Ring::Elem Ring::mul(const Elem& a, const Elem& b) const {
  std::vector<long long> v(2 * nil_ - 1, 0);
  for (int i = 0; i < nil_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < nil_; ++j) v[i + j] += a[i] * b[j];
  }
  return reduce(std::move(v));
}

Ring::Elem Ring::pow(const Elem& a, long long e) const {
  Elem r = one(), base = a;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

Ring::Elem Ring::inverse(const Elem& a) const {
  if (!is_unit(a)) throw BuildError("inverse of a non-unit");
  // Lift the residue-field inverse through the nilpotent part.
  long long c0 = a[0] % p_;
  long long inv0 = 1;
  while ((inv0 * c0) % p_ != 1) ++inv0;
  Elem x = from_int(inv0);
  for (int it = 0; it < 64; ++it) {
    Elem e = sub(one(), mul(a, x));
    if (is_zero(e)) return x;
    x = add(x, mul(x, e));
  }
  throw BuildError("inverse: iteration failed");
}

long long Ring::elem_index(const Elem& a) const {
  long long idx = 0;
  for (int j = 0; j < nil_; ++j) idx += a[j] * strides_[j];
  return idx;
}

Ring::Elem Ring::elem_from_index(long long idx) const {
  Elem a(nil_);
  for (int j = 0; j < nil_; ++j) {
    a[j] = idx % orders_[j];
    idx /= orders_[j];
  }
  return a;
}

void Ring::ensure_cached() const {
  if (!t_table_.empty()) return;
  if (size_ > (1 << 24)) throw BuildError("ring too large for enumeration tables");
  t_table_.resize(size_);
  const Elem tt = t();
  for (long long i = 0; i < size_; ++i)
    t_table_[i] = static_cast<uint32_t>(elem_index(mul(elem_from_index(i), tt)));
  // cyclic subgroups <t> and <1+lambda>
  long long one_idx = elem_index(one());
  long long cur = one_idx;
  t_order_ = 0;
  do {
    t_subgroup_.insert(cur);
    cur = t_table_[cur];
    ++t_order_;
  } while (cur != one_idx);
  Elem opl = neg(t());  // 1 + lambda = -t
  Elem acc = one();
  do {
    opl_subgroup_.insert(elem_index(acc));
    acc = mul(acc, opl);
  } while (elem_index(acc) != one_idx);
}

long long Ring::t_order() const {
  ensure_cached();
  return t_order_;
}

const std::vector<uint32_t>& Ring::t_table() const {
  ensure_cached();
  return t_table_;
}

const std::unordered_set<long long>& Ring::t_subgroup() const {
  ensure_cached();
  return t_subgroup_;
}

const std::unordered_set<long long>& Ring::one_plus_lambda_subgroup() const {
  ensure_cached();
  return opl_subgroup_;
}

std::vector<long long> Ring::m_indices() const {
  std::vector<long long> out;
  out.reserve(m_size());
  for (long long i = 0; i < size_; ++i)
    if (elem_from_index(i)[0] % p_ == 0) out.push_back(i);
  return out;
}

Ring::Elem Ring::omega(int ell) const {
  if (ell < 0) throw BuildError("omega: ell must be non-negative");
  if (omegas_.empty()) omegas_.push_back(one());
  while (static_cast<int>(omegas_.size()) <= ell) {
    // omega_ell = omega_{ell-1} * delta_ell
    omegas_.push_back(mul(omegas_.back(), delta(static_cast<int>(omegas_.size()))));
  }
  return omegas_[ell];
}

Ring::Elem Ring::delta(int ell) const {
  if (ell < 1) throw BuildError("delta: ell must be >= 1");
  // sum of (-t)^(p^(ell-1) * i) for i < p
  Elem s = neg(t());
  long long e = 1;
  for (int i = 0; i + 1 < ell; ++i) e *= p_;
  Elem step = pow(s, e);
  Elem acc = one(), sum = zero();
  for (long i = 0; i < p_; ++i) {
    sum = add(sum, acc);
    acc = mul(acc, step);
  }
  return sum;
}

int Ring::ell0(const Elem& a) const {
  Elem prod = mul(a, sub(a, lambda()));
  for (int ell = 0; ell < 64; ++ell) {
    if (is_zero(mul(omega(ell), prod))) return ell;
  }
  throw BuildError("ell0: did not stabilize");
}

int Ring::ell0_unit() const {
  int v = ell0(one());
  // independence of the unit, and omega_ell = 0 exactly from here on
  for (int ell = 0; ell < v; ++ell)
    if (is_zero(omega(ell))) throw BuildError("ell0_unit: omega vanished early");
  if (!is_zero(omega(v))) throw BuildError("ell0_unit: omega_ell0 is nonzero");
  return v;
}

int Ring::ell0_prime(const Elem& m) const {
  if (is_unit(m)) throw BuildError("ell0_prime requires an element of m");
  ensure_cached();
  int base = ell0(m);
  Elem diff = sub(lambda(), m);
  int first_t = -1, first_opl = -1;
  for (int ell = 0; ell < 64; ++ell) {
    Elem u = add(one(), mul(omega(base + ell), diff));
    long long neg_idx = elem_index(neg(u));
    long long idx = elem_index(u);
    if (first_t < 0 && t_subgroup_.count(neg_idx)) first_t = ell;
    if (first_opl < 0 && opl_subgroup_.count(idx)) first_opl = ell;
    if (first_t >= 0 || first_opl >= 0) break;
  }
  if (first_t < 0 && first_opl < 0) throw BuildError("ell0_prime: did not stabilize");
  if (first_t != first_opl)
    throw BuildError("ell0_prime: <t> and <1+lambda> criteria disagree");
  return first_t;
}

std::pair<Ring::Elem, Ring::Elem> Ring::unit_decompose(const Elem& u) const {
  if (!is_unit(u)) throw BuildError("unit_decompose of a non-unit");
  long long q = m_size();  // order of the kernel of R* -> F_p*, a p-power
  long long qe = ((q % (p_ - 1)) + (p_ - 1)) % (p_ - 1);
  long long qinv = 1;
  while ((qinv * qe) % (p_ - 1) != 1) ++qinv;
  Elem u2 = pow(pow(u, q), qinv);
  Elem u1 = mul(u, inverse(u2));
  if (!in_m(sub(u1, one()))) throw BuildError("unit_decompose: first factor not in 1+m");
  if (!is_zero(sub(pow(u2, p_ - 1), one())))
    throw BuildError("unit_decompose: second factor order does not divide p-1");
  return {u1, u2};
}

std::string Ring::elem_str(const Elem& a) const {
  std::string s;
  for (int j = 0; j < nil_; ++j) {
    if (a[j] == 0) continue;
    if (!s.empty()) s += "+";
    if (j == 0) {
      s += std::to_string(a[j]);
    } else {
      if (a[j] != 1) s += std::to_string(a[j]) + "*";
      s += (j == 1) ? "l" : "l^" + std::to_string(j);
    }
  }
  return s.empty() ? "0" : s;
}

}  // namespace burau
