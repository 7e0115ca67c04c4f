#include "burau/laurent.hpp"

#include <stdexcept>

namespace burau {

void LaurentPoly::set(int e, Int c) {
  if (c == 0)
    coeff_.erase(e);
  else
    coeff_[e] = std::move(c);
}

LaurentPoly LaurentPoly::constant(Int c) { return t_power(0, std::move(c)); }

LaurentPoly LaurentPoly::t_power(int e, Int c) {
  LaurentPoly p;
  p.set(e, std::move(c));
  return p;
}

Int LaurentPoly::coefficient(int e) const {
  auto it = coeff_.find(e);
  return it == coeff_.end() ? Int(0) : it->second;
}

int LaurentPoly::degree() const {
  if (coeff_.empty()) throw std::domain_error("degree of zero polynomial");
  return coeff_.rbegin()->first;
}

int LaurentPoly::low_degree() const {
  if (coeff_.empty()) throw std::domain_error("low degree of zero polynomial");
  return coeff_.begin()->first;
}

std::optional<std::pair<int, Int>> LaurentPoly::as_monomial() const {
  if (coeff_.size() != 1) return std::nullopt;
  return std::make_pair(coeff_.begin()->first, coeff_.begin()->second);
}

Int LaurentPoly::evaluate_at_minus_one() const {
  Int v = 0;
  for (const auto& [e, c] : coeff_) v += (e % 2 == 0) ? c : -c;
  return v;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : coeff_) r.coeff_[e] = -c;
  return r;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  for (const auto& [e, c] : b.coeff_) r.set(e, r.coefficient(e) + c);
  return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  for (const auto& [e, c] : b.coeff_) r.set(e, r.coefficient(e) - c);
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.coeff_)
    for (const auto& [eb, cb] : b.coeff_) r.set(ea + eb, r.coefficient(ea + eb) + ca * cb);
  return r;
}

std::string LaurentPoly::str() const {
  if (coeff_.empty()) return "0";
  std::string s;
  for (const auto& [e, c] : coeff_) {
    if (!s.empty() && c > 0) s += "+";
    if (e == 0) {
      s += c.str();
    } else {
      if (c == -1)
        s += "-";
      else if (c != 1)
        s += c.str() + "*";
      s += (e == 1) ? "t" : "t^" + std::to_string(e);
    }
  }
  return s;
}

bool is_odd_prime(long p) {
  if (p < 3 || p % 2 == 0) return false;
  for (long d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

LaurentPoly special_element(SpecialKind kind, long p, int ell) {
  if (!is_odd_prime(p)) throw std::invalid_argument("special_element: p must be an odd prime");
  if (kind == SpecialKind::Lambda)
    return LaurentPoly::constant(-1) - LaurentPoly::t();
  if (kind == SpecialKind::Delta && ell < 1)
    throw std::invalid_argument("special_element: delta requires ell >= 1");
  if (ell < 0) throw std::invalid_argument("special_element: ell must be non-negative");

  long long step = 1, count = 0;
  if (kind == SpecialKind::Omega) {
    count = 1;
    for (int i = 0; i < ell; ++i) {
      count *= p;
      if (count > 100'000'000) throw std::invalid_argument("special_element: p^ell too large");
    }
    step = 1;
  } else {
    count = p;
    step = 1;
    for (int i = 0; i + 1 < ell; ++i) {
      step *= p;
      if (step > 100'000'000) throw std::invalid_argument("special_element: p^(ell-1) too large");
    }
  }
  // sum of (-t)^(step*i) for i in [0, count)
  LaurentPoly r;
  for (long long i = 0; i < count; ++i) {
    long long e = step * i;
    r = r + LaurentPoly::t_power(static_cast<int>(e), (e % 2 == 0) ? 1 : -1);
  }
  return r;
}

}  // namespace burau
