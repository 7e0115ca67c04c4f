#include "burau/ring_spec_parser.hpp"

#include <cctype>

#include "burau/laurent.hpp"

namespace burau {

namespace {

using Poly = std::vector<long long>;  // low degree first

void trim_poly(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim_poly(r);
  return r;
}

Poly poly_scale(const Poly& a, long long s) {
  Poly r = a;
  for (auto& c : r) c *= s;
  trim_poly(r);
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim_poly(r);
  return r;
}

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  RingSpec parse() {
    RingSpec spec;
    skip_ws();
    if (try_consume("GF")) {
      expect('(');
      long long p = integer();
      expect(')');
      if (!is_odd_prime(p) && p != 2) fail("GF base must be prime");
      spec.p = static_cast<long>(p);
      spec.base_exp = 1;
    } else if (try_consume("Z")) {
      expect('(');
      long long n = integer();
      int k = 1;
      skip_ws();
      if (peek() == '^') {
        ++pos_;
        long long kk = integer();
        if (kk < 1 || kk > 62) fail("exponent out of range");
        k = static_cast<int>(kk);
        // base written as p^k directly
        spec.p = static_cast<long>(n);
        spec.base_exp = k;
      } else {
        // n must be a prime power p^k
        long long p = smallest_factor(n);
        long long m = n;
        k = 0;
        while (m % p == 0) {
          m /= p;
          ++k;
        }
        if (m != 1) fail("Z(n) requires n to be a prime power");
        spec.p = static_cast<long>(p);
        spec.base_exp = k;
      }
      expect(')');
      if (spec.p < 2) fail("bad base prime");
    } else {
      fail("expected GF(p) or Z(n)");
    }
    expect('[');
    expect('l');
    expect(']');
    expect('/');
    expect('(');
    while (true) {
      spec.relations.push_back(poly_expr());
      skip_ws();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      break;
    }
    expect(')');
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    if (spec.p == 2) {
      // surfaced here so the offset points at the spec text; the ring builder
      // re-checks for programmatic construction
      throw BuildError("p = 2 is excluded");
    }
    spec.text = print_ring_spec(spec);
    return spec;
  }

 private:
  static long long smallest_factor(long long n) {
    if (n < 2) return n;
    for (long long d = 2; d * d <= n; ++d)
      if (n % d == 0) return d;
    return n;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool try_consume(const std::string& word) {
    skip_ws();
    if (s_.compare(pos_, word.size(), word) == 0) {
      pos_ += word.size();
      return true;
    }
    return false;
  }

  long long integer() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected integer");
    long long v = 0;
    for (size_t i = start; i < pos_; ++i) {
      v = v * 10 + (s_[i] - '0');
      if (v > (1LL << 40)) fail("integer literal too large");
    }
    return v;
  }

  // expr := ['-'|'+'] term { ('+'|'-') term }
  Poly poly_expr() {
    skip_ws();
    long long sign = 1;
    if (peek() == '-') {
      sign = -1;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    Poly acc = poly_scale(poly_term(), sign);
    while (true) {
      skip_ws();
      char c = peek();
      if (c == '+' || c == '-') {
        ++pos_;
        acc = poly_add(acc, poly_scale(poly_term(), c == '-' ? -1 : 1));
      } else {
        break;
      }
    }
    return acc;
  }

  // term := factor { '*' factor }
  Poly poly_term() {
    Poly acc = poly_factor();
    while (true) {
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        acc = poly_mul(acc, poly_factor());
      } else {
        break;
      }
    }
    return acc;
  }

  // factor := atom ['^' uint]
  Poly poly_factor() {
    Poly base = poly_atom();
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      long long e = integer();
      if (e < 0 || e > 64) fail("exponent out of range");
      Poly r{1};
      for (long long i = 0; i < e; ++i) {
        r = poly_mul(r, base);
        if (r.size() > 128) fail("polynomial degree too large");
      }
      return r;
    }
    return base;
  }

  // atom := uint | 'l' | '(' expr ')'
  Poly poly_atom() {
    skip_ws();
    char c = peek();
    if (c == 'l') {
      ++pos_;
      return Poly{0, 1};
    }
    if (c == '(') {
      ++pos_;
      Poly inner = poly_expr();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Poly{integer()};
    fail("expected integer, 'l' or '('");
  }

  const std::string& s_;
  size_t pos_ = 0;
};

std::string print_poly(const Poly& p) {
  if (p.empty()) return "0";
  std::string s;
  for (int j = static_cast<int>(p.size()) - 1; j >= 0; --j) {
    long long c = p[j];
    if (c == 0) continue;
    if (!s.empty())
      s += (c > 0) ? "+" : "-";
    else if (c < 0)
      s += "-";
    long long a = c > 0 ? c : -c;
    if (j == 0) {
      s += std::to_string(a);
    } else {
      if (a != 1) s += std::to_string(a) + "*";
      s += (j == 1) ? "l" : "l^" + std::to_string(j);
    }
  }
  return s.empty() ? "0" : s;
}

}  // namespace

RingSpec parse_ring_spec(const std::string& text) { return Parser(text).parse(); }

std::string print_ring_spec(const RingSpec& spec) {
  std::string s;
  long long pk = 1;
  for (int i = 0; i < spec.base_exp; ++i) pk *= spec.p;
  if (spec.base_exp == 1)
    s = "GF(" + std::to_string(spec.p) + ")";
  else
    s = "Z(" + std::to_string(pk) + ")";
  s += "[l]/(";
  for (size_t i = 0; i < spec.relations.size(); ++i) {
    if (i) s += ", ";
    s += print_poly(spec.relations[i]);
  }
  s += ")";
  return s;
}

}  // namespace burau
