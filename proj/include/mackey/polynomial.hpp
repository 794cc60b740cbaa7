#pragma once

// Sparse multivariate polynomials with integer coefficients.

#include "mackey/integer.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace mackey {

/// Sorted (variable, exponent) pairs with positive exponents.
using Monomial = std::vector<std::pair<unsigned, unsigned>>;

inline Monomial monomial_product(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i, ++j;
    }
  }
  return out;
}

class Polynomial {
public:
  Polynomial() = default;

  static Polynomial constant(const Int& c) {
    Polynomial p;
    if (c != 0) p.terms_[{}] = c;
    return p;
  }

  static Polynomial variable(unsigned v) {
    Polynomial p;
    p.terms_[{{v, 1u}}] = 1;
    return p;
  }

  const std::map<Monomial, Int>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term(monomial_product(ma, mb), ca * cb);
    return out;
  }

  friend Polynomial operator*(const Int& s, Polynomial a) {
    if (s == 0) return {};
    for (auto& [m, c] : a.terms_) c *= s;
    return a;
  }

  Polynomial pow(unsigned e) const {
    Polynomial result = constant(1);
    Polynomial base = *this;
    while (e > 0) {
      if (e & 1u) result = result * base;
      e >>= 1u;
      if (e) base = base * base;
    }
    return result;
  }

  /// Exact division of every coefficient; throws when some coefficient is
  /// not divisible.
  Polynomial divexact(const Int& d) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) out.terms_[m] = mackey::divexact(c, d);
    return out;
  }

  /// Integer evaluation; `value(v)` supplies the value of variable v.
  template <class F>
  Int eval(F&& value) const {
    Int total = 0;
    for (const auto& [m, c] : terms_) {
      Int t = c;
      for (const auto& [v, e] : m) t *= mackey::pow(value(v), e);
      total += t;
    }
    return total;
  }

private:
  void add_term(const Monomial& m, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::map<Monomial, Int> terms_;
};

/// A polynomial with coefficients reduced modulo m, evaluated in machine
/// arithmetic.
class ModularPolynomial {
public:
  ModularPolynomial(const Polynomial& p, std::int64_t m) : m_(m) {
    for (const auto& [mono, c] : p.terms()) {
      std::int64_t r = mod(c, Int(static_cast<long>(m))).get_si();
      if (r != 0) terms_.push_back({r, mono});
    }
  }

  /// `values[v]` is the residue assigned to variable v.
  std::int64_t eval(const std::vector<std::int64_t>& values) const {
    __int128 total = 0;
    for (const auto& t : terms_) {
      __int128 x = t.coef;
      for (const auto& [v, e] : t.mono) x = x * powmod(values[v], e) % m_;
      total = (total + x) % m_;
    }
    return static_cast<std::int64_t>(total);
  }

  std::int64_t modulus() const { return m_; }

private:
  std::int64_t powmod(std::int64_t b, unsigned e) const {
    __int128 r = 1 % m_, x = b % m_;
    while (e > 0) {
      if (e & 1u) r = r * x % m_;
      e >>= 1u;
      if (e) x = x * x % m_;
    }
    return static_cast<std::int64_t>(r);
  }

  struct Term {
    std::int64_t coef;
    Monomial mono;
  };
  std::int64_t m_;
  std::vector<Term> terms_;
};

}  // namespace mackey
