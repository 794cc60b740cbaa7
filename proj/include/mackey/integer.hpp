#pragma once

// Arbitrary-precision integers and the handful of number-theoretic helpers
// shared by every module.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mackey {

using Int = mpz_class;
using Vec = std::vector<Int>;

/// Raised when an internal invariant that is a theorem (integrality of a
/// division, a simplicial identity, ...) fails. Always a bug, never user error.
class InvariantViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Raised for invalid caller input (bad divisor, unsupported ring, ...).
class InvalidArgument : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

/// Extended gcd: returns g = gcd(a, b) >= 0 with s*a + t*b = g.
inline Int gcdext(const Int& a, const Int& b, Int& s, Int& t) {
  Int g;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  return g;
}

/// Exact division; throws InvariantViolation when b does not divide a.
inline Int divexact(const Int& a, const Int& b) {
  if (b == 0 || !mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
    throw InvariantViolation("inexact integer division " + a.get_str() + " / " +
                             b.get_str());
  Int q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline bool divides(const Int& d, const Int& a) {
  if (d == 0) return a == 0;
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

/// Least non-negative residue.
inline Int mod(const Int& a, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  if (r < 0) r += abs(m);
  return r;
}

inline Int pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

inline Vec zero_vec(std::size_t n) { return Vec(n, Int(0)); }

inline Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n, Int(0));
  v[i] = 1;
  return v;
}

inline void axpy(Vec& y, const Int& a, const Vec& x) {
  if (a == 0) return;
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

// Small-integer number theory for group orders and divisor lattices.

inline long igcd(long a, long b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline long ilcm(long a, long b) { return a / igcd(a, b) * b; }

inline std::vector<long> divisors(long n) {
  std::vector<long> out;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

inline bool is_prime(long p) {
  if (p < 2) return false;
  for (long q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

inline std::vector<long> prime_factors(long n) {
  std::vector<long> out;
  for (long p = 2; p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  return out;
}

inline int moebius(long n) {
  int sign = 1;
  for (long p = 2; p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  return sign;
}

/// Non-negative residue of a machine integer.
inline long imod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace mackey
