#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gordan {

using Int = mpz_class;
using Rat = mpq_class;

/// Caller passed arguments violating an operation's precondition.
struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invariant of the implementation itself failed; always a bug.
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

inline Int factorial(long n) {
  if (n < 0) throw UsageError("factorial of negative argument");
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

inline Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

inline Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

/// Divides a vector by the gcd of its entries and makes the first nonzero
/// entry positive. The zero vector is returned unchanged.
void make_primitive(std::vector<Int>& v);

inline void make_primitive(std::vector<Int>& v) {
  Int g = 0;
  for (const Int& x : v) {
    if (x != 0) g = gcd(g, x);
    if (g == 1) break;
  }
  if (g == 0) return;
  for (const Int& x : v) {
    if (x != 0) {
      if (x < 0) g = -g;
      break;
    }
  }
  if (g != 1)
    for (Int& x : v) x /= g;
}

}  // namespace gordan
