#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "tors3/error.hpp"

namespace tors3 {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational. Rejects a zero
/// denominator and anything mpq does not accept.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  if (s.empty()) throw InvariantError("empty rational literal");
  if (!s.empty() && s.front() == '+') s.erase(s.begin());
  Rational q;
  if (q.set_str(s, 10) != 0) throw InvariantError("malformed rational literal '" + s + "'");
  if (q.get_den() == 0) throw InvariantError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

inline Integer parse_integer(std::string_view text) {
  Integer z;
  std::string s(text);
  if (!s.empty() && s.front() == '+') s.erase(s.begin());
  if (s.empty() || z.set_str(s, 10) != 0) throw InvariantError("malformed integer literal '" + s + "'");
  return z;
}

inline std::string to_string(const Rational& q) { return q.get_str(10); }
inline std::string to_string(const Integer& z) { return z.get_str(10); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

/// Residue of q modulo the odd prime p; the denominator must be a unit.
inline long rational_mod(const Rational& q, long p) {
  Integer num = q.get_num() % p;
  if (num < 0) num += p;
  Integer den = q.get_den() % p;
  if (den == 0) throw InvariantError("denominator divisible by " + std::to_string(p));
  Integer inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), Integer(p).get_mpz_t());
  Integer r = (num * inv) % p;
  return r.get_si();
}

}  // namespace tors3
