#pragma once

// Exact rational scalar used throughout the lattice computations.
// All arithmetic in the library is exact; no floating point anywhere.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace zipstrata {

using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline long to_long(const Rat& q) {
  if (!is_integer(q) || !q.get_num().fits_slong_p())
    throw std::domain_error("rational does not fit a machine integer");
  return q.get_num().get_si();
}

// Renders "a/b", or just "a" when b == 1.
inline std::string rat_to_string(const Rat& q) {
  Rat c = q;
  c.canonicalize();
  return c.get_str();
}

// Accepts "a" or "a/b" with optional sign.
inline Rat rat_from_string(const std::string& s) {
  try {
    Rat q(s);
    q.canonicalize();
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
    return q;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("cannot parse rational: '" + s + "'");
  }
}

inline mpz_class lcm_of_denominators(const std::vector<Rat>& v) {
  mpz_class l = 1;
  for (const Rat& q : v) {
    mpz_class d = q.get_den();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    l = l / g * d;
  }
  return l;
}

}  // namespace zipstrata
