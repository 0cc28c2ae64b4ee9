#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace mono {

// All arithmetic in the library is exact. Rationals are GMP mpq values,
// kept in canonical form (gcd 1, positive denominator) by GMP itself.
using Rational = mpq_class;
using Integer = mpz_class;

// Raised for malformed or inconsistent user input (CLI exit code 2).
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a cap-bounded homological computation cannot certify its
// answer (CLI exit code 3). Distinct from "the property fails".
struct Inconclusive : std::runtime_error {
  explicit Inconclusive(const std::string& what) : std::runtime_error(what) {}
};

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

// Parses "p/q" or "p"; q must be positive after canonicalization.
inline Rational rat_parse(const std::string& s) {
  if (s.empty()) throw InputError("empty rational literal");
  for (char c : s)
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
      throw InputError("bad rational literal: " + s);
  try {
    Rational q(s);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw InputError("bad rational literal: " + s);
  }
}

inline std::string rat_str(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace mono
