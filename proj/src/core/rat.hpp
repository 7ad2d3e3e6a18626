#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace vc {

using Int = mpz_class;
using Rat = mpq_class;

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/** Exact fraction from "p", "-p/q" or "p/q"; throws parse_error on junk. */
Rat rat_parse(const std::string& s);

/** Canonical "p/q" or "p" rendering. */
std::string rat_str(const Rat& r);

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

/** floor(r) as a machine integer; r must fit. */
long rat_floor(const Rat& r);

/** Generalized binomial coefficient C(m, j) for integer m (may be negative), j >= 0. */
Int binom(long m, long j);

Int factorial(unsigned n);

}  // namespace vc
