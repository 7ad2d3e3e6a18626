#include "core/rat.hpp"

namespace vc {

Rat rat_parse(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw parse_error("empty fraction literal");
  Rat r;
  if (r.set_str(t, 10) != 0) throw parse_error("bad fraction literal: " + s);
  r.canonicalize();
  if (r.get_den() == 0) throw parse_error("zero denominator: " + s);
  return r;
}

std::string rat_str(const Rat& r) { return r.get_str(); }

long rat_floor(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  if (!q.fits_slong_p()) throw std::overflow_error("rat_floor overflow");
  return q.get_si();
}

Int binom(long m, long j) {
  if (j < 0) return 0;
  Int num = 1;
  for (long i = 0; i < j; ++i) num *= Int(m - i);
  Int den = factorial(static_cast<unsigned>(j));
  return num / den;  // exact
}

Int factorial(unsigned n) {
  Int f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

}  // namespace vc
