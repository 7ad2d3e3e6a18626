#pragma once

#include "qseries/builders.hpp"

namespace vc::qs {

struct CharReport {
  bool pass = false;
  std::string name;
  std::vector<std::string> notes;      // genericity caveats, conventions
  std::optional<std::string> mismatch; // first differing window, when failing
  long max_variable_degree = 0;        // largest Laurent exponent encountered
};

/** Generic rational specialization (lambda, mu) with the positivity guard
    1/lambda + 1/mu > 0 that keeps the summand exponents increasing. */
struct CharSpec {
  Rat lambda, mu;
  CharSpec(const Rat& l, const Rat& m);
  Rat k1() const { return 1 / lambda - 1; }
  Rat k2() const { return lambda - 1; }
  Rat l1() const { return 1 / mu - 1; }
  Rat l2() const { return mu - 1; }
  Rat s() const { return 1 / lambda + 1 / mu; }
};

/** Character decomposition of the big coset product algebra, verified in the
    multiplied-through form: the theta numerator equals
    Pi(z1) Pi(z2) Pi(w) sum_m (w^{2m+1} - w^{-2m-1}) X_m on the window. */
CharReport verify_thm_char(const CharSpec& spec, long order, long degree_cap = 0);

/** Vacuum-part identity: the m = 0 product equals the large N=4 vacuum
    character with c = -3 + 6/(1/lambda + 1/mu); also extracts the q^1 and
    q^{3/2} coefficients at all variables = 1. */
CharReport verify_cor_char(const CharSpec& spec, long order, Rat* q1 = nullptr,
                           Rat* q32 = nullptr, long degree_cap = 0);

/** Small analog: single affine spectator z1, finite-character spectator u. */
CharReport verify_thm_char_small(const Rat& lambda, long order, long degree_cap = 0);

/** Leading q-exponent of W_m = X_m q^{-lambda (m+1)^2 / 4}. */
Rat w_m_leading_exponent(const Rat& lambda, long m);

/** The product forms behind the verifications, exposed for finer tests. */
QSeries x_m_large(long order, long m);       // vars (z1, z2, w)
QSeries x_m_small(long order, long m);       // vars (z1, u, w)
QSeries theta_lhs_large(long order);
QSeries theta_lhs_small(long order);

/** Middle-form identity for X_m, multiplied through by Pi Pi eta and the four
    skipped fermion factors. */
bool x_m_middle_form_check(long m, long order);

/** Partial-fraction seed: the four-reciprocal sum collapses to the displayed
    quotient numerator. */
bool partial_fraction_seed_check(long m, long order);

/** X_m = -X_{-m-1} through the partial-fraction form. */
bool x_m_antisymmetry_check(long m, long order);

/** Four-fermion character equals its theta-quotient form over sqrt variables
    s, t with s^2 = xy, t^2 = x/y; checks the even-exponent descent too. */
bool fermion_theta_quotient_check(long order);

/** weyl_pi times the expanded reciprocal of its unit part returns
    q^{1/8} (v - v^{-1}). */
bool weyl_pi_unit_part_check(long order);

/** Multiplicity of the trivial character in chi_n * chi_m (equals delta_nm). */
long euler_poincare_multiplicity(long n, long m);

}  // namespace vc::qs
