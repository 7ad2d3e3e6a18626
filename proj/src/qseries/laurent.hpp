#pragma once

#include "core/poly.hpp"

#include <map>
#include <vector>

namespace vc::qs {

/** Exact multivariate Laurent polynomial: sparse map from integer exponent
    vectors (over a fixed VarPool) to rationals. */
class Laurent {
 public:
  using Exp = std::vector<int>;

  Laurent() = default;
  explicit Laurent(VarPoolPtr vars) : vars_(std::move(vars)) {}
  static Laurent constant(VarPoolPtr vars, const Rat& c);
  static Laurent monomial(VarPoolPtr vars, Exp e, const Rat& c = Rat(1));
  /** v_i - v_i^{-1} */
  static Laurent var_minus_inverse(VarPoolPtr vars, size_t i);

  const VarPoolPtr& vars() const { return vars_; }
  bool is_zero() const { return c_.empty(); }
  const std::map<Exp, Rat>& terms() const { return c_; }

  Laurent operator-() const;
  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator*(const Laurent& o) const;
  Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
  bool operator==(const Laurent& o) const { return c_ == o.c_; }
  Laurent mul_rat(const Rat& r) const;

  /** Additive substitution on exponents: variable i maps to the monomial with
      exponent vector images[i]. */
  Laurent subst(const std::vector<Exp>& images) const;

  Rat eval_ones() const;

  std::string str() const;

 private:
  VarPoolPtr vars_;
  std::map<Exp, Rat> c_;
};

}  // namespace vc::qs
