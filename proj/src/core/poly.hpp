#pragma once

#include "core/rat.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace vc {

/** Ordered list of formal parameter names shared by all values of one context. */
class VarPool {
 public:
  explicit VarPool(std::vector<std::string> names) : names_(std::move(names)) {}
  size_t size() const { return names_.size(); }
  const std::string& name(size_t i) const { return names_[i]; }
  std::optional<size_t> find(const std::string& n) const {
    for (size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == n) return i;
    return std::nullopt;
  }

 private:
  std::vector<std::string> names_;
};

using VarPoolPtr = std::shared_ptr<const VarPool>;

struct scalar_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/** Sparse multivariate polynomial over Q. Terms are kept sorted and nonzero. */
class Poly {
 public:
  using Exp = std::vector<unsigned>;

  Poly() = default;
  Poly(VarPoolPtr pool, const Rat& c);
  static Poly var(VarPoolPtr pool, size_t idx);

  const VarPoolPtr& pool() const { return pool_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rat constant_value() const;  // requires is_constant()
  size_t nterms() const { return terms_.size(); }

  unsigned degree(size_t var) const;
  unsigned total_degree() const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  bool operator==(const Poly& o) const { return terms_ == o.terms_; }

  Poly mul_rat(const Rat& c) const;
  Poly pow(unsigned n) const;

  /** Exact division; throws scalar_error if the division leaves a remainder. */
  Poly divexact(const Poly& d) const;

  Poly derivative(size_t var) const;
  Rat eval(const std::vector<Rat>& xs) const;

  /** gcd over Q[x1..xn], normalized integer-primitive with positive lead. */
  static Poly gcd(const Poly& a, const Poly& b);

  /** Integer-primitive normalization: returns (unit, primitive) with
      *this == unit * primitive and primitive having coprime integer
      coefficients and positive leading one. */
  std::pair<Rat, Poly> primitive() const;

  std::string str() const;

  const std::vector<std::pair<Exp, Rat>>& terms() const { return terms_; }
  static Poly from_terms(VarPoolPtr pool, std::vector<std::pair<Exp, Rat>> t);

 private:
  VarPoolPtr pool_;
  std::vector<std::pair<Exp, Rat>> terms_;  // sorted descending by exponent

  void normalize();
  friend class RatFunc;
};

/** Quotient of two polynomials, fully reduced, denominator never zero. */
class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(Poly num, Poly den);
  static RatFunc from_poly(Poly p);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Rat constant_value() const { return num_.constant_value() / den_.constant_value(); }

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

  /** Substitutes values for all variables; throws with the vanishing factor
      spelled out if the denominator dies at the point. */
  Rat eval(const std::vector<Rat>& xs) const;

  std::string str() const;

 private:
  Poly num_, den_;
  void reduce();
};

}  // namespace vc
