#pragma once

#include "core/poly.hpp"

namespace vc {

/** Exact coefficient: a rational, or a rational function in the formal
    parameters of one VarPool. Rational values stay on a cheap fast path;
    promotion happens only when a parameter actually enters. */
class Scalar {
 public:
  Scalar() : rat_(0) {}
  Scalar(long n) : rat_(n) {}
  Scalar(const Rat& r) : rat_(r) {}
  explicit Scalar(RatFunc f);
  static Scalar param(const VarPoolPtr& pool, size_t idx);

  bool is_rational() const { return !fun_; }
  bool is_zero() const { return fun_ ? fun_->is_zero() : rat_ == 0; }
  const Rat& rational() const;  // requires is_rational()
  const RatFunc& fun() const;   // requires !is_rational()

  /** As a RatFunc over the given pool (promoting rationals). */
  RatFunc as_fun(const VarPoolPtr& pool) const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  bool operator==(const Scalar& o) const;

  Scalar pow(unsigned n) const;

  /** Specializes every parameter; exact, throws if a denominator vanishes. */
  Scalar eval(const std::vector<Rat>& xs) const;

  std::string str() const;

 private:
  Rat rat_;
  std::optional<RatFunc> fun_;  // engaged => value is fun_, rat_ ignored
  void demote();                // collapse constant RatFunc back to Rat
};

inline Scalar operator*(const Rat& r, const Scalar& s) { return Scalar(r) * s; }

}  // namespace vc
