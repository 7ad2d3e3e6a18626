#include "core/scalar.hpp"

namespace vc {

Scalar::Scalar(RatFunc f) : rat_(0), fun_(std::move(f)) { demote(); }

Scalar Scalar::param(const VarPoolPtr& pool, size_t idx) {
  return Scalar(RatFunc::from_poly(Poly::var(pool, idx)));
}

void Scalar::demote() {
  if (fun_ && fun_->is_constant()) {
    rat_ = fun_->constant_value();
    fun_.reset();
  }
}

const Rat& Scalar::rational() const {
  if (fun_) throw scalar_error("scalar is not rational: " + str());
  return rat_;
}

const RatFunc& Scalar::fun() const {
  if (!fun_) throw scalar_error("scalar is rational");
  return *fun_;
}

RatFunc Scalar::as_fun(const VarPoolPtr& pool) const {
  if (fun_) return *fun_;
  return RatFunc::from_poly(Poly(pool, rat_));
}

Scalar Scalar::operator-() const {
  if (!fun_) return Scalar(Rat(-rat_));
  return Scalar(-*fun_);
}

#define VC_SCALAR_BINOP(op)                                             \
  if (!fun_ && !o.fun_) return Scalar(Rat(rat_ op o.rat_));             \
  VarPoolPtr pool = fun_ ? fun_->num().pool() : o.fun_->num().pool();   \
  return Scalar(as_fun(pool) op o.as_fun(pool));

Scalar Scalar::operator+(const Scalar& o) const { VC_SCALAR_BINOP(+) }
Scalar Scalar::operator-(const Scalar& o) const { VC_SCALAR_BINOP(-) }
Scalar Scalar::operator*(const Scalar& o) const {
  if (!fun_ && !o.fun_) return Scalar(Rat(rat_ * o.rat_));
  if (is_zero() || o.is_zero()) return Scalar();
  VarPoolPtr pool = fun_ ? fun_->num().pool() : o.fun_->num().pool();
  return Scalar(as_fun(pool) * o.as_fun(pool));
}

Scalar Scalar::operator/(const Scalar& o) const {
  if (o.is_zero()) throw scalar_error("scalar division by zero");
  if (!fun_ && !o.fun_) return Scalar(Rat(rat_ / o.rat_));
  VarPoolPtr pool = fun_ ? fun_->num().pool() : o.fun_->num().pool();
  return Scalar(as_fun(pool) / o.as_fun(pool));
}

#undef VC_SCALAR_BINOP

bool Scalar::operator==(const Scalar& o) const {
  if (!fun_ && !o.fun_) return rat_ == o.rat_;
  return (*this - o).is_zero();
}

Scalar Scalar::pow(unsigned n) const {
  Scalar r(1);
  for (unsigned i = 0; i < n; ++i) r = r * *this;
  return r;
}

Scalar Scalar::eval(const std::vector<Rat>& xs) const {
  if (!fun_) return *this;
  return Scalar(fun_->eval(xs));
}

std::string Scalar::str() const { return fun_ ? fun_->str() : rat_str(rat_); }

}  // namespace vc
