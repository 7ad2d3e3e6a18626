#include "qseries/laurent.hpp"

#include <sstream>

namespace vc::qs {

Laurent Laurent::constant(VarPoolPtr vars, const Rat& c) {
  Laurent l(vars);
  if (c != 0) l.c_[Exp(l.vars_->size(), 0)] = c;
  return l;
}

Laurent Laurent::monomial(VarPoolPtr vars, Exp e, const Rat& c) {
  Laurent l(vars);
  if (c != 0) l.c_[std::move(e)] = c;
  return l;
}

Laurent Laurent::var_minus_inverse(VarPoolPtr vars, size_t i) {
  Laurent l(vars);
  Exp e(vars->size(), 0);
  e[i] = 1;
  l.c_[e] = Rat(1);
  e[i] = -1;
  l.c_[e] = Rat(-1);
  return l;
}

Laurent Laurent::operator-() const {
  Laurent l = *this;
  for (auto& [e, c] : l.c_) c = -c;
  return l;
}

Laurent Laurent::operator+(const Laurent& o) const {
  Laurent l = *this;
  if (!l.vars_) l.vars_ = o.vars_;
  for (const auto& [e, c] : o.c_) {
    auto it = l.c_.find(e);
    if (it == l.c_.end())
      l.c_[e] = c;
    else {
      it->second += c;
      if (it->second == 0) l.c_.erase(it);
    }
  }
  return l;
}

Laurent Laurent::operator-(const Laurent& o) const { return *this + (-o); }

Laurent Laurent::operator*(const Laurent& o) const {
  Laurent l(vars_ ? vars_ : o.vars_);
  for (const auto& [ea, ca] : c_)
    for (const auto& [eb, cb] : o.c_) {
      Exp e = ea;
      for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      Rat c = ca * cb;
      auto it = l.c_.find(e);
      if (it == l.c_.end())
        l.c_[std::move(e)] = c;
      else {
        it->second += c;
        if (it->second == 0) l.c_.erase(it);
      }
    }
  return l;
}

Laurent Laurent::mul_rat(const Rat& r) const {
  if (r == 0) return Laurent(vars_);
  Laurent l = *this;
  for (auto& [e, c] : l.c_) c *= r;
  return l;
}

Laurent Laurent::subst(const std::vector<Exp>& images) const {
  Laurent l(vars_);
  for (const auto& [e, c] : c_) {
    Exp img(vars_->size(), 0);
    for (size_t i = 0; i < e.size(); ++i)
      for (size_t j = 0; j < img.size(); ++j) img[j] += e[i] * images[i][j];
    auto it = l.c_.find(img);
    if (it == l.c_.end())
      l.c_[std::move(img)] = c;
    else {
      it->second += c;
      if (it->second == 0) l.c_.erase(it);
    }
  }
  return l;
}

Rat Laurent::eval_ones() const {
  Rat s(0);
  for (const auto& [e, c] : c_) s += c;
  return s;
}

std::string Laurent::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : c_) {
    if (!first) os << " + ";
    first = false;
    os << rat_str(c);
    for (size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      os << "*" << vars_->name(i);
      if (e[i] != 1) os << "^" << e[i];
    }
  }
  return os.str();
}

}  // namespace vc::qs
