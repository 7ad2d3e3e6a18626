#include "va/field.hpp"

#include <algorithm>

namespace vc::va {

FieldExpr FieldExpr::identity(const Scalar& c) { return monomial({}, c); }

FieldExpr FieldExpr::monomial(Word w, Scalar c) {
  FieldExpr f;
  if (!c.is_zero()) f.terms_.push_back({std::move(w), std::move(c)});
  return f;
}

FieldExpr FieldExpr::from_terms(std::vector<std::pair<Word, Scalar>> t) {
  FieldExpr f;
  f.terms_ = std::move(t);
  f.normalize();
  return f;
}

void FieldExpr::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<Word, Scalar>> out;
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first)
      out.back().second += t.second;
    else
      out.push_back(std::move(t));
    if (!out.empty() && out.back().second.is_zero()) out.pop_back();
  }
  terms_ = std::move(out);
}

FieldExpr FieldExpr::operator-() const {
  FieldExpr f = *this;
  for (auto& t : f.terms_) t.second = -t.second;
  return f;
}

FieldExpr FieldExpr::operator+(const FieldExpr& o) const {
  FieldExpr f;
  f.terms_ = terms_;
  f.terms_.insert(f.terms_.end(), o.terms_.begin(), o.terms_.end());
  f.normalize();
  return f;
}

FieldExpr FieldExpr::operator-(const FieldExpr& o) const { return *this + (-o); }

FieldExpr operator*(const Scalar& c, const FieldExpr& f) {
  if (c.is_zero()) return {};
  FieldExpr g = f;
  for (auto& t : g.terms_) t.second = c * t.second;
  return g;
}

FieldExpr FieldExpr::derivative(unsigned order) const {
  FieldExpr f = *this;
  for (unsigned k = 0; k < order; ++k) {
    std::vector<std::pair<Word, Scalar>> out;
    for (const auto& [w, c] : f.terms_) {
      for (size_t i = 0; i < w.size(); ++i) {
        Word v = w;
        v[i].deriv += 1;
        out.push_back({std::move(v), c});
      }
    }
    f = from_terms(std::move(out));
  }
  return f;
}

}  // namespace vc::va
