#pragma once

#include "core/scalar.hpp"

#include <cstdint>
#include <vector>

namespace vc::va {

/** One factor of an iterated Wick word: the deriv-th derivative of a generator. */
struct Letter {
  uint32_t gen;
  uint32_t deriv;
  auto operator<=>(const Letter&) const = default;
};

/** Right-nested iterated Wick word :a1 (:a2 (... ak):):, empty = identity. */
using Word = std::vector<Letter>;

/** Finite Scalar-linear combination of Wick words. Operations that need the
    OPE table (canonicalization, products) live on Engine; FieldExpr itself is
    plain data. Terms are kept sorted by word with nonzero coefficients. */
class FieldExpr {
 public:
  FieldExpr() = default;
  static FieldExpr identity(const Scalar& c = Scalar(1));
  static FieldExpr monomial(Word w, Scalar c = Scalar(1));

  bool is_zero() const { return terms_.empty(); }
  const std::vector<std::pair<Word, Scalar>>& terms() const { return terms_; }

  FieldExpr operator-() const;
  FieldExpr operator+(const FieldExpr& o) const;
  FieldExpr operator-(const FieldExpr& o) const;
  FieldExpr& operator+=(const FieldExpr& o) { return *this = *this + o; }
  friend FieldExpr operator*(const Scalar& c, const FieldExpr& f);
  bool operator==(const FieldExpr& o) const { return terms_ == o.terms_; }

  /** Formal derivative (derivation over the Wick structure, word by letter). */
  FieldExpr derivative(unsigned order = 1) const;

  static FieldExpr from_terms(std::vector<std::pair<Word, Scalar>> t);

 private:
  std::vector<std::pair<Word, Scalar>> terms_;
  void normalize();
};

/** Singular part of an OPE: pole order n >= 1 -> coefficient field. */
struct PoleExpansion {
  std::map<int, FieldExpr> poles;
  int max_pole() const { return poles.empty() ? 0 : poles.rbegin()->first; }
  const FieldExpr* pole(int n) const {
    auto it = poles.find(n);
    return it == poles.end() ? nullptr : &it->second;
  }
};

}  // namespace vc::va
