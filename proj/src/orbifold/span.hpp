#pragma once

#include "va/engine.hpp"

namespace vc::orb {

/** Echelonized span of the normally ordered words in a generator list (with
    derivatives) at one weight, with exact membership tests. */
class StrongSpan {
 public:
  StrongSpan(const va::Engine& eng, std::vector<va::FieldExpr> gens, const Rat& w);

  const Rat& weight() const { return w_; }
  size_t dimension() const { return rows_.size(); }
  /** Exact membership of a weight-homogeneous state. */
  bool contains(const va::State& s) const;
  /** Coordinates of s over the generator monomials (by index into the
      enumeration order), or nothing when s is outside the span. */
  std::optional<std::vector<std::pair<size_t, Scalar>>> member(const va::State& s) const;
  /** The monomial words behind those indices, as factor lists (gen, deriv). */
  const std::vector<std::vector<std::pair<size_t, unsigned>>>& monomials() const {
    return monomial_words_;
  }
  size_t monomials_tried() const { return monomials_; }

 private:
  const va::Engine& eng_;
  Rat w_;
  std::vector<va::BasisWord> basis_;
  std::map<va::BasisWord, size_t> index_;
  // reduced rows keyed by leading coordinate
  std::map<size_t, std::map<size_t, Scalar>> rows_;
  std::vector<va::State> monomial_states_;
  std::vector<std::vector<std::pair<size_t, unsigned>>> monomial_words_;
  size_t monomials_ = 0;

  void insert(const va::State& s);
  std::map<size_t, Scalar> reduce(const va::State& s) const;
};

struct ClosureItem {
  size_t left, right;  // generator indices into the input list
  int pole;
  Rat coeff_weight;
  bool in_span;
};

struct ClosureReport {
  bool pass = true;
  long pairs_checked = 0;
  std::vector<ClosureItem> items;  // every pole of every checked pair
};

/** For every ordered generator pair with weight sum <= pair_weight_bound,
    tests every OPE pole coefficient for membership in the strong span at the
    matching weight. Spans are shared across pairs; verdicts do not depend on
    the order of the generator list. */
ClosureReport closure_check(const va::Engine& eng,
                            const std::vector<va::FieldExpr>& gens,
                            const Rat& pair_weight_bound);

}  // namespace vc::orb
