#pragma once

// Brute-force Wick-contraction oracle for free-field algebras: sums over all
// nonempty sets of disjoint contractions with explicit Koszul signs and Taylor
// expansion of the leftover z-side letters.  Written independently of the
// engine's mode machinery so the two can check each other.

#include "va/algebra.hpp"

#include <functional>
#include <map>

namespace vc::va::testing {

struct Contraction {
  int delta;   // pole order of <g h>
  Rat value;   // coefficient of (z-w)^{-delta}
};

inline std::optional<Contraction> contraction(const Presentation& P, uint32_t g,
                                              uint32_t h) {
  const PoleExpansion& pe = P.pair_ope(g, h);
  if (pe.poles.empty()) return std::nullopt;
  if (pe.poles.size() != 1) throw algebra_error("oracle: not a free-field pair");
  const auto& [pole, f] = *pe.poles.begin();
  if (f.terms().size() != 1 || !f.terms()[0].first.empty())
    throw algebra_error("oracle: non-scalar contraction");
  return Contraction{pole, f.terms()[0].second.rational()};
}

inline std::map<int, FieldExpr> ope_oracle(const Presentation& P, const Word& A,
                                           const Word& B) {
  size_t m = A.size(), n = B.size();
  std::map<int, std::vector<std::pair<Word, Scalar>>> acc;

  // enumerate sets of disjoint pairs (i in A) x (j in B)
  std::vector<std::pair<int, int>> pairs;
  auto emit = [&]() {
    if (pairs.empty()) return;
    // Koszul sign: extract pairs in order, counting odd letters strictly
    // between the two partners among the not-yet-removed letters.
    std::vector<int> alive;  // positions 0..m+n-1
    for (size_t i = 0; i < m + n; ++i) alive.push_back(static_cast<int>(i));
    auto parity_at = [&](int pos) {
      const Letter& l = pos < static_cast<int>(m) ? A[pos] : B[pos - m];
      return P.odd(l.gen);
    };
    int sign = 1;
    for (const auto& [i, j] : pairs) {
      int pa = i, pb = static_cast<int>(m) + j;
      int between_odd = 0;
      for (int pos : alive)
        if (pos > pa && pos < pb && parity_at(pos)) ++between_odd;
      if (parity_at(pa) && (between_odd % 2)) sign = -sign;
      std::erase(alive, pa);
      std::erase(alive, pb);
    }

    // contraction values: <D^p g(z) D^q h(w)> = C (-1)^p (d)_{p+q} (z-w)^{-d-p-q}
    Rat coeff(sign);
    int total_pole = 0;
    for (const auto& [i, j] : pairs) {
      auto c = contraction(P, A[i].gen, B[j].gen);
      if (!c) throw algebra_error("oracle: missing contraction");
      unsigned p = A[i].deriv, q = B[j].deriv;
      Rat v = c->value;
      for (unsigned t = 0; t < p + q; ++t) v *= Rat(c->delta + static_cast<int>(t));
      if (p % 2) v = -v;
      coeff *= v;
      total_pole += c->delta + static_cast<int>(p + q);
    }

    // leftover letters; Taylor-expand the A-side around w
    std::vector<Letter> restA, restB;
    for (size_t i = 0; i < m; ++i)
      if (std::none_of(pairs.begin(), pairs.end(),
                       [&](auto& pr) { return pr.first == static_cast<int>(i); }))
        restA.push_back(A[i]);
    for (size_t j = 0; j < n; ++j)
      if (std::none_of(pairs.begin(), pairs.end(),
                       [&](auto& pr) { return pr.second == static_cast<int>(j); }))
        restB.push_back(B[j]);

    // multi-index Taylor orders for restA, bounded by the pole depth
    std::vector<unsigned> t(restA.size(), 0);
    auto total = [&]() {
      unsigned s = 0;
      for (unsigned x : t) s += x;
      return s;
    };
    while (true) {
      int pole = total_pole - static_cast<int>(total());
      if (pole >= 1) {
        Word w;
        Rat c = coeff;
        for (size_t i = 0; i < restA.size(); ++i) {
          w.push_back({restA[i].gen, restA[i].deriv + t[i]});
          c /= Rat(factorial(t[i]));
        }
        for (const auto& l : restB) w.push_back(l);
        acc[pole].push_back({std::move(w), Scalar(c)});
      }
      // next multi-index with sum <= total_pole - 1
      size_t k = 0;
      for (; k < t.size(); ++k) {
        ++t[k];
        if (static_cast<int>(total()) <= total_pole - 1) break;
        t[k] = 0;
      }
      if (t.empty() || k == t.size()) break;
    }
  };

  // recursive enumeration of contraction sets
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == m) {
      emit();
      return;
    }
    rec(i + 1);  // A[i] uncontracted
    for (size_t j = 0; j < n; ++j) {
      bool used = std::any_of(pairs.begin(), pairs.end(),
                              [&](auto& pr) { return pr.second == static_cast<int>(j); });
      if (used) continue;
      if (!contraction(P, A[i].gen, B[j].gen)) continue;
      pairs.push_back({static_cast<int>(i), static_cast<int>(j)});
      rec(i + 1);
      pairs.pop_back();
    }
  };
  rec(0);

  std::map<int, FieldExpr> out;
  for (auto& [pole, terms] : acc) {
    FieldExpr f = FieldExpr::from_terms(std::move(terms));
    if (!f.is_zero()) out[pole] = std::move(f);
  }
  return out;
}

}  // namespace vc::va::testing
