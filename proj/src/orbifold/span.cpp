#include "orbifold/span.hpp"

#include <algorithm>

namespace vc::orb {

using namespace vc::va;

namespace {

// Multisets of (generator index, derivative order) with prescribed total
// weight; canonical nondecreasing order within a word.
void enum_words(const std::vector<Rat>& wts, const Rat& rem, size_t start_gen,
                unsigned start_deriv, std::vector<std::pair<size_t, unsigned>>& acc,
                const std::function<void()>& emit) {
  if (rem == 0) {
    emit();
    return;
  }
  if (rem < 0) return;
  for (size_t g = start_gen; g < wts.size(); ++g) {
    unsigned d0 = g == start_gen ? start_deriv : 0;
    for (unsigned d = d0; Rat(wts[g] + d) <= rem; ++d) {
      acc.push_back({g, d});
      enum_words(wts, rem - wts[g] - d, g, d, acc, emit);
      acc.pop_back();
    }
  }
}

}  // namespace

StrongSpan::StrongSpan(const Engine& eng, std::vector<FieldExpr> gens, const Rat& w)
    : eng_(eng), w_(w) {
  basis_ = pbw_basis(eng.pres(), w);
  for (size_t i = 0; i < basis_.size(); ++i) index_[basis_[i]] = i;

  std::vector<Rat> wts;
  for (const auto& g : gens) {
    Rat gw = eng.field_weight_bound(g);
    if (gw <= 0) throw algebra_error("strong span needs positive-weight generators");
    wts.push_back(gw);
  }

  std::vector<std::pair<size_t, unsigned>> acc;
  std::function<void()> emit = [&]() {
    ++monomials_;
    std::vector<FieldExpr> factors;
    for (const auto& [g, d] : acc) factors.push_back(gens[g].derivative(d));
    State s = factors.empty() ? State::vacuum() : eng.state_of(eng.wick(factors));
    monomial_words_.push_back(acc);
    monomial_states_.push_back(s);
    insert(s);
  };
  enum_words(wts, w, 0, 0, acc, emit);
}

std::map<size_t, Scalar> StrongSpan::reduce(const State& s) const {
  std::map<size_t, Scalar> v;
  for (const auto& [bw, c] : s.coords()) {
    auto it = index_.find(bw);
    if (it == index_.end()) throw algebra_error("state outside span weight space");
    v[it->second] = c;
  }
  for (auto it = v.begin(); it != v.end();) {
    auto row = rows_.find(it->first);
    if (row == rows_.end()) {
      ++it;
      continue;
    }
    Scalar f = it->second / row->second.begin()->second;
    for (const auto& [k, x] : row->second) {
      auto vit = v.find(k);
      Scalar nv = (vit == v.end() ? Scalar() : vit->second) - f * x;
      if (nv.is_zero())
        v.erase(k);
      else
        v[k] = std::move(nv);
    }
    it = v.begin();  // leading entry changed
  }
  return v;
}

void StrongSpan::insert(const State& s) {
  auto v = reduce(s);
  if (v.empty()) return;
  size_t lead = v.begin()->first;
  rows_[lead] = std::move(v);
}

bool StrongSpan::contains(const State& s) const { return reduce(s).empty(); }

std::optional<std::vector<std::pair<size_t, Scalar>>> StrongSpan::member(
    const State& s) const {
  if (!contains(s)) return std::nullopt;
  // solve sum_i x_i monomial_i = s by a fresh shadow-tracked elimination
  using Row = std::map<size_t, Scalar>;
  auto coords = [&](const State& v) {
    Row r;
    for (const auto& [bw, c] : v.coords()) r[index_.at(bw)] = c;
    return r;
  };
  std::map<size_t, std::pair<Row, Row>> pivots;  // lead -> (row, shadow over monomials)
  auto reduce_tracked = [&](Row v, Row sh) {
    while (!v.empty()) {
      auto it = pivots.find(v.begin()->first);
      if (it == pivots.end()) break;
      Scalar f = v.begin()->second / it->second.first.begin()->second;
      for (const auto& [k, x] : it->second.first) {
        auto vit = v.find(k);
        Scalar nv = (vit == v.end() ? Scalar() : vit->second) - f * x;
        if (nv.is_zero())
          v.erase(k);
        else
          v[k] = std::move(nv);
      }
      for (const auto& [k, x] : it->second.second) {
        auto sit = sh.find(k);
        Scalar nv = (sit == sh.end() ? Scalar() : sit->second) - f * x;
        if (nv.is_zero())
          sh.erase(k);
        else
          sh[k] = std::move(nv);
      }
    }
    return std::pair<Row, Row>(std::move(v), std::move(sh));
  };
  for (size_t i = 0; i < monomial_states_.size(); ++i) {
    Row sh;
    sh[i] = Scalar(1);
    auto [v, shadow] = reduce_tracked(coords(monomial_states_[i]), std::move(sh));
    if (v.empty()) continue;
    size_t lead = v.begin()->first;
    pivots[lead] = {std::move(v), std::move(shadow)};
  }
  auto [v, shadow] = reduce_tracked(coords(s), Row{});
  if (!v.empty()) return std::nullopt;
  std::vector<std::pair<size_t, Scalar>> out;
  for (auto& [i, c] : shadow) out.push_back({i, -c});
  return out;
}

ClosureReport closure_check(const Engine& eng, const std::vector<FieldExpr>& gens,
                            const Rat& pair_weight_bound) {
  ClosureReport rep;
  std::map<Rat, std::unique_ptr<StrongSpan>> spans;
  auto span_at = [&](const Rat& w) -> StrongSpan& {
    auto it = spans.find(w);
    if (it == spans.end())
      it = spans.emplace(w, std::make_unique<StrongSpan>(eng, gens, w)).first;
    return *it->second;
  };

  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = 0; j < gens.size(); ++j) {
      Rat wi = eng.field_weight_bound(gens[i]), wj = eng.field_weight_bound(gens[j]);
      if (wi + wj > pair_weight_bound) continue;
      ++rep.pairs_checked;
      PoleExpansion pe = eng.ope(gens[i], gens[j]);
      for (const auto& [pole, coeff] : pe.poles) {
        Rat w = wi + wj - pole;
        bool ok = span_at(w).contains(eng.state_of(coeff));
        rep.items.push_back({i, j, pole, w, ok});
        if (!ok) rep.pass = false;
      }
    }
  return rep;
}

}  // namespace vc::orb
