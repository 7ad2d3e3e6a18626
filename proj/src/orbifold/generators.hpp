#pragma once

#include "va/engine.hpp"

namespace vc::orb {

// Invariant-theory generators inside the rank-3 Heisenberg algebra (engine
// over heisenberg(3)) and the odd algebra godd(4).

/** Q_{ij} = sum_a :(D^i alpha_a)(D^j alpha_a):, weight i+j+2. */
va::FieldExpr build_Q(const va::Engine& h3, unsigned i, unsigned j);

/** Signed determinant C_{klm}, weight k+l+m+3; alternating, zero (with a
    warning flag) on repeated indices. */
va::FieldExpr build_C(const va::Engine& h3, unsigned k, unsigned l, unsigned m,
                      bool* repeated_warning = nullptr);

/** q^{j,k} = sum_i :(D^j phi_i)(D^k phi_i):, weight 3+j+k (canonicalized). */
va::FieldExpr build_fermi_q(const va::Engine& g4, unsigned j, unsigned k);

/** Signless 4x4 determinant w^{ijkl}, weight 6+i+j+k+l. */
va::FieldExpr build_fermi_w(const va::Engine& g4, unsigned i, unsigned j, unsigned k,
                            unsigned l);

/** Infinitesimal so3 rotation in the (a,b) plane acting as a derivation on
    PBW states of heisenberg(3); axis = 0,1,2 picks (2,3),(3,1),(1,2). */
va::State so3_apply(const va::Engine& h3, int axis, const va::State& s);

/** Commutative/exterior symbol ring of a free-field algebra: letters become
    variables, the top filtration image of a Wick word is the product. */
class SymbolRing {
 public:
  SymbolRing(const va::Presentation& P, unsigned max_deriv);
  const VarPoolPtr& pool() const { return pool_; }
  /** gr-image of a field; odd letters anticommute (Koszul-sorted). */
  Poly symbol(const va::FieldExpr& f) const;

 private:
  const va::Presentation& p_;
  unsigned max_deriv_;
  VarPoolPtr pool_;
  size_t var_of(const va::Letter& l) const;
};

}  // namespace vc::orb
