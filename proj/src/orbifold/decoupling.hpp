#pragma once

#include "orbifold/generators.hpp"

namespace vc::orb {

struct DecouplingTerm {
  std::string label;
  Rat coefficient;
  va::FieldExpr field;   // without the coefficient
  bool correction;       // true for the quantum-correction part (solver unknowns)
};

struct DecouplingReport {
  bool zero = false;          // the full combination evaluates to the zero state
  va::State residual;
  Rat q010_coefficient;       // transcribed coefficient of Q_{0,10}
  Int dim12_formula, dim12_enumerated;
  // engaged only when the transcription residual is nonzero: the corrections
  // re-solved by exact linear algebra, alongside the transcribed values
  std::optional<std::vector<std::pair<std::string, Rat>>> solved_corrections;
  std::vector<DecouplingTerm> terms;
};

/** The weight-12 relation expressing Q_{0,10} through lower invariants: the
    classical Gram determinant identity plus its quantum corrections.
    Evaluates the whole combination to a state of weight 12 in heisenberg(3).
    When the residual is nonzero the correction coefficients are re-solved by
    exact linear algebra and reported next to the transcribed ones.
    `overrides` replaces transcribed coefficients by label (solver testing). */
DecouplingReport verify_decoupling_wt12(
    const va::Engine& h3, bool solve_if_nonzero = true,
    const std::map<std::string, Rat>* overrides = nullptr);

/** The same combination with one term's coefficient replaced (negative control). */
va::State decoupling_with_coefficient(const va::Engine& h3, const std::string& label,
                                      const Rat& coeff);

/** Classical-symbol check: the head of the relation reproduces the Gram
    identity c_{012}^2 = det(q) with all corrections collapsing to zero. */
bool decoupling_symbol_matches_classical(const va::Engine& h3);

}  // namespace vc::orb
