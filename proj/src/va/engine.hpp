#pragma once

#include "va/state.hpp"

#include <variant>

namespace vc::va {

struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EngineConfig {
  int max_nesting = 8;  // depth of nested OPE-coefficient expansions
};

/** Mode actions of fields on the vacuum PBW module, and everything derived
    from them: the state-field correspondence, canonical normal forms, OPEs,
    Wick products, Jacobi and commutant computations.

    All methods are pure; an Engine can be shared across threads. */
class Engine {
 public:
  explicit Engine(const Presentation& P, EngineConfig cfg = {}) : p_(P), cfg_(cfg) {}
  const Presentation& pres() const { return p_; }

  // mode actions
  State gen_mode(uint32_t g, long m, const State& v, int depth = 0) const;
  State field_mode(const FieldExpr& f, long n, const State& v, int depth = 0) const;

  // state-field correspondence
  State state_of(const FieldExpr& f) const;
  FieldExpr field_of(const State& v) const;
  /** PBW-canonical rewriting of f (round trip through the module). */
  FieldExpr canonical(const FieldExpr& f) const;

  /** Singular part of the OPE of two (canonical or not) fields. */
  PoleExpansion ope(const FieldExpr& a, const FieldExpr& b) const;
  /** n-th product a_(n) b for any integer n. */
  FieldExpr nproduct(const FieldExpr& a, long n, const FieldExpr& b) const;
  /** Right-nested iterated Wick product of the given factors. */
  FieldExpr wick(const std::vector<FieldExpr>& factors) const;

  FieldExpr gen_field(uint32_t g, unsigned deriv = 0) const {
    return FieldExpr::monomial({Letter{g, deriv}});
  }
  FieldExpr gen_field(const std::string& name, unsigned deriv = 0) const {
    return gen_field(p_.gen_index(name), deriv);
  }

  Rat field_weight_bound(const FieldExpr& f) const;  // max term weight
  Rat state_weight_bound(const State& v) const;

 private:
  const Presentation& p_;
  EngineConfig cfg_;

  State gen_mode_word(uint32_t g, long m, const BasisWord& w, int depth) const;
  State word_mode(const Word& w, long n, const State& v, int depth) const;
  State commutator(uint32_t g, long m, uint32_t h, long n, const State& rest,
                   int depth) const;
  State deriv_gen_mode(uint32_t g, unsigned d, long j, const State& v, int depth) const;
};

// ---- higher-level checks ------------------------------------------------

/** Sugawara vector of affine sl2 ("affine-sl2" preset); rejects k = -2. */
FieldExpr sugawara_sl2(const Engine& eng, const Scalar& level);

struct VirasoroMismatch {
  int pole;
  FieldExpr expected, got;
};

/** Checks L against the Virasoro OPE shape; returns the central charge or the
    first offending pole. */
std::variant<Scalar, VirasoroMismatch> check_virasoro(const Engine& eng,
                                                      const FieldExpr& L);

struct JacobiFailure {
  long m, n;
  State residual;
};
struct JacobiReport {
  bool pass = true;
  long instances = 0;
  std::vector<JacobiFailure> failures;
};

/** Verifies commutator-format Borcherds identities
      a_(m) b_(n) c  -+  b_(n) a_(m) c  =  sum_j C(m,j) (a_(j) b)_(m+n-j) c
    on the generator triple (a, b, c) for all m, n >= 0 with m + n <= bound
    (and the intrinsic weight cutoffs). */
JacobiReport jacobi_check(const Engine& eng, uint32_t a, uint32_t b, uint32_t c,
                          long mn_bound = 1 << 20);

struct CommutantResult {
  std::vector<State> basis;
  bool formal_specialization_caveat = false;  // set when levels are specialized
};

/** Exact basis of { v in weight-w piece : a_(n) v = 0 for all listed a, n >= 0 }. */
CommutantResult commutant_weight_space(const Engine& eng,
                                       const std::vector<FieldExpr>& subalgebra_gens,
                                       const Rat& w, size_t dim_bound = 200000);

}  // namespace vc::va
