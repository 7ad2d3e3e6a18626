#pragma once

#include "va/field.hpp"

#include <map>
#include <string>

namespace vc::va {

enum class Parity { Even, Odd };
enum class Kind { FreeField, StructureConstant };

struct GenSpec {
  std::string name;
  Parity parity;
  Rat weight;  // conformal weight, positive, denominator 1 or 2
};

struct algebra_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/** A vertex (super)algebra presentation: generators, formal parameters and the
    singular OPEs of generator pairs. Immutable after construction; the pair
    table is completed by skew-symmetry for missing orientations. */
class Presentation {
 public:
  Presentation(std::string name, Kind kind, std::vector<std::string> params,
               std::vector<GenSpec> gens,
               std::map<std::pair<uint32_t, uint32_t>, PoleExpansion> opes);

  const std::string& name() const { return name_; }
  Kind kind() const { return kind_; }
  const VarPoolPtr& params() const { return params_; }

  size_t ngens() const { return gens_.size(); }
  const GenSpec& gen(uint32_t i) const { return gens_[i]; }
  uint32_t gen_index(const std::string& name) const;

  bool odd(uint32_t i) const { return gens_[i].parity == Parity::Odd; }
  const Rat& weight(uint32_t i) const { return gens_[i].weight; }
  Rat word_weight(const Word& w) const;
  int word_parity(const Word& w) const;  // 0 even, 1 odd

  /** Completed table entry for the ordered generator pair (a, b). */
  const PoleExpansion& pair_ope(uint32_t a, uint32_t b) const {
    return table_[a * gens_.size() + b];
  }

  /** Specializes every formal parameter to a rational value. */
  Presentation specialize(const std::vector<Rat>& values) const;

  /** Returns a copy with one pole coefficient replaced (for negative controls). */
  Presentation perturbed(const std::string& a, const std::string& b, int pole,
                         const FieldExpr& replacement) const;

 private:
  std::string name_;
  Kind kind_;
  VarPoolPtr params_;
  std::vector<GenSpec> gens_;
  std::map<std::string, uint32_t> index_;
  std::vector<PoleExpansion> table_;

  void validate(const std::map<std::pair<uint32_t, uint32_t>, PoleExpansion>& opes);
  void complete_table(std::map<std::pair<uint32_t, uint32_t>, PoleExpansion> opes);
};

/** Parses the textual presentation format (see README) into a Presentation. */
Presentation parse_presentation(const std::string& text);

/** Parses a field expression ("2*:h hp: - D^2 e" ...) in the context of P. */
FieldExpr parse_field(const Presentation& P, const std::string& text);

// ---- bundled families -------------------------------------------------

/** Rank-n Heisenberg algebra: alpha<i> alpha<j> ~ delta_ij (z-w)^-2. */
Presentation heisenberg(unsigned n);
/** n free fermions of weight 1/2: phi<i> phi<j> ~ delta_ij (z-w)^-1. */
Presentation free_fermion(unsigned n);
/** Odd generalized free fields: phi<i> phi<j> ~ delta_ij (z-w)^-3. */
Presentation godd(unsigned s);
/** Even generalized free field t with t t ~ (z-w)^-4. */
Presentation tfield();
/** beta-gamma system of weight 1/2. */
Presentation betagamma();
/** Tensor square of affine sl2 at formal levels k1, k2 (generators e1,... e2,...). */
Presentation affine_sl2_pair();

/** Embedded named preset ("affine-sl2", "large-n4", "small-n4", "heisenberg3", ...). */
Presentation preset(const std::string& name);
std::vector<std::string> preset_names();

}  // namespace vc::va
