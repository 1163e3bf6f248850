#pragma once

#include "pcpg/abelian.hpp"
#include "pcpg/words.hpp"

#include <map>
#include <vector>

namespace pcpg {

// Finite presentation interpreted in the class of nilpotent groups of class <= class_bound.
struct NilPresentation {
  Alphabet alphabet;
  std::vector<Word> relators;
  int class_bound = 1;
};

using PcTerm = std::pair<int, Int>; // (pc generator index, exponent)
using PcWord = std::vector<PcTerm>;

struct PcElement {
  std::vector<Int> exps;
  bool operator==(const PcElement &) const = default;
  bool is_identity() const {
    for (const Int &v : exps)
      if (v != 0) return false;
    return true;
  }
};

// Weighted consistent polycyclic presentation of a f.g. nilpotent group.
// Generators are ordered by non-decreasing weight; tails involve only
// generators of strictly higher weight, so collection terminates.
class PcPresentation {
public:
  Alphabet alphabet;          // original generators
  std::vector<Word> relators; // defining relators (kept for hom validation)
  int klass = 1;

  std::vector<int> weight;
  std::vector<Int> modulus;                   // 0 = infinite order in its layer
  std::vector<PcWord> power_tail;             // g_i^{m_i} = tail, indices > i
  std::vector<std::map<int, PcWord>> conj_tail; // conj_tail[j][i] = tail of [g_j,g_i], j > i
  std::vector<PcWord> origin;                 // original generator -> pc word

  std::size_t ngens() const { return weight.size(); }
  int add_gen(int w, Int mod);

  PcElement identity() const { return PcElement{std::vector<Int>(ngens())}; }
  PcElement gen(int i) const;

  PcElement mul(const PcElement &a, const PcElement &b) const;
  PcElement mul_word(PcElement a, const PcWord &w) const;
  PcElement inverse(const PcElement &a) const;
  PcElement power(const PcElement &a, const Int &e) const;
  PcElement collect(const PcWord &w) const;

  PcElement normal_form(const Word &w) const; // word over the original alphabet
  bool is_identity_word(const Word &w) const;

  // Total order when finite, 0 otherwise.
  Int order() const;

  std::string describe() const;
};

// Largest class-<=c quotient of <alphabet | relators>, as a weighted pc presentation.
PcPresentation nilpotent_quotient(const NilPresentation &P);

// Quotient by the top lower-central layer: drops the weight-c generators.
PcPresentation truncate_top(const PcPresentation &P);

// Re-runs the consistency checks; true for every presentation this module builds.
bool check_consistency(const PcPresentation &P);

// The subgroup generated by the pc generators of weight >= i, which must be
// abelian (always the case for i = klass). Trivial when i > klass.
struct GammaLayer {
  const PcPresentation *pres = nullptr;
  std::vector<int> span; // pc generator indices
  AbelianCanon canon;

  std::vector<Int> coords_of(const PcElement &x) const; // throws if x outside the span
  PcElement element_of(const std::vector<Int> &coords) const;
};

GammaLayer gamma_layer(const PcPresentation &P, int i);

// All freely non-trivial left-normed iterated commutators of the given words,
// weights 2..c.
std::vector<Word> commutant_generators(const std::vector<Word> &gens, int c);

struct NilHom {
  PcPresentation source;
  PcPresentation target;
  std::vector<Word> images; // one word over target's original alphabet per source generator
  bool validated = false;
};

// True iff every source relator maps to the identity and the source's
// nilpotency class is respected; marks the hom validated.
bool hom_validate(NilHom &phi);

// normal_form(substitute(w, images)); requires a validated hom.
PcElement hom_apply(const NilHom &phi, const Word &w);

} // namespace pcpg
