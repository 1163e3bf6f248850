#pragma once

#include "pcpg/intmat.hpp"
#include "pcpg/words.hpp"

namespace pcpg {

// Canonical decomposition Z^l x Z/d_1 x ... x Z/d_t with d_1 | d_2 | ... .
// Canonical coordinates are ordered free part first, then torsion.
struct AbelianCanon {
  std::size_t free_rank = 0;
  std::vector<Int> torsion; // invariant factors, each >= 2
  IntMatrix to_canonical;   // original-generator exponents -> canonical coords
  IntMatrix from_canonical; // canonical generators as original-generator exponents

  std::size_t dim() const { return free_rank + torsion.size(); }
  std::size_t original_gens() const { return to_canonical.cols(); }

  // Reduce torsion coordinates into [0, d).
  std::vector<Int> normalize(std::vector<Int> coords) const;
  std::vector<Int> project(const std::vector<Int> &orig_exponents) const;
  bool is_trivial_element(const std::vector<Int> &coords) const;
  std::vector<Int> add(const std::vector<Int> &a, const std::vector<Int> &b) const;
  std::vector<Int> neg(const std::vector<Int> &a) const;

  // Lift a canonical-coordinate element to a word in the original generators.
  Word lift_word(const std::vector<Int> &coords) const;
};

// Canonical form of < gens | rows of relator_rows >; one column per generator.
AbelianCanon canonicalize(std::size_t ngens, const IntMatrix &relator_rows);

// Integer-matrix homomorphism between canons, in canonical coordinates
// (matrix column j = image of source canonical generator j).
struct AbelianHom {
  AbelianCanon source;
  AbelianCanon target;
  IntMatrix matrix;

  bool respects_torsion() const;
  std::vector<Int> apply(const std::vector<Int> &src_coords) const;
};

AbelianHom hom_difference(const AbelianHom &phi, const AbelianHom &psi);

// Generators of ker(phi) in canonical coordinates of the source.
std::vector<std::vector<Int>> hom_kernel(const AbelianHom &phi);

// Generators of E(phi,psi) = ker(g -> phi(g) psi(g)^{-1}).
std::vector<std::vector<Int>> hom_equalizer(const AbelianHom &phi, const AbelianHom &psi);

// Generators of {m in Z^k : sum m_j targets_j = 0 in B}.
std::vector<std::vector<Int>>
mixed_kernel(const AbelianCanon &B, const std::vector<std::vector<Int>> &targets);

} // namespace pcpg
