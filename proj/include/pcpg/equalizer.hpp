#pragma once

#include "pcpg/pc.hpp"

#include <optional>

namespace pcpg {

struct EqualizerResult {
  std::vector<Word> generators; // words over the source's original alphabet
  // (n, c+1) when the generators are modulo gamma_{c+1}(F_n)
  std::optional<std::pair<int, int>> modulo_gamma;
};

// Generating set of E(phi,psi) <= H for validated homomorphisms H -> G.
EqualizerResult equalizer_nilpotent(const PcPresentation &H, const PcPresentation &G,
                                    const NilHom &phi, const NilHom &psi);

// Source F_n, target nilpotent of class <= c: generators of E(phi,psi)
// modulo gamma_{c+1}(F_n), computed in N_{n,c}.
EqualizerResult equalizer_free_source(int n, int c, const PcPresentation &G,
                                      const std::vector<Word> &phi_images,
                                      const std::vector<Word> &psi_images);

// The free nilpotent group N_{n,c} with generators x1..xn.
PcPresentation free_nilpotent(int n, int c);

} // namespace pcpg
