#pragma once

#include "pcpg/pcp.hpp"

namespace pcpg {

// Hereditary word problem instance: is w trivial in F(A)/<R>^F ?
struct HwpInstance {
  Alphabet alphabet;
  std::vector<Word> relators;
  Word w;
};

// Double twisted conjugacy instance: is there w with u w^phi = w^psi v ?
struct DtcInstance {
  Alphabet alphabet;
  std::vector<Word> phi, psi; // endomorphism images, one per generator
  Word u, v;
};

// {(a,a^{-1}), (a^{-1},a) : a in A} u {(r,1), (r^{-1},1) : r in R}
std::vector<std::pair<Word, Word>> build_dr(const Alphabet &A, const std::vector<Word> &R);

// Pairs (u, v^{-1}) for (u,v) in D_R with constant w; solvable over F(A)
// iff w = 1 in F(A)/<R>^F.
GpcpInstance encode_hwp_gpcp(const HwpInstance &inst);

// v_k(...(v_1 w u_1)...)u_k, freely reduced.
Word sandwich_apply(const Word &w, const std::vector<std::pair<Word, Word>> &seq);

// Pairs (phi(a_i), psi(a_i)) with constants (u, 1, 1, v).
GpcpInstance encode_dtc_gpcp(const DtcInstance &inst);

// Inverse direction over the relatively free group N_{n,c}: an n-pair
// instance becomes endomorphisms x_i -> g_i, x_i -> h_i with u the
// normalized constant and v = 1.
DtcInstance decode_gpcp_dtc(const GpcpInstance &inst, int n, int c);

} // namespace pcpg
