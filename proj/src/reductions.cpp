#include "pcpg/reductions.hpp"

#include <stdexcept>

namespace pcpg {

std::vector<std::pair<Word, Word>> build_dr(const Alphabet &A, const std::vector<Word> &R) {
  std::vector<std::pair<Word, Word>> pairs;
  for (std::size_t i = 0; i < A.size(); ++i) {
    Word a = Word::letter(static_cast<int>(i));
    pairs.push_back({a, a.inverse()});
  }
  for (std::size_t i = 0; i < A.size(); ++i) {
    Word a = Word::letter(static_cast<int>(i));
    pairs.push_back({a.inverse(), a});
  }
  for (const Word &r : R) pairs.push_back({r, Word()});
  for (const Word &r : R) pairs.push_back({r.inverse(), Word()});
  return pairs;
}

GpcpInstance encode_hwp_gpcp(const HwpInstance &inst) {
  GpcpInstance out;
  out.target_alphabet = inst.alphabet;
  for (const auto &[u, v] : build_dr(inst.alphabet, inst.relators))
    out.pairs.push_back({u, v.inverse()});
  out.a1 = inst.w;
  return out;
}

Word sandwich_apply(const Word &w, const std::vector<std::pair<Word, Word>> &seq) {
  Word acc = w;
  for (const auto &[u, v] : seq) acc = v * acc * u;
  return acc;
}

GpcpInstance encode_dtc_gpcp(const DtcInstance &inst) {
  if (inst.phi.size() != inst.alphabet.size() || inst.psi.size() != inst.alphabet.size())
    throw std::invalid_argument("encode_dtc_gpcp: image count does not match generators");
  GpcpInstance out;
  out.target_alphabet = inst.alphabet;
  for (std::size_t i = 0; i < inst.alphabet.size(); ++i)
    out.pairs.push_back({inst.phi[i], inst.psi[i]});
  out.a1 = inst.u;
  out.b2 = inst.v;
  return out;
}

DtcInstance decode_gpcp_dtc(const GpcpInstance &inst, int n, int c) {
  if (static_cast<int>(inst.pairs.size()) != n)
    throw std::invalid_argument("decode_gpcp_dtc: pair count does not match n");
  if (static_cast<int>(inst.target_alphabet.size()) != n)
    throw std::invalid_argument("decode_gpcp_dtc: alphabet rank does not match n");
  if (c < 1) throw std::invalid_argument("decode_gpcp_dtc: class must be >= 1");
  GpcpInstance norm = normalize_gpcp(inst);
  DtcInstance out;
  out.alphabet = inst.target_alphabet;
  for (const auto &[g, h] : norm.pairs) {
    out.phi.push_back(g);
    out.psi.push_back(h);
  }
  // u w^phi = w^psi v with u the normalized constant and v = 1 matches
  // a w(g) = w(h).
  out.u = norm.a1;
  out.v = Word();
  return out;
}

} // namespace pcpg
