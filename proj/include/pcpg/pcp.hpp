#pragma once

#include "pcpg/equalizer.hpp"

#include <functional>
#include <optional>

namespace pcpg {

struct PcpInstance {
  Alphabet target_alphabet;
  std::vector<std::pair<Word, Word>> pairs; // (g_i, h_i)
};

struct GpcpInstance {
  Alphabet target_alphabet;
  std::vector<std::pair<Word, Word>> pairs;
  Word a1, b1, a2, b2; // constants; all trivial = homogeneous instance

  bool constants_trivial() const {
    return a1.empty() && b1.empty() && a2.empty() && b2.empty();
  }
  PcpInstance homogeneous() const { return {target_alphabet, pairs}; }
};

struct SolutionWitness {
  Word w;            // over x_1..x_n (n = pair count)
  Word common_value; // value of the g-side, over the target alphabet
};

// Word-problem test for the target group; `free_group` enables length pruning
// during bounded search.
struct WordOracle {
  std::function<bool(const Word &)> trivial;
  bool free_group = false;

  static WordOracle free_reduction() {
    return {[](const Word &w) { return w.empty(); }, true};
  }
  static WordOracle nilpotent(const PcPresentation &P) {
    return {[&P](const Word &w) { return P.is_identity_word(w); }, false};
  }
};

// Theorem criterion for PCP in a nilpotent target: YES iff some equalizer
// generator has a nonvanishing image.
std::optional<SolutionWitness> pcp_decide_nilpotent(const PcPresentation &G,
                                                    const PcpInstance &inst);

// Equivalent instance with b1 = a2 = b2 = 1.
GpcpInstance normalize_gpcp(const GpcpInstance &inst);

// Shortlex-minimal witness of length <= M, or nullopt. The reported witness is
// independent of the thread count.
std::optional<SolutionWitness> bounded_gpcp_search(const GpcpInstance &inst,
                                                   const WordOracle &oracle, int M,
                                                   int threads = 1);

// Homogeneous search accepting only witnesses with nonvanishing common value.
std::optional<SolutionWitness> bounded_pcp_search(const PcpInstance &inst,
                                                  const WordOracle &oracle, int M,
                                                  int threads = 1);

bool verify_solution(const GpcpInstance &inst, const Word &w, const WordOracle &oracle);

// Lemma check: for two solutions w0, w of the same instance, u = w0^{-1} w
// solves the homogeneous instance.
bool coset_structure_check(const GpcpInstance &inst, const Word &w0, const Word &w,
                           const WordOracle &oracle);

// Substituted sides of a candidate: (a1 w(g) b1, a2 w(h) b2).
std::pair<Word, Word> instance_sides(const GpcpInstance &inst, const Word &w);

} // namespace pcpg
