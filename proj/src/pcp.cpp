#include "pcpg/pcp.hpp"

#include <future>
#include <stdexcept>

namespace pcpg {

namespace {

std::vector<Word> side_images(const std::vector<std::pair<Word, Word>> &pairs, bool second) {
  std::vector<Word> v;
  v.reserve(pairs.size());
  for (const auto &p : pairs) v.push_back(second ? p.second : p.first);
  return v;
}

} // namespace

std::pair<Word, Word> instance_sides(const GpcpInstance &inst, const Word &w) {
  std::vector<Word> g = side_images(inst.pairs, false);
  std::vector<Word> h = side_images(inst.pairs, true);
  return {inst.a1 * substitute(w, g) * inst.b1, inst.a2 * substitute(w, h) * inst.b2};
}

std::optional<SolutionWitness> pcp_decide_nilpotent(const PcPresentation &G,
                                                    const PcpInstance &inst) {
  if (inst.pairs.empty()) throw std::invalid_argument("pcp_decide_nilpotent: empty instance");
  std::vector<Word> g = side_images(inst.pairs, false);
  std::vector<Word> h = side_images(inst.pairs, true);
  EqualizerResult eq =
      equalizer_free_source(static_cast<int>(inst.pairs.size()), G.klass, G, g, h);
  // Candidate words may carry very large exponents; evaluate them as products
  // of precollected image elements instead of collecting the substituted word.
  std::vector<PcElement> gel;
  for (const Word &w : g) gel.push_back(G.normal_form(w));
  for (const Word &cand : eq.generators) {
    PcElement acc = G.identity();
    const auto &ls = cand.letters();
    for (std::size_t i = 0; i < ls.size();) {
      std::size_t j = i;
      while (j < ls.size() && ls[j].gen == ls[i].gen && ls[j].sign == ls[i].sign) ++j;
      acc = G.mul(acc, G.power(gel[ls[i].gen], Int(ls[i].sign) * Int(j - i)));
      i = j;
    }
    if (!acc.is_identity()) return SolutionWitness{cand, substitute(cand, g)};
  }
  return std::nullopt;
}

GpcpInstance normalize_gpcp(const GpcpInstance &inst) {
  GpcpInstance out;
  out.target_alphabet = inst.target_alphabet;
  Word b = inst.b1 * inst.b2.inverse();
  out.a1 = inst.a2.inverse() * inst.a1 * b;
  for (const auto &[g, h] : inst.pairs) out.pairs.push_back({g.conjugate(b), h});
  return out;
}

namespace {

// Letter order for shortlex: generator index ascending, positive before negative.
struct Searcher {
  const GpcpInstance &inst;
  const WordOracle &oracle;
  std::vector<Word> g, h;
  int n;
  std::size_t max_step = 0;
  bool require_nonvanishing = false;

  Searcher(const GpcpInstance &i, const WordOracle &o)
      : inst(i), oracle(o), g(side_images(i.pairs, false)), h(side_images(i.pairs, true)),
        n(static_cast<int>(i.pairs.size())) {
    for (int j = 0; j < n; ++j) max_step = std::max(max_step, g[j].length() + h[j].length());
  }

  bool accept(const Word &vg, const Word &vh) const {
    Word lhs = vg * inst.b1;
    if (require_nonvanishing && oracle.trivial(lhs)) return false;
    return oracle.trivial(lhs * (vh * inst.b2).inverse());
  }

  // DFS over freely reduced words of exactly `len` letters, lex order,
  // restricted to first letter == `first` when first.gen >= 0.
  std::optional<Word> dfs(int len, Letter first, std::vector<Letter> &stack, const Word &vg,
                          const Word &vh) const {
    int depth = static_cast<int>(stack.size());
    if (depth == len) {
      if (accept(vg, vh)) {
        Word w;
        for (const Letter &l : stack) w = w * Word::letter(l.gen, l.sign);
        return w;
      }
      return std::nullopt;
    }
    if (oracle.free_group) {
      std::size_t a = vg.length(), b = vh.length();
      std::size_t gap = a > b ? a - b : b - a;
      if (gap > static_cast<std::size_t>(len - depth) * max_step + inst.b1.length() +
                    inst.b2.length())
        return std::nullopt;
    }
    for (int gen = 0; gen < n; ++gen)
      for (int sign = 1; sign >= -1; sign -= 2) {
        if (depth == 0 && first.gen >= 0 && (gen != first.gen || sign != first.sign)) continue;
        if (!stack.empty() && stack.back().gen == gen && stack.back().sign == -sign)
          continue; // keep the candidate freely reduced
        stack.push_back({gen, sign});
        Word vg2 = vg * (sign > 0 ? g[gen] : g[gen].inverse());
        Word vh2 = vh * (sign > 0 ? h[gen] : h[gen].inverse());
        auto r = dfs(len, first, stack, vg2, vh2);
        stack.pop_back();
        if (r) return r;
      }
    return std::nullopt;
  }

  std::optional<Word> search_length(int len, int threads) const {
    if (len == 0) {
      std::vector<Letter> stack;
      return dfs(0, {-1, 0}, stack, inst.a1, inst.a2);
    }
    std::vector<Letter> firsts;
    for (int gen = 0; gen < n; ++gen)
      for (int sign = 1; sign >= -1; sign -= 2) firsts.push_back({gen, sign});
    if (threads <= 1) {
      for (const Letter &f : firsts) {
        std::vector<Letter> stack;
        auto r = dfs(len, f, stack, inst.a1, inst.a2);
        if (r) return r;
      }
      return std::nullopt;
    }
    // Partition by first letter; the first subtree (in letter order) with a
    // hit carries the shortlex-minimal witness of this length.
    std::vector<std::future<std::optional<Word>>> futs;
    for (const Letter &f : firsts)
      futs.push_back(std::async(std::launch::async, [this, len, f]() {
        std::vector<Letter> stack;
        return dfs(len, f, stack, inst.a1, inst.a2);
      }));
    for (auto &fu : futs) {
      auto r = fu.get();
      if (r) return r; // futures are ordered by first letter
    }
    return std::nullopt;
  }

  std::optional<SolutionWitness> run(int M, int threads) const {
    for (int len = 0; len <= M; ++len) {
      auto r = search_length(len, threads);
      if (r) {
        Word value = inst.a1 * substitute(*r, g) * inst.b1;
        return SolutionWitness{*r, value};
      }
    }
    return std::nullopt;
  }
};

} // namespace

std::optional<SolutionWitness> bounded_gpcp_search(const GpcpInstance &inst,
                                                   const WordOracle &oracle, int M,
                                                   int threads) {
  if (M < 0) throw std::invalid_argument("bounded_gpcp_search: negative bound");
  if (inst.pairs.empty()) throw std::invalid_argument("bounded_gpcp_search: empty instance");
  return Searcher(inst, oracle).run(M, threads);
}

std::optional<SolutionWitness> bounded_pcp_search(const PcpInstance &inst,
                                                  const WordOracle &oracle, int M,
                                                  int threads) {
  GpcpInstance g;
  g.target_alphabet = inst.target_alphabet;
  g.pairs = inst.pairs;
  Searcher s(g, oracle);
  s.require_nonvanishing = true;
  if (M < 0) throw std::invalid_argument("bounded_pcp_search: negative bound");
  if (inst.pairs.empty()) throw std::invalid_argument("bounded_pcp_search: empty instance");
  return s.run(M, threads);
}

bool verify_solution(const GpcpInstance &inst, const Word &w, const WordOracle &oracle) {
  auto [lhs, rhs] = instance_sides(inst, w);
  return oracle.trivial(lhs * rhs.inverse());
}

bool coset_structure_check(const GpcpInstance &inst, const Word &w0, const Word &w,
                           const WordOracle &oracle) {
  if (!verify_solution(inst, w0, oracle) || !verify_solution(inst, w, oracle))
    throw std::invalid_argument("coset_structure_check: inputs do not solve the instance");
  Word u = w0.inverse() * w;
  std::vector<Word> g = side_images(inst.pairs, false);
  std::vector<Word> h = side_images(inst.pairs, true);
  return oracle.trivial(substitute(u, g) * substitute(u, h).inverse());
}

} // namespace pcpg
