#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pcpg/pcp.hpp"

#include <random>

using namespace pcpg;

namespace {

const Alphabet AB({"a", "b"});
const Alphabet A1({"a"});
Word W(const std::string &s) { return parse_word(s, AB); }
Word W1(const std::string &s) { return parse_word(s, A1); }

PcPresentation group_z() { return nilpotent_quotient(NilPresentation{A1, {}, 1}); }
PcPresentation group_f22() { return nilpotent_quotient(NilPresentation{AB, {}, 2}); }

} // namespace

TEST_CASE("pcp_decide examples") {
  PcPresentation z = group_z();
  {
    auto r = pcp_decide_nilpotent(z, {A1, {{W1("a^5"), W1("a^5")}}});
    REQUIRE(r);
    CHECK(r->w == Word::letter(0));
    CHECK(z.normal_form(r->common_value) == z.normal_form(W1("a^5")));
  }
  CHECK(!pcp_decide_nilpotent(z, {A1, {{W1("a^2"), W1("a^3")}}}));
  {
    PcPresentation f22 = group_f22();
    auto r = pcp_decide_nilpotent(f22, {AB, {{W("a"), W("a")}, {W("b"), W("b [a,b]")}}});
    REQUIRE(r);
    CHECK(!f22.is_identity_word(r->common_value));
  }
  CHECK_THROWS(pcp_decide_nilpotent(z, {A1, {}}));
}

TEST_CASE("normalize_gpcp") {
  GpcpInstance plain{AB, {{W("a"), W("b")}}, {}, {}, {}, {}};
  GpcpInstance n = normalize_gpcp(plain);
  CHECK(n.pairs == plain.pairs);
  CHECK(n.constants_trivial());

  GpcpInstance only_a2{AB, {{W("a"), W("b")}}, {}, {}, W("a"), {}};
  GpcpInstance n2 = normalize_gpcp(only_a2);
  CHECK(n2.a1 == W("a^-1"));
  CHECK(n2.pairs == only_a2.pairs);

  GpcpInstance g{AB, {{W("a b a^-1"), W("b")}}, W("a"), W("b"), {}, {}};
  GpcpInstance n3 = normalize_gpcp(g);
  CHECK(n3.a1 == W("a b"));
  CHECK(n3.pairs[0].first == W("b^-1 a b a^-1 b"));
  CHECK(n3.pairs[0].second == W("b"));
}

TEST_CASE("normalize preserves the solution set") {
  std::mt19937 rng(8);
  std::uniform_int_distribution<int> len(0, 3), gen(0, 1), sgn(0, 1);
  auto rnd = [&]() {
    std::vector<Letter> ls;
    int n = len(rng);
    for (int i = 0; i < n; ++i) ls.push_back({gen(rng), sgn(rng) ? 1 : -1});
    return Word::reduce(ls);
  };
  WordOracle free = WordOracle::free_reduction();
  for (int t = 0; t < 60; ++t) {
    GpcpInstance inst{AB, {{rnd(), rnd()}, {rnd(), rnd()}}, rnd(), rnd(), rnd(), rnd()};
    GpcpInstance norm = normalize_gpcp(inst);
    std::uniform_int_distribution<int> wl(0, 5);
    for (int u = 0; u < 20; ++u) {
      std::vector<Letter> ls;
      int n = wl(rng);
      for (int i = 0; i < n; ++i) ls.push_back({gen(rng), sgn(rng) ? 1 : -1});
      Word w = Word::reduce(ls);
      CHECK(verify_solution(inst, w, free) == verify_solution(norm, w, free));
    }
  }
}

TEST_CASE("bounded_gpcp_search examples") {
  WordOracle free = WordOracle::free_reduction();
  {
    GpcpInstance inst{AB, {{W("b"), W("a b")}}, W("a"), {}, {}, {}};
    auto r = bounded_gpcp_search(inst, free, 1);
    REQUIRE(r);
    CHECK(r->w == Word::letter(0));
    CHECK(r->common_value == W("a b"));
  }
  {
    GpcpInstance inst{AB, {{Word(), Word()}}, W("a"), {}, {}, {}};
    CHECK(!bounded_gpcp_search(inst, free, 6));
  }
  {
    GpcpInstance inst{AB, {{W("a"), W("a")}, {W("b"), W("b")}}, {}, {}, {}, {}};
    auto r = bounded_gpcp_search(inst, free, 0);
    REQUIRE(r);
    CHECK(r->w.empty());
  }
  CHECK_THROWS(bounded_gpcp_search(GpcpInstance{AB, {}, {}, {}, {}, {}}, free, 3));
  CHECK_THROWS(bounded_gpcp_search(GpcpInstance{AB, {{W("a"), W("a")}}, {}, {}, {}, {}}, free, -1));
}

TEST_CASE("bounded_pcp_search examples") {
  WordOracle free = WordOracle::free_reduction();
  {
    PcpInstance inst{AB, {{W("a"), W("a")}, {W("b"), W("b")}}};
    auto r = bounded_pcp_search(inst, free, 1);
    REQUIRE(r);
    CHECK(r->w == Word::letter(0));
    CHECK(r->common_value == W("a"));
  }
  CHECK(!bounded_pcp_search(PcpInstance{AB, {{W("a"), W("b")}}}, free, 3));
  CHECK(!bounded_pcp_search(PcpInstance{A1, {{W1("a"), W1("a^-1")}}},
                            WordOracle::free_reduction(), 3));
}

TEST_CASE("search is monotone in the bound and shortlex-first") {
  WordOracle free = WordOracle::free_reduction();
  GpcpInstance inst{AB, {{W("a b"), W("b")}, {W("b"), W("a b")}}, W("a"), {}, {}, {}};
  std::optional<SolutionWitness> first;
  for (int M = 0; M <= 6; ++M) {
    auto r = bounded_gpcp_search(inst, free, M);
    if (first) {
      REQUIRE(r);
      CHECK(r->w == first->w);
    } else if (r)
      first = r;
  }
  REQUIRE(first);
  // the witness is minimal: nothing shorter or lex-smaller works
  CHECK(verify_solution(inst, first->w, free));
}

TEST_CASE("witness independent of thread count") {
  WordOracle free = WordOracle::free_reduction();
  GpcpInstance inst{AB, {{W("a b"), W("b a")}, {W("b"), W("a b")}, {W("a"), W("a")}},
                    W("a"), {}, {}, {}};
  auto r1 = bounded_gpcp_search(inst, free, 6, 1);
  auto r4 = bounded_gpcp_search(inst, free, 6, 4);
  CHECK((r1.has_value() == r4.has_value()));
  if (r1) CHECK(r1->w == r4->w);

  PcpInstance pinst{AB, {{W("a"), W("a")}, {W("b"), W("b [a,b]")}}};
  PcPresentation f22 = group_f22();
  WordOracle nil2{[&f22](const Word &w) { return f22.is_identity_word(w); }, false};
  auto p1 = bounded_pcp_search(pinst, nil2, 3, 1);
  auto p4 = bounded_pcp_search(pinst, nil2, 3, 4);
  REQUIRE(p1);
  REQUIRE(p4);
  CHECK(p1->w == p4->w);
}

TEST_CASE("search with nilpotent oracle") {
  PcPresentation z = group_z();
  WordOracle oz{[&z](const Word &w) { return z.is_identity_word(w); }, false};
  // (a^2, a^3) has the solution x1^... in Z? 2k = 3k forces k = 0 -> vanishing
  PcpInstance inst{A1, {{W1("a^2"), W1("a^3")}}};
  CHECK(!bounded_pcp_search(inst, oz, 4));
  // with constant: a * w(a^2) = w(a^3) -> 1 + 2k = 3k -> k = 1
  GpcpInstance g{A1, {{W1("a^2"), W1("a^3")}}, W1("a"), {}, {}, {}};
  auto r = bounded_gpcp_search(g, oz, 2);
  REQUIRE(r);
  CHECK(r->w == Word::letter(0));
}

TEST_CASE("decision agrees with bounded search on random class-2 instances") {
  std::mt19937 rng(31337);
  PcPresentation f22 = group_f22();
  WordOracle oracle{[&f22](const Word &w) { return f22.is_identity_word(w); }, false};
  std::uniform_int_distribution<int> len(0, 4), gen(0, 1), sgn(0, 1);
  auto rnd = [&]() {
    std::vector<Letter> ls;
    int n = len(rng);
    for (int i = 0; i < n; ++i) ls.push_back({gen(rng), sgn(rng) ? 1 : -1});
    return Word::reduce(ls);
  };
  for (int t = 0; t < 100; ++t) {
    PcpInstance inst{AB, {{rnd(), rnd()}, {rnd(), rnd()}}};
    auto decision = pcp_decide_nilpotent(f22, inst);
    if (decision) {
      std::vector<Word> g{inst.pairs[0].first, inst.pairs[1].first};
      std::vector<Word> h{inst.pairs[0].second, inst.pairs[1].second};
      Word vg = substitute(decision->w, g), vh = substitute(decision->w, h);
      CHECK(f22.normal_form(vg) == f22.normal_form(vh));
      CHECK(!f22.is_identity_word(vg));
    }
    auto found = bounded_pcp_search(inst, oracle, 3);
    if (found) CHECK(static_cast<bool>(decision)); // search success implies YES
  }
}

TEST_CASE("verify_solution examples") {
  WordOracle free = WordOracle::free_reduction();
  GpcpInstance inst{AB, {{W("a"), W("b")}}, {}, {}, {}, {}};
  CHECK(!verify_solution(inst, Word::letter(0), free));
  CHECK(verify_solution(inst, Word(), free));
}

TEST_CASE("coset_structure_check") {
  WordOracle free = WordOracle::free_reduction();
  // instance with multiple solutions: pair (a, a), constant-free
  GpcpInstance inst{A1, {{W1("a"), W1("a")}}, {}, {}, {}, {}};
  Word w0 = Word::letter(0), w = Word::letter(0).pow(3);
  CHECK(coset_structure_check(inst, w0, w, free));
  CHECK(coset_structure_check(inst, w0, w0, free));
  CHECK_THROWS(coset_structure_check(GpcpInstance{AB, {{W("a"), W("b")}}, {}, {}, {}, {}},
                                     Word::letter(0), Word(), free));
}

TEST_CASE("instance_sides") {
  GpcpInstance inst{AB, {{W("a"), W("b")}}, W("a"), W("b"), W("b"), W("a")};
  auto [l, r] = instance_sides(inst, Word::letter(0));
  CHECK(l == W("a a b"));
  CHECK(r == W("b b a"));
}
