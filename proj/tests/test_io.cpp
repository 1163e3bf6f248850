#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pcpg/io.hpp"

#include <sstream>

using namespace pcpg;

namespace {

template <class T, class Reader> T parse(const std::string &text, Reader reader) {
  std::istringstream in(text);
  return reader(in);
}

int error_line(const std::string &text, auto reader) {
  std::istringstream in(text);
  try {
    reader(in);
  } catch (const ParseError &e) {
    return e.line;
  }
  return -1;
}

} // namespace

TEST_CASE("matrix round trip") {
  IntMatrix m(2, 3);
  m.at(0, 0) = 1;
  m.at(0, 2) = -4;
  m.at(1, 1) = 123456789012345LL;
  std::istringstream in(write_matrix(m));
  IntMatrix back = read_matrix(in);
  REQUIRE(back.rows() == 2);
  REQUIRE(back.cols() == 3);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(back.at(i, j) == m.at(i, j));

  IntMatrix empty = parse<IntMatrix>("0 2\n", read_matrix);
  CHECK(empty.rows() == 0);
  CHECK(empty.cols() == 2);
}

TEST_CASE("matrix parse errors carry line numbers") {
  auto r = [](std::istream &in) { return read_matrix(in); };
  CHECK(error_line("", r) >= 0);
  CHECK(error_line("2\n1 2 3 4\n", r) == 1);
  CHECK(error_line("2 2\n1 2\n3 x\n", r) == 3);
  CHECK(error_line("1 2\n1\n", r) >= 1); // too few entries
}

TEST_CASE("presentation round trip") {
  NilPresentation p;
  p.alphabet = Alphabet({"a", "b"});
  p.relators = {parse_word("a^3", p.alphabet), parse_word("[a,b]", p.alphabet)};
  p.class_bound = 2;
  NilPresentation back =
      parse<NilPresentation>(write_presentation(p), [](std::istream &in) { return read_presentation(in); });
  CHECK(back.alphabet == p.alphabet);
  CHECK(back.relators == p.relators);
  CHECK(back.class_bound == p.class_bound);

  NilPresentation q = parse<NilPresentation>("# free group\ngens: a b\nrels:\nclass: 3\n",
                                             [](std::istream &in) { return read_presentation(in); });
  CHECK(q.alphabet.size() == 2);
  CHECK(q.relators.empty());
  CHECK(q.class_bound == 3);
}

TEST_CASE("presentation parse errors") {
  auto r = [](std::istream &in) { return read_presentation(in); };
  CHECK(error_line("rels: a\nclass: 2\n", r) >= 0);          // gens missing
  CHECK(error_line("gens: a b\nrels: a^\nclass: 2\n", r) == 2);
  CHECK(error_line("gens: a b\nrels: c\nclass: 2\n", r) == 2); // unknown generator
  CHECK(error_line("gens: a b\nrels:\nclass: zero\n", r) == 3);
}

TEST_CASE("hom round trip") {
  Alphabet src({"x", "y"}), tgt({"a", "b"});
  std::vector<Word> images{parse_word("a b^-1", tgt), parse_word("[a,b]", tgt)};
  std::string text = write_hom(src, tgt, images);
  std::istringstream in(text);
  CHECK(read_hom(in, src, tgt) == images);

  auto r = [&](std::istream &s) { return read_hom(s, src, tgt); };
  CHECK(error_line("x -> a\n", r) >= 0);              // image for y missing
  CHECK(error_line("x -> a\ny -> q\n", r) == 2);      // unknown target letter
  CHECK(error_line("y -> a\nx -> b\n", r) == 1);      // order must follow source
}

TEST_CASE("instance round trip with constants") {
  GpcpInstance inst;
  inst.target_alphabet = Alphabet({"a", "b"});
  auto W = [&](const std::string &s) { return parse_word(s, inst.target_alphabet); };
  inst.pairs = {{W("a b"), W("b")}, {W("b^-1"), Word()}};
  inst.a1 = W("a");
  inst.b2 = W("b^2");
  GpcpInstance back =
      parse<GpcpInstance>(write_instance(inst), [](std::istream &in) { return read_instance(in); });
  CHECK(back.target_alphabet == inst.target_alphabet);
  CHECK(back.pairs == inst.pairs);
  CHECK(back.a1 == inst.a1);
  CHECK(back.b1 == inst.b1);
  CHECK(back.a2 == inst.a2);
  CHECK(back.b2 == inst.b2);
}

TEST_CASE("instance alphabet inferred in order of first use") {
  GpcpInstance g = parse<GpcpInstance>("pairs:\nb a | b\n1 | c\n",
                                       [](std::istream &in) { return read_instance(in); });
  CHECK(g.target_alphabet.names() == std::vector<std::string>{"b", "a", "c"});
  CHECK(g.pairs.size() == 2);
  CHECK(g.pairs[1].first.empty());
  CHECK(g.constants_trivial());

  // explicit alphabet pins indices regardless of use order
  Alphabet abc({"a", "b", "c"});
  std::istringstream in("pairs:\nb | c\n");
  GpcpInstance h = read_instance(in, abc);
  CHECK(h.target_alphabet == abc);
  CHECK(h.pairs[0].first == Word::letter(1));
}

TEST_CASE("instance parse errors") {
  auto r = [](std::istream &in) { return read_instance(in); };
  CHECK(error_line("a | b\n", r) >= 0);                       // pairs header missing
  CHECK(error_line("pairs:\na\n", r) == 2);                   // not two sides
  CHECK(error_line("pairs:\na | b\nconstants: a | b\n", r) == 3); // need four constants
  Alphabet ab({"a", "b"});
  std::istringstream in("pairs:\na | q\n");
  try {
    read_instance(in, ab);
    CHECK(false);
  } catch (const ParseError &e) {
    CHECK(e.line == 2);
  }
}

TEST_CASE("hwp round trip") {
  HwpInstance h;
  h.alphabet = Alphabet({"a", "b"});
  h.relators = {parse_word("a^2", h.alphabet)};
  h.w = parse_word("[a,b] a^2", h.alphabet);
  int klass = -1;
  HwpInstance back = parse<HwpInstance>(
      write_hwp(h, 2), [&](std::istream &in) { return read_hwp(in, &klass); });
  CHECK(back.alphabet == h.alphabet);
  CHECK(back.relators == h.relators);
  CHECK(back.w == h.w);
  CHECK(klass == 2);

  auto r = [](std::istream &in) { return read_hwp(in); };
  CHECK(error_line("gens: a\nrels:\nclass: 1\n", r) >= 0); // word line missing
  CHECK(error_line("gens: a\nrels:\nclass: 1\nword: b\n", r) == 4);
}

TEST_CASE("hwp files still parse as presentations") {
  HwpInstance h{Alphabet({"a"}), {}, parse_word("a", Alphabet({"a"}))};
  NilPresentation p = parse<NilPresentation>(
      write_hwp(h, 1), [](std::istream &in) { return read_presentation(in); });
  CHECK(p.alphabet == h.alphabet);
  CHECK(p.class_bound == 1);
}
