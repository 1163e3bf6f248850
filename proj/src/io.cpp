#include "pcpg/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace pcpg {

namespace {

struct Line {
  int number;
  std::string text;
};

std::vector<Line> read_lines(std::istream &in) {
  std::vector<Line> out;
  std::string s;
  int n = 0;
  while (std::getline(in, s)) {
    ++n;
    if (!s.empty() && s.back() == '\r') s.pop_back();
    out.push_back({n, s});
  }
  return out;
}

std::string trim(const std::string &s) {
  std::size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

bool blank(const std::string &s) { return trim(s).empty() || trim(s)[0] == '#'; }

// "prefix: rest" -> rest, or nullopt when the line has a different keyword.
std::optional<std::string> keyword_rest(const std::string &line, const std::string &kw) {
  std::string t = trim(line);
  if (t.rfind(kw + ":", 0) != 0) return std::nullopt;
  return trim(t.substr(kw.size() + 1));
}

std::vector<std::string> split(const std::string &s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      parts.push_back(trim(cur));
      cur.clear();
    } else
      cur += ch;
  }
  parts.push_back(trim(cur));
  return parts;
}

Word parse_word_at(const std::string &text, const Alphabet &a, int line) {
  try {
    return parse_word(text, a);
  } catch (const std::exception &e) {
    throw ParseError(line, e.what());
  }
}

// Generator names in order of first use, skipping exponents and the literal 1.
void collect_names(const std::string &text, std::vector<std::string> &names) {
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) ||
                                 text[j] == '_'))
        ++j;
      std::string name = text.substr(i, j - i);
      bool seen = false;
      for (const std::string &n : names) seen = seen || n == name;
      if (!seen) names.push_back(name);
      i = j;
    } else
      ++i;
  }
}

} // namespace

IntMatrix read_matrix(std::istream &in) {
  auto lines = read_lines(in);
  std::size_t li = 0;
  while (li < lines.size() && blank(lines[li].text)) ++li;
  if (li == lines.size()) throw ParseError(0, "empty matrix file");
  long long rows, cols;
  {
    std::istringstream hs(lines[li].text);
    if (!(hs >> rows >> cols) || rows < 0 || cols < 0)
      throw ParseError(lines[li].number, "expected header `rows cols`");
    std::string extra;
    if (hs >> extra) throw ParseError(lines[li].number, "trailing tokens after header");
  }
  IntMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  std::size_t need = static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), got = 0;
  for (++li; li < lines.size(); ++li) {
    if (blank(lines[li].text)) continue;
    std::istringstream ls(lines[li].text);
    std::string tok;
    while (ls >> tok) {
      if (got == need) throw ParseError(lines[li].number, "too many entries");
      try {
        m.at(got / m.cols(), got % m.cols()) = Int(tok);
      } catch (...) {
        throw ParseError(lines[li].number, "bad integer `" + tok + "`");
      }
      ++got;
    }
  }
  if (got != need)
    throw ParseError(lines.empty() ? 0 : lines.back().number,
                     "matrix has " + std::to_string(got) + " entries, expected " +
                         std::to_string(need));
  return m;
}

std::string write_matrix(const IntMatrix &m) {
  std::ostringstream os;
  os << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m.at(r, c);
    os << '\n';
  }
  return os.str();
}

NilPresentation read_presentation(std::istream &in) {
  auto lines = read_lines(in);
  std::optional<std::string> gens, rels;
  std::optional<std::pair<int, std::string>> klass;
  int rels_line = 0;
  for (const Line &l : lines) {
    if (blank(l.text)) continue;
    if (auto r = keyword_rest(l.text, "gens")) {
      gens = *r;
    } else if (auto r2 = keyword_rest(l.text, "rels")) {
      rels = *r2;
      rels_line = l.number;
    } else if (auto r3 = keyword_rest(l.text, "class")) {
      klass = {l.number, *r3};
    } else if (keyword_rest(l.text, "word")) {
      // tolerated so a HWP file parses as its presentation part
    } else
      throw ParseError(l.number, "expected `gens:`, `rels:` or `class:`");
  }
  if (!gens) throw ParseError(0, "missing `gens:` line");
  if (!klass) throw ParseError(0, "missing `class:` line");
  NilPresentation p;
  {
    std::istringstream gs(*gens);
    std::vector<std::string> names;
    std::string n;
    while (gs >> n) names.push_back(n);
    if (names.empty()) throw ParseError(0, "empty generator list");
    try {
      p.alphabet = Alphabet(std::move(names));
    } catch (const std::exception &e) {
      throw ParseError(0, e.what());
    }
  }
  if (rels && !trim(*rels).empty())
    for (const std::string &w : split(*rels, ';'))
      if (!w.empty()) p.relators.push_back(parse_word_at(w, p.alphabet, rels_line));
  try {
    std::size_t pos = 0;
    p.class_bound = std::stoi(klass->second, &pos);
    if (pos != klass->second.size() || p.class_bound < 1) throw std::invalid_argument("");
  } catch (...) {
    throw ParseError(klass->first, "bad class `" + klass->second + "`");
  }
  return p;
}

std::string write_presentation(const NilPresentation &p) {
  std::ostringstream os;
  os << "gens:";
  for (const std::string &n : p.alphabet.names()) os << ' ' << n;
  os << "\nrels:";
  for (std::size_t i = 0; i < p.relators.size(); ++i)
    os << (i ? " ; " : " ") << format_word(p.relators[i], p.alphabet);
  os << "\nclass: " << p.class_bound << '\n';
  return os.str();
}

std::vector<Word> read_hom(std::istream &in, const Alphabet &source, const Alphabet &target) {
  auto lines = read_lines(in);
  std::vector<std::optional<Word>> images(source.size());
  std::size_t next = 0;
  for (const Line &l : lines) {
    if (blank(l.text)) continue;
    std::size_t arrow = l.text.find("->");
    if (arrow == std::string::npos) throw ParseError(l.number, "expected `x -> word`");
    std::string lhs = trim(l.text.substr(0, arrow));
    int idx = source.index_of(lhs);
    if (idx < 0) throw ParseError(l.number, "unknown source generator `" + lhs + "`");
    if (images[idx]) throw ParseError(l.number, "duplicate image for `" + lhs + "`");
    if (static_cast<std::size_t>(idx) != next)
      throw ParseError(l.number, "images must follow the source generator order; expected `" +
                                     source.name(next) + "`");
    ++next;
    images[idx] = parse_word_at(trim(l.text.substr(arrow + 2)), target, l.number);
  }
  std::vector<Word> out;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (!images[i]) throw ParseError(0, "missing image for `" + source.name(i) + "`");
    out.push_back(*images[i]);
  }
  return out;
}

std::string write_hom(const Alphabet &source, const Alphabet &target,
                      const std::vector<Word> &images) {
  std::ostringstream os;
  for (std::size_t i = 0; i < source.size(); ++i)
    os << source.name(i) << " -> " << format_word(images[i], target) << '\n';
  return os.str();
}

namespace {

GpcpInstance parse_instance(const std::vector<Line> &lines, const Alphabet &a) {
  GpcpInstance inst;
  inst.target_alphabet = a;
  bool in_pairs = false, saw_pairs = false;
  for (const Line &l : lines) {
    if (blank(l.text)) continue;
    if (keyword_rest(l.text, "pairs")) {
      in_pairs = saw_pairs = true;
      continue;
    }
    if (auto r = keyword_rest(l.text, "constants")) {
      auto parts = split(*r, '|');
      if (parts.size() != 4)
        throw ParseError(l.number, "constants need `a1 | b1 | a2 | b2`");
      inst.a1 = parse_word_at(parts[0], a, l.number);
      inst.b1 = parse_word_at(parts[1], a, l.number);
      inst.a2 = parse_word_at(parts[2], a, l.number);
      inst.b2 = parse_word_at(parts[3], a, l.number);
      in_pairs = false;
      continue;
    }
    if (!in_pairs) throw ParseError(l.number, "expected `pairs:` before pair lines");
    auto parts = split(l.text, '|');
    if (parts.size() != 2) throw ParseError(l.number, "expected `g | h`");
    inst.pairs.push_back(
        {parse_word_at(parts[0], a, l.number), parse_word_at(parts[1], a, l.number)});
  }
  if (!saw_pairs) throw ParseError(0, "missing `pairs:` line");
  if (inst.pairs.empty()) throw ParseError(0, "instance has no pairs");
  return inst;
}

} // namespace

GpcpInstance read_instance(std::istream &in, const Alphabet &alphabet) {
  return parse_instance(read_lines(in), alphabet);
}

GpcpInstance read_instance(std::istream &in) {
  auto lines = read_lines(in);
  std::vector<std::string> names;
  for (const Line &l : lines) {
    if (blank(l.text) || keyword_rest(l.text, "pairs")) continue;
    if (auto r = keyword_rest(l.text, "constants"))
      collect_names(*r, names);
    else
      collect_names(l.text, names);
  }
  if (names.empty()) names.push_back("a"); // all-trivial words still need a target
  return parse_instance(lines, Alphabet(std::move(names)));
}

std::string write_instance(const GpcpInstance &inst) {
  std::ostringstream os;
  os << "pairs:\n";
  for (const auto &[g, h] : inst.pairs)
    os << format_word(g, inst.target_alphabet) << " | " << format_word(h, inst.target_alphabet)
       << '\n';
  if (!inst.constants_trivial())
    os << "constants: " << format_word(inst.a1, inst.target_alphabet) << " | "
       << format_word(inst.b1, inst.target_alphabet) << " | "
       << format_word(inst.a2, inst.target_alphabet) << " | "
       << format_word(inst.b2, inst.target_alphabet) << '\n';
  return os.str();
}

HwpInstance read_hwp(std::istream &in, int *klass) {
  std::ostringstream copy;
  copy << in.rdbuf();
  std::istringstream first(copy.str());
  NilPresentation p = read_presentation(first);
  if (klass) *klass = p.class_bound;
  HwpInstance inst;
  inst.alphabet = p.alphabet;
  inst.relators = p.relators;
  std::optional<Word> w;
  std::istringstream second(copy.str());
  for (const Line &l : read_lines(second)) {
    if (auto r = keyword_rest(l.text, "word"))
      w = parse_word_at(*r, p.alphabet, l.number);
  }
  if (!w) throw ParseError(0, "missing `word:` line");
  inst.w = *w;
  return inst;
}

std::string write_hwp(const HwpInstance &inst, int class_line) {
  NilPresentation p{inst.alphabet, inst.relators, class_line};
  return write_presentation(p) + "word: " + format_word(inst.w, inst.alphabet) + '\n';
}

namespace {
std::ifstream open_or_throw(const std::string &path) {
  std::ifstream f(path);
  if (!f) throw ParseError(0, "cannot open " + path);
  return f;
}
} // namespace

IntMatrix read_matrix_file(const std::string &path) {
  auto f = open_or_throw(path);
  return read_matrix(f);
}
NilPresentation read_presentation_file(const std::string &path) {
  auto f = open_or_throw(path);
  return read_presentation(f);
}
GpcpInstance read_instance_file(const std::string &path) {
  auto f = open_or_throw(path);
  return read_instance(f);
}
GpcpInstance read_instance_file(const std::string &path, const Alphabet &alphabet) {
  auto f = open_or_throw(path);
  return read_instance(f, alphabet);
}
HwpInstance read_hwp_file(const std::string &path, int *klass) {
  auto f = open_or_throw(path);
  return read_hwp(f, klass);
}
std::vector<Word> read_hom_file(const std::string &path, const Alphabet &source,
                                const Alphabet &target) {
  auto f = open_or_throw(path);
  return read_hom(f, source, target);
}

} // namespace pcpg
