#include "pcpg/words.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace pcpg {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw std::invalid_argument("Alphabet: empty generator name");
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j])
        throw std::invalid_argument("Alphabet: duplicate generator " + names_[i]);
  }
}

int Alphabet::index_of(const std::string &name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

Word Word::reduce(std::span<const Letter> raw) {
  Word w;
  for (const Letter &l : raw) {
    if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("Word: bad sign");
    if (l.gen < 0) throw std::invalid_argument("Word: bad generator index");
    if (!w.letters_.empty() && w.letters_.back().gen == l.gen &&
        w.letters_.back().sign == -l.sign)
      w.letters_.pop_back();
    else
      w.letters_.push_back(l);
  }
  return w;
}

Word Word::letter(int gen, int sign) {
  return reduce(std::vector<Letter>{{gen, sign}});
}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.letters_.push_back({it->gen, -it->sign});
  return w;
}

Word Word::operator*(const Word &o) const {
  Word w = *this;
  for (const Letter &l : o.letters_) {
    if (!w.letters_.empty() && w.letters_.back().gen == l.gen &&
        w.letters_.back().sign == -l.sign)
      w.letters_.pop_back();
    else
      w.letters_.push_back(l);
  }
  return w;
}

Word Word::pow(long long e) const {
  Word base = e < 0 ? inverse() : *this;
  unsigned long long n = e < 0 ? -(unsigned long long)e : (unsigned long long)e;
  Word r;
  while (n--) r = r * base;
  return r;
}

Word Word::conjugate(const Word &by) const { return by.inverse() * *this * by; }

int Word::max_gen() const {
  int m = -1;
  for (const Letter &l : letters_) m = std::max(m, l.gen);
  return m;
}

Word commutator(const Word &u, const Word &v) {
  return u.inverse() * v.inverse() * u * v;
}

Word iterated_commutator(std::span<const Word> ws) {
  if (ws.size() < 2)
    throw std::invalid_argument("iterated_commutator: need at least two words");
  Word acc = commutator(ws[0], ws[1]);
  for (std::size_t i = 2; i < ws.size(); ++i) acc = commutator(acc, ws[i]);
  return acc;
}

Word substitute(const Word &w, std::span<const Word> images) {
  Word r;
  for (const Letter &l : w.letters()) {
    if (static_cast<std::size_t>(l.gen) >= images.size())
      throw std::out_of_range("substitute: generator index out of range");
    r = r * (l.sign > 0 ? images[l.gen] : images[l.gen].inverse());
  }
  return r;
}

namespace {

struct Parser {
  const std::string &s;
  const Alphabet &alphabet;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  [[noreturn]] void fail(const std::string &msg) const {
    throw std::invalid_argument("word parse error at offset " +
                                std::to_string(pos) + ": " + msg);
  }

  bool at_end() {
    skip_ws();
    return pos >= s.size();
  }

  long long parse_int() {
    skip_ws();
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
      fail("expected integer exponent");
    return std::stoll(s.substr(start, pos - start));
  }

  long long maybe_exponent() {
    skip_ws();
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      return parse_int();
    }
    return 1;
  }

  // atom := '[' word ',' word ']' exp?  |  name exp?  |  '1'
  Word parse_atom() {
    skip_ws();
    if (pos >= s.size()) fail("expected atom");
    if (s[pos] == '[') {
      ++pos;
      Word u = parse_word_until(",");
      skip_ws();
      if (pos >= s.size() || s[pos] != ',') fail("expected ',' in commutator");
      ++pos;
      Word v = parse_word_until("]");
      skip_ws();
      if (pos >= s.size() || s[pos] != ']') fail("expected ']'");
      ++pos;
      return commutator(u, v).pow(maybe_exponent());
    }
    std::size_t start = pos;
    while (pos < s.size() && !std::isspace(static_cast<unsigned char>(s[pos])) &&
           s[pos] != '^' && s[pos] != '[' && s[pos] != ']' && s[pos] != ',')
      ++pos;
    std::string tok = s.substr(start, pos - start);
    if (tok.empty()) fail("expected generator name");
    if (tok == "1") return Word();
    int gen = alphabet.index_of(tok);
    if (gen < 0) fail("unknown generator '" + tok + "'");
    return Word::letter(gen).pow(maybe_exponent());
  }

  Word parse_word_until(const std::string &stops) {
    Word w;
    while (true) {
      skip_ws();
      if (pos >= s.size()) break;
      if (stops.find(s[pos]) != std::string::npos) break;
      w = w * parse_atom();
    }
    return w;
  }
};

} // namespace

Word parse_word(const std::string &text, const Alphabet &alphabet) {
  Parser p{text, alphabet};
  Word w = p.parse_word_until("");
  if (!p.at_end()) p.fail("trailing input");
  return w;
}

std::string format_word(const Word &w, const Alphabet &alphabet) {
  if (w.empty()) return "1";
  std::ostringstream os;
  const auto &ls = w.letters();
  std::size_t i = 0;
  bool first = true;
  while (i < ls.size()) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    long long e = static_cast<long long>(j - i) * ls[i].sign;
    if (!first) os << ' ';
    first = false;
    os << alphabet.name(ls[i].gen);
    if (e != 1) os << '^' << e;
    i = j;
  }
  return os.str();
}

} // namespace pcpg
