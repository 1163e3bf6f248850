#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace pcpg {

// Ordered list of distinct generator names; index = rank of the letter.
class Alphabet {
public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string &name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string> &names() const { return names_; }
  int index_of(const std::string &name) const; // -1 when absent

  bool operator==(const Alphabet &) const = default;

private:
  std::vector<std::string> names_;
};

struct Letter {
  int gen;  // generator index
  int sign; // +1 or -1
  bool operator==(const Letter &) const = default;
};

// Freely reduced word; the empty sequence is the identity.
class Word {
public:
  Word() = default;
  static Word reduce(std::span<const Letter> raw); // free_reduce
  static Word letter(int gen, int sign = 1);

  const std::vector<Letter> &letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  Word inverse() const;
  Word operator*(const Word &o) const; // reduced concatenation
  Word pow(long long e) const;
  Word conjugate(const Word &by) const; // by^{-1} * this * by

  int max_gen() const; // largest generator index used, -1 when empty

  bool operator==(const Word &) const = default;
  bool operator<(const Word &o) const { // shortlex helper on raw letters
    if (letters_.size() != o.letters_.size())
      return letters_.size() < o.letters_.size();
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      if (letters_[i].gen != o.letters_[i].gen)
        return letters_[i].gen < o.letters_[i].gen;
      if (letters_[i].sign != o.letters_[i].sign)
        return letters_[i].sign > o.letters_[i].sign; // positive first
    }
    return false;
  }

private:
  std::vector<Letter> letters_;
};

// [u,v] = u^{-1} v^{-1} u v
Word commutator(const Word &u, const Word &v);

// Left-normed [w_1, w_2, ..., w_k] = [...[[w_1,w_2],w_3],...]; requires k >= 2.
Word iterated_commutator(std::span<const Word> ws);

// Replace letter i of w by images[i] (inverse letters by inverted images).
Word substitute(const Word &w, std::span<const Word> images);

// Homomorphism between free groups given by generator images.
struct HomSpec {
  Alphabet source;
  Alphabet target;
  std::vector<Word> images; // one per source generator

  Word apply(const Word &w) const { return substitute(w, images); }
};

// Text grammar: whitespace-separated `g`, `g^-1`, `g^k`, brackets `[w1,w2]`
// (nesting and exponents allowed), literal `1` for the empty word.
Word parse_word(const std::string &text, const Alphabet &alphabet);
std::string format_word(const Word &w, const Alphabet &alphabet);

} // namespace pcpg
