#pragma once

#include "pcpg/intmat.hpp"
#include "pcpg/pcp.hpp"
#include "pcpg/reductions.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace pcpg {

// Malformed input; `line` is 1-based, 0 when no line applies.
struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string &msg)
      : std::runtime_error(line_ > 0 ? "line " + std::to_string(line_) + ": " + msg : msg),
        line(line_) {}
};

// First line `rows cols`, then row-major whitespace-separated integers.
IntMatrix read_matrix(std::istream &in);
std::string write_matrix(const IntMatrix &m);

// `gens: a b ...` / `rels: w1 ; w2 ; ...` (may be empty) / `class: c`.
NilPresentation read_presentation(std::istream &in);
std::string write_presentation(const NilPresentation &p);

// One line per source generator: `x -> word`. Order must follow `source`.
std::vector<Word> read_hom(std::istream &in, const Alphabet &source, const Alphabet &target);
std::string write_hom(const Alphabet &source, const Alphabet &target,
                      const std::vector<Word> &images);

// `pairs:` then `g | h` lines; optional `constants: a1 | b1 | a2 | b2`.
// With no alphabet given, generator names are collected in order of first use.
GpcpInstance read_instance(std::istream &in);
GpcpInstance read_instance(std::istream &in, const Alphabet &alphabet);
std::string write_instance(const GpcpInstance &inst);

// Presentation file plus a `word: w` line; the class line, if wanted, lands
// in *klass.
HwpInstance read_hwp(std::istream &in, int *klass = nullptr);
std::string write_hwp(const HwpInstance &inst, int class_line);

IntMatrix read_matrix_file(const std::string &path);
NilPresentation read_presentation_file(const std::string &path);
GpcpInstance read_instance_file(const std::string &path);
GpcpInstance read_instance_file(const std::string &path, const Alphabet &alphabet);
HwpInstance read_hwp_file(const std::string &path, int *klass = nullptr);
std::vector<Word> read_hom_file(const std::string &path, const Alphabet &source,
                                const Alphabet &target);

} // namespace pcpg
