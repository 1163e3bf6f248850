#include "pcpg/equalizer.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace pcpg {

namespace {

std::string nf_key(const PcPresentation &P, const Word &w) {
  PcElement e = P.normal_form(w);
  std::ostringstream os;
  for (const Int &v : e.exps) os << v << ',';
  return os.str();
}

std::vector<Word> dedup_by_normal_form(const PcPresentation &H, std::vector<Word> ws) {
  std::vector<Word> out;
  std::set<std::string> seen;
  seen.insert(nf_key(H, Word())); // drop identity generators
  for (Word &w : ws) {
    std::string key = nf_key(H, w);
    if (seen.insert(std::move(key)).second) out.push_back(std::move(w));
  }
  return out;
}

Word word_power(const Word &w, const Int &e) {
  long long k;
  try {
    k = static_cast<long long>(e);
  } catch (...) {
    throw std::overflow_error("equalizer: kernel exponent too large to expand as a word");
  }
  return w.pow(k);
}

// One level of the induction: L generates E(H, phi', psi') for the class-(c-1)
// truncation of G; cut it down by the kernel of xi into gamma_c(G).
std::vector<Word> eq_rec(const PcPresentation &H, const PcPresentation &G,
                         const std::vector<Word> &phi, const std::vector<Word> &psi) {
  std::vector<Word> L;
  if (G.klass > 1) {
    PcPresentation Gbar = truncate_top(G);
    L = eq_rec(H, Gbar, phi, psi);
  } else {
    for (std::size_t i = 0; i < H.alphabet.size(); ++i) L.push_back(Word::letter(static_cast<int>(i)));
  }

  GammaLayer layer = gamma_layer(G, G.klass);

  std::vector<std::vector<Int>> targets;
  targets.reserve(L.size());
  for (const Word &h : L) {
    PcElement a = G.normal_form(substitute(h, phi));
    PcElement b = G.normal_form(substitute(h, psi));
    PcElement xi = G.mul(a, G.inverse(b)); // lies in gamma_c(G) by induction
    targets.push_back(layer.coords_of(xi));
  }

  std::vector<Word> out;
  for (const std::vector<Int> &m : mixed_kernel(layer.canon, targets)) {
    Word w;
    for (std::size_t j = 0; j < L.size(); ++j) w = w * word_power(L[j], m[j]);
    out.push_back(std::move(w));
  }
  for (Word &c : commutant_generators(L, H.klass)) out.push_back(std::move(c));
  return dedup_by_normal_form(H, std::move(out));
}

} // namespace

EqualizerResult equalizer_nilpotent(const PcPresentation &H, const PcPresentation &G,
                                    const NilHom &phi, const NilHom &psi) {
  if (!phi.validated || !psi.validated)
    throw std::invalid_argument("equalizer_nilpotent: homomorphisms must be validated");
  if (phi.images.size() != H.alphabet.size() || psi.images.size() != H.alphabet.size())
    throw std::invalid_argument("equalizer_nilpotent: image count mismatch");
  EqualizerResult r;
  r.generators = eq_rec(H, G, phi.images, psi.images);
  return r;
}

PcPresentation free_nilpotent(int n, int c) {
  if (n < 1 || c < 1) throw std::invalid_argument("free_nilpotent: need n >= 1, c >= 1");
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return nilpotent_quotient(NilPresentation{Alphabet(std::move(names)), {}, c});
}

EqualizerResult equalizer_free_source(int n, int c, const PcPresentation &G,
                                      const std::vector<Word> &phi_images,
                                      const std::vector<Word> &psi_images) {
  if (G.klass > c)
    throw std::invalid_argument("equalizer_free_source: target class exceeds c");
  PcPresentation H = free_nilpotent(n, c);
  NilHom phi{H, G, phi_images};
  NilHom psi{H, G, psi_images};
  if (!hom_validate(phi) || !hom_validate(psi))
    throw std::invalid_argument("equalizer_free_source: images do not define homomorphisms");
  EqualizerResult r = equalizer_nilpotent(H, G, phi, psi);
  r.modulo_gamma = {n, c + 1};
  return r;
}

} // namespace pcpg
