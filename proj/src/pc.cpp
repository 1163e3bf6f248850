#include "pcpg/pc.hpp"

#include <sstream>
#include <stdexcept>

namespace pcpg {

namespace {

PcWord invert_pcword(const PcWord &w) {
  PcWord r;
  r.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back({it->first, -it->second});
  return r;
}

// Collection from the left on exponent vectors.
struct Collector {
  const PcPresentation &P;

  bool has_higher(const std::vector<Int> &e, int g) const {
    for (std::size_t j = g + 1; j < e.size(); ++j)
      if (e[j] != 0) return true;
    return false;
  }

  const PcWord *tail(int j, int i) const {
    const auto &m = P.conj_tail[j];
    auto it = m.find(i);
    if (it == m.end() || it->second.empty()) return nullptr;
    return &it->second;
  }

  void normalize_power(std::vector<Int> &e, int g) {
    const Int &m = P.modulus[g];
    if (m == 0) return;
    Int r = e[g] % m;
    if (r < 0) r += m;
    Int q = (e[g] - r) / m;
    e[g] = r;
    if (q == 0) return;
    const PcWord &pt = P.power_tail[g];
    if (pt.empty()) return;
    PcWord step = q > 0 ? pt : invert_pcword(pt);
    for (Int c = abs(q); c > 0; --c) mul_pcword(e, step);
  }

  // letters: (gen, +-1)
  using LetterSeq = std::vector<std::pair<int, int>>;

  void append_pcword_letters(LetterSeq &out, const PcWord &w, bool inverse) const {
    auto push = [&](int g, const Int &k) {
      int s = k > 0 ? 1 : -1;
      for (Int c = abs(k); c > 0; --c) out.push_back({g, s});
    };
    if (!inverse) {
      for (const auto &[g, k] : w) push(g, k);
    } else {
      for (auto it = w.rbegin(); it != w.rend(); ++it) push(it->first, -it->second);
    }
  }

  // g_i^{-s} g_j^{sgn} g_i^{s} as a letter sequence over generators of
  // weight >= weight(j); the auxiliary letters have strictly higher weight,
  // so the recursion depth is bounded by the class.
  LetterSeq conj_letter(int j, int sgn, int i, int s) const {
    LetterSeq out;
    if (j == i) {
      out.push_back({j, sgn});
      return out;
    }
    const PcWord *t = tail(j, i);
    if (!t) {
      out.push_back({j, sgn});
      return out;
    }
    LetterSeq pos;
    pos.push_back({j, 1});
    if (s > 0) { // g_j^{g_i} = g_j * t
      append_pcword_letters(pos, *t, false);
    } else { // g_j^{g_i^{-1}} = g_j * (t^{-1})^{g_i^{-1}}
      LetterSeq tinv;
      append_pcword_letters(tinv, *t, true);
      LetterSeq conj = conj_once(tinv, i, s);
      pos.insert(pos.end(), conj.begin(), conj.end());
    }
    if (sgn > 0) return pos;
    for (auto it = pos.rbegin(); it != pos.rend(); ++it) out.push_back({it->first, -it->second});
    return out;
  }

  LetterSeq conj_once(const LetterSeq &w, int i, int s) const {
    LetterSeq out;
    for (const auto &[g, sgn] : w) {
      LetterSeq part = conj_letter(g, sgn, i, s);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }

  void mul_letters(std::vector<Int> &e, const LetterSeq &w) {
    for (const auto &[g, sgn] : w) mul_term(e, g, sgn);
  }

  void mul_term(std::vector<Int> &e, int g, const Int &k) {
    if (k == 0) return;
    if (static_cast<std::size_t>(g) >= e.size())
      throw std::out_of_range("collection: generator index out of range");
    if (!has_higher(e, g)) {
      e[g] += k;
      normalize_power(e, g);
      return;
    }
    // e = pre * S with S supported above g:
    // e * g^k = pre * g^k * (g^{-k} S g^k)
    LetterSeq suffix;
    for (std::size_t j = g + 1; j < e.size(); ++j) {
      if (e[j] == 0) continue;
      int s = e[j] > 0 ? 1 : -1;
      for (Int c = abs(e[j]); c > 0; --c) suffix.push_back({static_cast<int>(j), s});
      e[j] = 0;
    }
    e[g] += k;
    normalize_power(e, g);
    int s = k > 0 ? 1 : -1;
    for (Int c = abs(k); c > 0; --c) suffix = conj_once(suffix, g, s);
    mul_letters(e, suffix);
  }

  void mul_pcword(std::vector<Int> &e, const PcWord &w) {
    for (const auto &[g, k] : w) mul_term(e, g, k);
  }
};

// Flags marking the generators that commute with everything. Nonempty result
// iff every commutator and power tail lands in central generators, i.e. the
// presentation is (structurally) of class <= 2.
std::optional<std::vector<char>> central2_flags(const PcPresentation &P) {
  const std::size_t n = P.ngens();
  std::vector<char> central(n, 1);
  for (std::size_t j = 0; j < n; ++j)
    for (const auto &[i, t] : P.conj_tail[j])
      if (!t.empty()) {
        central[j] = 0;
        central[i] = 0;
      }
  auto ok = [&](const PcWord &w) {
    for (const auto &[g, k] : w)
      if (!central[g]) return false;
    return true;
  };
  for (std::size_t j = 0; j < n; ++j) {
    if (!ok(P.power_tail[j])) return std::nullopt;
    for (const auto &[i, t] : P.conj_tail[j])
      if (!ok(t)) return std::nullopt;
  }
  return central;
}

// Closed forms for class <= 2: every commutator and power tail lands in the
// central part, so products reduce to exponent arithmetic. This keeps
// multiplication polynomial in the exponent sizes.
struct Central2 {
  const PcPresentation &P;
  const std::vector<char> &central;

  const PcWord *tail(int j, int i) const {
    const auto &m = P.conj_tail[j];
    auto it = m.find(i);
    if (it == m.end() || it->second.empty()) return nullptr;
    return &it->second;
  }

  void reduce(std::vector<Int> &e) const {
    for (std::size_t i = 0; i < e.size(); ++i) {
      const Int &m = P.modulus[i];
      if (m == 0) continue;
      Int r = e[i] % m;
      if (r < 0) r += m;
      Int q = (e[i] - r) / m;
      e[i] = r;
      if (q == 0) continue;
      for (const auto &[g, k] : P.power_tail[i]) e[g] += k * q;
    }
  }

  PcElement mul(const PcElement &a, const PcElement &b) const {
    std::vector<Int> e = a.exps;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (b.exps[i] == 0) continue;
      if (!central[i])
        for (std::size_t j = i + 1; j < e.size(); ++j) {
          if (central[j] || a.exps[j] == 0) continue;
          if (const PcWord *t = tail(static_cast<int>(j), static_cast<int>(i)))
            for (const auto &[g, k] : *t) e[g] += k * a.exps[j] * b.exps[i];
        }
      e[i] += b.exps[i];
    }
    reduce(e);
    return PcElement{std::move(e)};
  }

  PcElement inverse(const PcElement &a) const {
    std::vector<Int> e(a.exps.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = -a.exps[i];
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (central[i] || a.exps[i] == 0) continue;
      for (std::size_t j = i + 1; j < e.size(); ++j) {
        if (central[j] || a.exps[j] == 0) continue;
        if (const PcWord *t = tail(static_cast<int>(j), static_cast<int>(i)))
          for (const auto &[g, k] : *t) e[g] += k * a.exps[j] * a.exps[i];
      }
    }
    reduce(e);
    return PcElement{std::move(e)};
  }
};

} // namespace

int PcPresentation::add_gen(int w, Int mod) {
  weight.push_back(w);
  modulus.push_back(std::move(mod));
  power_tail.emplace_back();
  conj_tail.emplace_back();
  return static_cast<int>(weight.size()) - 1;
}

PcElement PcPresentation::gen(int i) const {
  PcElement e = identity();
  e.exps.at(i) = 1;
  Collector{*this}.normalize_power(e.exps, i);
  return e;
}

PcElement PcPresentation::mul(const PcElement &a, const PcElement &b) const {
  if (auto c = central2_flags(*this)) return Central2{*this, *c}.mul(a, b);
  PcElement r = a;
  Collector col{*this};
  for (std::size_t i = 0; i < b.exps.size(); ++i) col.mul_term(r.exps, static_cast<int>(i), b.exps[i]);
  return r;
}

PcElement PcPresentation::mul_word(PcElement a, const PcWord &w) const {
  if (auto c = central2_flags(*this)) {
    Central2 fast{*this, *c};
    for (const auto &[g, k] : w) {
      PcElement t = identity();
      t.exps.at(g) = k;
      fast.reduce(t.exps);
      a = fast.mul(a, t);
    }
    return a;
  }
  Collector col{*this};
  col.mul_pcword(a.exps, w);
  return a;
}

PcElement PcPresentation::inverse(const PcElement &a) const {
  if (auto c = central2_flags(*this)) return Central2{*this, *c}.inverse(a);
  PcElement r = identity();
  Collector col{*this};
  for (std::size_t i = a.exps.size(); i-- > 0;)
    col.mul_term(r.exps, static_cast<int>(i), -a.exps[i]);
  return r;
}

PcElement PcPresentation::power(const PcElement &a, const Int &e) const {
  PcElement base = e < 0 ? inverse(a) : a;
  PcElement r = identity();
  for (Int k = abs(e); k > 0; k >>= 1) {
    if (bit_test(k, 0)) r = mul(r, base);
    if (k > 1) base = mul(base, base);
  }
  return r;
}

PcElement PcPresentation::collect(const PcWord &w) const {
  return mul_word(identity(), w);
}

PcElement PcPresentation::normal_form(const Word &w) const {
  PcElement e = identity();
  Collector col{*this};
  for (const Letter &l : w.letters()) {
    if (static_cast<std::size_t>(l.gen) >= alphabet.size())
      throw std::out_of_range("normal_form: unknown generator");
    const PcWord &o = origin[l.gen];
    if (l.sign > 0)
      col.mul_pcword(e.exps, o);
    else
      col.mul_pcword(e.exps, invert_pcword(o));
  }
  return e;
}

bool PcPresentation::is_identity_word(const Word &w) const {
  return normal_form(w).is_identity();
}

Int PcPresentation::order() const {
  Int n = 1;
  for (const Int &m : modulus) {
    if (m == 0) return 0;
    n *= m;
  }
  return n;
}

std::string PcPresentation::describe() const {
  std::ostringstream os;
  os << "class " << klass << ", " << ngens() << " pc generators\n";
  for (std::size_t i = 0; i < ngens(); ++i) {
    os << "  g" << i + 1 << ": weight " << weight[i] << ", order "
       << (modulus[i] == 0 ? std::string("inf") : modulus[i].str());
    if (!power_tail[i].empty()) {
      os << ", g" << i + 1 << "^" << modulus[i] << " =";
      for (const auto &[g, k] : power_tail[i]) os << " g" << g + 1 << "^" << k;
    }
    os << '\n';
  }
  for (std::size_t j = 0; j < ngens(); ++j)
    for (const auto &[i, t] : conj_tail[j]) {
      if (t.empty()) continue;
      os << "  [g" << j + 1 << ",g" << i + 1 << "] =";
      for (const auto &[g, k] : t) os << " g" << g + 1 << "^" << k;
      os << '\n';
    }
  for (std::size_t j = 0; j < alphabet.size(); ++j) {
    os << "  " << alphabet.name(j) << " ->";
    if (origin[j].empty()) os << " 1";
    for (const auto &[g, k] : origin[j]) os << " g" << g + 1 << "^" << k;
    os << '\n';
  }
  return os.str();
}

namespace {

// Quotient of Z^T by the lattice spanned by the given rows, in a basis where
// the lattice is diagonal. Torsion coordinates first.
struct LatticeQuotient {
  std::vector<Int> moduli; // per surviving coordinate; 0 = free
  IntMatrix proj;          // survivors x T
};

LatticeQuotient quotient_lattice(std::size_t T, const std::vector<std::vector<Int>> &rows) {
  IntMatrix M(T, rows.size());
  for (std::size_t c = 0; c < rows.size(); ++c)
    for (std::size_t r = 0; r < T; ++r) M.at(r, c) = rows[c][r];
  SmithDecomposition s = smith_normal_form(M);

  std::vector<std::size_t> keep;
  LatticeQuotient q;
  for (std::size_t i = 0; i < T; ++i)
    if (i < s.rank && s.D.at(i, i) >= 2) {
      keep.push_back(i);
      q.moduli.push_back(s.D.at(i, i));
    }
  for (std::size_t i = s.rank; i < T; ++i) {
    keep.push_back(i);
    q.moduli.push_back(0);
  }
  q.proj = IntMatrix(keep.size(), T);
  for (std::size_t k = 0; k < keep.size(); ++k)
    for (std::size_t j = 0; j < T; ++j) q.proj.at(k, j) = s.U.at(keep[k], j);
  return q;
}

IntMatrix abelianized_relators(const NilPresentation &P) {
  IntMatrix R(P.relators.size(), P.alphabet.size());
  for (std::size_t r = 0; r < P.relators.size(); ++r)
    for (const Letter &l : P.relators[r].letters()) R.at(r, l.gen) += l.sign;
  return R;
}

// Extend a consistent class-(k-1) presentation by the weight-k layer.
void extend_level(PcPresentation &pc, int k) {
  const std::size_t m = pc.ngens();

  // Covering: a fresh central tail generator for every commutator relation of
  // weight sum <= k and every power relation.
  PcPresentation cov = pc;
  std::size_t T = 0;
  for (std::size_t j = 1; j < m; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      int s = pc.weight[i] + pc.weight[j];
      if (s > k) continue;
      // A pair with weight(g_i) = 1 defines its layer generator at level
      // s = k and is exact ever after; all other pairs receive a correction
      // temp at every level.
      if (pc.weight[i] == 1 && s < k) continue;
      // The new generator stands for [g_i, g_j] (i < j), so the collected
      // tail of [g_j, g_i] is its inverse.
      int id = cov.add_gen(k, 0);
      cov.conj_tail[j][static_cast<int>(i)].push_back({id, -1});
      ++T;
    }
  for (std::size_t i = 0; i < m; ++i)
    if (pc.modulus[i] != 0) {
      int id = cov.add_gen(k, 0);
      cov.power_tail[i].push_back({id, 1});
      ++T;
    }

  std::vector<std::vector<Int>> rows;
  auto add_relation = [&](const PcElement &lhs, const PcElement &rhs) {
    PcElement d = cov.mul(cov.inverse(lhs), rhs);
    for (std::size_t idx = 0; idx < m; ++idx)
      if (d.exps[idx] != 0)
        throw std::logic_error("nilpotent_quotient: covering inconsistent below the top layer");
    std::vector<Int> row(d.exps.begin() + m, d.exps.end());
    for (const Int &v : row)
      if (v != 0) {
        rows.push_back(std::move(row));
        return;
      }
  };

  // Consistency test words (Sims): associativity triples and power overlaps.
  for (std::size_t c = 2; c < m; ++c)
    for (std::size_t b = 1; b < c; ++b)
      for (std::size_t a = 0; a < b; ++a) {
        PcElement ga = cov.gen(a), gb = cov.gen(b), gc = cov.gen(c);
        add_relation(cov.mul(cov.mul(gc, gb), ga), cov.mul(gc, cov.mul(gb, ga)));
      }
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      PcElement gi = cov.gen(i), gj = cov.gen(j);
      if (cov.modulus[j] != 0) {
        PcElement lhs = cov.mul(cov.power(gj, cov.modulus[j]), gi);
        PcElement rhs = cov.mul(cov.power(gj, cov.modulus[j] - 1), cov.mul(gj, gi));
        add_relation(lhs, rhs);
      }
      if (cov.modulus[i] != 0) {
        PcElement lhs = cov.mul(gj, cov.power(gi, cov.modulus[i]));
        PcElement rhs = cov.mul(cov.mul(gj, gi), cov.power(gi, cov.modulus[i] - 1));
        add_relation(lhs, rhs);
      }
    }
  for (std::size_t i = 0; i < m; ++i)
    if (cov.modulus[i] != 0) {
      PcElement gi = cov.gen(i);
      add_relation(cov.mul(cov.power(gi, cov.modulus[i]), gi),
                   cov.mul(gi, cov.power(gi, cov.modulus[i])));
    }

  // Defining relators land in the new central layer.
  for (const Word &r : pc.relators) add_relation(cov.identity(), cov.normal_form(r));

  LatticeQuotient q = quotient_lattice(T, rows);

  // Rebuild: old generators plus the surviving weight-k layer.
  const std::size_t nsurv = q.moduli.size();
  for (std::size_t s = 0; s < nsurv; ++s) pc.add_gen(k, q.moduli[s]);

  auto substituted = [&](const PcWord &w) {
    PcWord out;
    std::vector<Int> tvec(T);
    for (const auto &[g, e] : w) {
      if (static_cast<std::size_t>(g) < m)
        out.push_back({g, e});
      else
        tvec[g - m] += e;
    }
    std::vector<Int> sv = q.proj.apply(tvec);
    for (std::size_t s = 0; s < nsurv; ++s) {
      Int v = sv[s];
      if (q.moduli[s] != 0) {
        v %= q.moduli[s];
        if (v < 0) v += q.moduli[s];
      }
      if (v != 0) out.push_back({static_cast<int>(m + s), v});
    }
    return out;
  };

  for (std::size_t j = 0; j < m; ++j) {
    std::map<int, PcWord> nt;
    for (const auto &[i, t] : cov.conj_tail[j]) {
      PcWord w = substituted(t);
      if (!w.empty()) nt[i] = std::move(w);
    }
    pc.conj_tail[j] = std::move(nt);
    pc.power_tail[j] = substituted(cov.power_tail[j]);
  }
}

} // namespace

PcPresentation nilpotent_quotient(const NilPresentation &P) {
  if (P.class_bound < 1) throw std::invalid_argument("nilpotent_quotient: class must be >= 1");
  PcPresentation pc;
  pc.alphabet = P.alphabet;
  pc.relators = P.relators;
  pc.klass = P.class_bound;

  // Class-1 layer: the abelianization, via the Smith form of the relator matrix.
  const std::size_t n = P.alphabet.size();
  std::vector<std::vector<Int>> rows;
  IntMatrix R = abelianized_relators(P);
  for (std::size_t r = 0; r < R.rows(); ++r) {
    std::vector<Int> row(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = R.at(r, j);
    rows.push_back(std::move(row));
  }
  LatticeQuotient q = quotient_lattice(n, rows);
  for (std::size_t s = 0; s < q.moduli.size(); ++s) pc.add_gen(1, q.moduli[s]);
  pc.origin.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t s = 0; s < q.moduli.size(); ++s) {
      Int v = q.proj.at(s, j);
      if (q.moduli[s] != 0) {
        v %= q.moduli[s];
        if (v < 0) v += q.moduli[s];
      }
      if (v != 0) pc.origin[j].push_back({static_cast<int>(s), v});
    }
  }

  for (int k = 2; k <= P.class_bound; ++k) extend_level(pc, k);
  return pc;
}

PcPresentation truncate_top(const PcPresentation &P) {
  if (P.klass < 2) throw std::invalid_argument("truncate_top: class must be >= 2");
  PcPresentation r;
  r.alphabet = P.alphabet;
  r.relators = P.relators;
  r.klass = P.klass - 1;
  std::size_t keep = 0;
  while (keep < P.ngens() && P.weight[keep] < P.klass) ++keep;

  auto drop = [&](const PcWord &w) {
    PcWord out;
    for (const auto &[g, e] : w)
      if (static_cast<std::size_t>(g) < keep) out.push_back({g, e});
    return out;
  };

  for (std::size_t i = 0; i < keep; ++i) {
    r.add_gen(P.weight[i], P.modulus[i]);
    r.power_tail[i] = drop(P.power_tail[i]);
    for (const auto &[j, t] : P.conj_tail[i]) {
      PcWord w = drop(t);
      if (!w.empty()) r.conj_tail[i][j] = std::move(w);
    }
  }
  r.origin.reserve(P.origin.size());
  for (const PcWord &o : P.origin) r.origin.push_back(drop(o));
  return r;
}

bool check_consistency(const PcPresentation &P) {
  const std::size_t m = P.ngens();
  auto same = [&](const PcElement &a, const PcElement &b) { return a == b; };
  for (std::size_t c = 2; c < m; ++c)
    for (std::size_t b = 1; b < c; ++b)
      for (std::size_t a = 0; a < b; ++a) {
        PcElement ga = P.gen(a), gb = P.gen(b), gc = P.gen(c);
        if (!same(P.mul(P.mul(gc, gb), ga), P.mul(gc, P.mul(gb, ga)))) return false;
      }
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      PcElement gi = P.gen(i), gj = P.gen(j);
      if (P.modulus[j] != 0 &&
          !same(P.mul(P.power(gj, P.modulus[j]), gi),
                P.mul(P.power(gj, P.modulus[j] - 1), P.mul(gj, gi))))
        return false;
      if (P.modulus[i] != 0 &&
          !same(P.mul(gj, P.power(gi, P.modulus[i])),
                P.mul(P.mul(gj, gi), P.power(gi, P.modulus[i] - 1))))
        return false;
    }
  for (std::size_t i = 0; i < m; ++i)
    if (P.modulus[i] != 0) {
      PcElement gi = P.gen(i);
      if (!same(P.mul(P.power(gi, P.modulus[i]), gi), P.mul(gi, P.power(gi, P.modulus[i]))))
        return false;
    }
  for (const Word &r : P.relators)
    if (!P.is_identity_word(r)) return false;
  return true;
}

GammaLayer gamma_layer(const PcPresentation &P, int i) {
  if (i < 1) throw std::out_of_range("gamma_layer: index must be >= 1");
  GammaLayer L;
  L.pres = &P;
  if (i > P.klass) {
    L.canon = canonicalize(0, IntMatrix(0, 0));
    return L;
  }
  for (std::size_t g = 0; g < P.ngens(); ++g)
    if (P.weight[g] >= i) L.span.push_back(static_cast<int>(g));
  std::map<int, std::size_t> pos;
  for (std::size_t k = 0; k < L.span.size(); ++k) pos[L.span[k]] = k;

  for (int j : L.span)
    for (const auto &[i2, t] : P.conj_tail[j])
      if (!t.empty() && pos.count(i2))
        throw std::invalid_argument("gamma_layer: requested layer is not abelian");

  std::vector<std::vector<Int>> rows;
  for (std::size_t k = 0; k < L.span.size(); ++k) {
    int g = L.span[k];
    if (P.modulus[g] == 0) continue;
    std::vector<Int> row(L.span.size());
    row[k] = P.modulus[g];
    for (const auto &[h, e] : P.power_tail[g]) {
      auto it = pos.find(h);
      if (it == pos.end())
        throw std::logic_error("gamma_layer: power tail escapes the layer");
      row[it->second] -= e;
    }
    rows.push_back(std::move(row));
  }
  IntMatrix R(rows.size(), L.span.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < L.span.size(); ++c) R.at(r, c) = rows[r][c];
  L.canon = canonicalize(L.span.size(), R);
  return L;
}

std::vector<Int> GammaLayer::coords_of(const PcElement &x) const {
  std::vector<Int> v(span.size());
  std::map<int, std::size_t> pos;
  for (std::size_t k = 0; k < span.size(); ++k) pos[span[k]] = k;
  for (std::size_t g = 0; g < x.exps.size(); ++g) {
    if (x.exps[g] == 0) continue;
    auto it = pos.find(static_cast<int>(g));
    if (it == pos.end())
      throw std::invalid_argument("gamma_layer: element does not lie in the layer");
    v[it->second] = x.exps[g];
  }
  return canon.project(v);
}

PcElement GammaLayer::element_of(const std::vector<Int> &coords) const {
  std::vector<Int> x(span.size());
  for (std::size_t j = 0; j < span.size(); ++j)
    for (std::size_t i = 0; i < canon.dim(); ++i)
      x[j] += canon.from_canonical.at(j, i) * coords[i];
  PcWord w;
  for (std::size_t j = 0; j < span.size(); ++j)
    if (x[j] != 0) w.push_back({span[j], x[j]});
  return pres->collect(w);
}

std::vector<Word> commutant_generators(const std::vector<Word> &gens, int c) {
  std::vector<Word> out;
  const std::size_t k = gens.size();
  if (k == 0) return out;
  for (int w = 2; w <= c; ++w) {
    std::vector<std::size_t> idx(w, 0);
    while (true) {
      std::vector<Word> tuple;
      tuple.reserve(w);
      for (std::size_t t : idx) tuple.push_back(gens[t]);
      Word cw = iterated_commutator(tuple);
      if (!cw.empty()) out.push_back(std::move(cw));
      int p = w - 1;
      while (p >= 0 && idx[p] + 1 == k) idx[p--] = 0;
      if (p < 0) break;
      ++idx[p];
    }
  }
  return out;
}

bool hom_validate(NilHom &phi) {
  phi.validated = false;
  if (phi.images.size() != phi.source.alphabet.size()) return false;
  for (const Word &w : phi.images)
    if (w.max_gen() >= static_cast<int>(phi.target.alphabet.size())) return false;
  for (const Word &r : phi.source.relators)
    if (!phi.target.is_identity_word(substitute(r, phi.images))) return false;
  if (phi.target.klass > phi.source.klass) {
    // gamma_{c_H+1} of the image subgroup must vanish; by induction it is
    // enough to test the left-normed commutators of weight c_H+1.
    int w = phi.source.klass + 1;
    std::vector<std::size_t> idx(w, 0);
    const std::size_t k = phi.images.size();
    if (k > 0)
      while (true) {
        std::vector<Word> tuple;
        for (std::size_t t : idx) tuple.push_back(phi.images[t]);
        if (!phi.target.is_identity_word(iterated_commutator(tuple))) return false;
        int p = w - 1;
        while (p >= 0 && idx[p] + 1 == k) idx[p--] = 0;
        if (p < 0) break;
        ++idx[p];
      }
  }
  phi.validated = true;
  return true;
}

PcElement hom_apply(const NilHom &phi, const Word &w) {
  if (!phi.validated) throw std::invalid_argument("hom_apply: homomorphism not validated");
  return phi.target.normal_form(substitute(w, phi.images));
}

} // namespace pcpg
