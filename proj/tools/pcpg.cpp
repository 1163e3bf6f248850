#include "pcpg/io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

using json = nlohmann::ordered_json;
using namespace pcpg;

namespace {

constexpr int kExitOk = 0, kExitBadInput = 1, kExitNo = 2;

json matrix_json(const IntMatrix &m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

void emit(bool as_json, const json &obj, const std::string &text) {
  if (as_json)
    std::cout << obj.dump(2) << '\n';
  else
    std::cout << text;
}

std::vector<Word> instance_side(const GpcpInstance &inst, bool second) {
  std::vector<Word> v;
  for (const auto &p : inst.pairs) v.push_back(second ? p.second : p.first);
  return v;
}

Alphabet solution_alphabet(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return Alphabet(std::move(names));
}

// Abelianized exponent vector of a word.
std::vector<Int> exponent_vector(const Word &w, std::size_t n) {
  std::vector<Int> e(n);
  for (const Letter &l : w.letters()) e[static_cast<std::size_t>(l.gen)] += l.sign;
  return e;
}

AbelianCanon canon_of(const NilPresentation &p) {
  IntMatrix rows(p.relators.size(), p.alphabet.size());
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    auto e = exponent_vector(p.relators[r], p.alphabet.size());
    for (std::size_t c = 0; c < e.size(); ++c) rows.at(r, c) = e[c];
  }
  return canonicalize(p.alphabet.size(), rows);
}

struct Ctx {
  bool as_json = false;
  int bound = 8;
  int threads = 1;
  int klass = 0; // 0 = take the class from the presentation file
  bool pcp_mode = false;
  int exit_code = kExitOk;
};

WordOracle make_oracle(const std::optional<PcPresentation> &G) {
  return G ? WordOracle::nilpotent(*G) : WordOracle::free_reduction();
}

int run_snf(Ctx &ctx, const std::string &path) {
  IntMatrix A = read_matrix_file(path);
  SmithDecomposition s = smith_normal_form(A);
  json d = json::array();
  for (std::size_t i = 0; i < s.rank; ++i) d.push_back(s.D.at(i, i).str());
  json obj{{"verb", "snf"},
           {"result", {{"rank", s.rank}, {"d", d}, {"U", matrix_json(s.U)},
                       {"D", matrix_json(s.D)}, {"V", matrix_json(s.V)}}}};
  std::ostringstream os;
  os << "rank " << s.rank << "\nD:\n" << write_matrix(s.D) << "U:\n" << write_matrix(s.U)
     << "V:\n" << write_matrix(s.V);
  emit(ctx.as_json, obj, os.str());
  return kExitOk;
}

int run_abelian_kernel(Ctx &ctx, const std::string &src_path, const std::string &tgt_path,
                       const std::string &hom_path) {
  NilPresentation sp = read_presentation_file(src_path);
  NilPresentation tp = read_presentation_file(tgt_path);
  std::vector<Word> images = read_hom_file(hom_path, sp.alphabet, tp.alphabet);
  AbelianCanon S = canon_of(sp), T = canon_of(tp);
  IntMatrix M(T.dim(), S.dim());
  for (std::size_t j = 0; j < S.dim(); ++j) {
    // canonical source generator j, as original-generator exponents
    std::vector<Int> orig(S.original_gens());
    for (std::size_t i = 0; i < orig.size(); ++i) orig[i] = S.from_canonical.at(i, j);
    std::vector<Int> img(T.original_gens());
    for (std::size_t i = 0; i < orig.size(); ++i) {
      auto e = exponent_vector(images[i], T.original_gens());
      for (std::size_t t = 0; t < img.size(); ++t) img[t] += orig[i] * e[t];
    }
    auto coords = T.project(img);
    for (std::size_t t = 0; t < T.dim(); ++t) M.at(t, j) = coords[t];
  }
  AbelianHom phi{S, T, M};
  if (!phi.respects_torsion())
    throw ParseError(0, "homomorphism does not respect torsion");
  auto gens = hom_kernel(phi);
  json garr = json::array();
  std::ostringstream os;
  for (const auto &g : gens) {
    Word w = S.lift_word(g);
    std::string t = format_word(w, sp.alphabet);
    garr.push_back(t);
    os << t << '\n';
  }
  emit(ctx.as_json, json{{"verb", "abelian-kernel"}, {"result", "ok"}, {"generators", garr}},
       os.str());
  return kExitOk;
}

PcPresentation load_group(const Ctx &ctx, const std::string &path) {
  NilPresentation p = read_presentation_file(path);
  if (ctx.klass > 0) p.class_bound = ctx.klass;
  return nilpotent_quotient(p);
}

int run_nq(Ctx &ctx, const std::string &path) {
  PcPresentation P = load_group(ctx, path);
  json moduli = json::array(), weights = json::array();
  for (std::size_t i = 0; i < P.ngens(); ++i) {
    moduli.push_back(P.modulus[i].str());
    weights.push_back(P.weight[i]);
  }
  json obj{{"verb", "nq"},
           {"result", {{"ngens", P.ngens()}, {"class", P.klass}, {"weights", weights},
                       {"moduli", moduli}, {"order", P.order().str()}}}};
  emit(ctx.as_json, obj, P.describe());
  return kExitOk;
}

int run_normal_form(Ctx &ctx, const std::string &path, const std::string &word_text) {
  PcPresentation P = load_group(ctx, path);
  Word w = parse_word(word_text, P.alphabet);
  PcElement e = P.normal_form(w);
  json exps = json::array();
  std::ostringstream os;
  for (std::size_t i = 0; i < e.exps.size(); ++i) {
    exps.push_back(e.exps[i].str());
    os << (i ? " " : "") << e.exps[i];
  }
  os << '\n';
  emit(ctx.as_json,
       json{{"verb", "normal-form"},
            {"result", {{"exponents", exps}, {"trivial", e.is_identity()}}}},
       os.str());
  return kExitOk;
}

int run_equalizer(Ctx &ctx, const std::string &hpath, const std::string &gpath,
                  const std::string &phipath, const std::string &psipath) {
  PcPresentation H = load_group(ctx, hpath);
  PcPresentation G = load_group(ctx, gpath);
  NilHom phi{H, G, read_hom_file(phipath, H.alphabet, G.alphabet)};
  NilHom psi{H, G, read_hom_file(psipath, H.alphabet, G.alphabet)};
  if (!hom_validate(phi)) throw ParseError(0, "phi is not a homomorphism");
  if (!hom_validate(psi)) throw ParseError(0, "psi is not a homomorphism");
  EqualizerResult r = equalizer_nilpotent(H, G, phi, psi);
  json garr = json::array();
  std::ostringstream os;
  for (const Word &g : r.generators) {
    std::string t = format_word(g, H.alphabet);
    garr.push_back(t);
    os << t << '\n';
  }
  emit(ctx.as_json, json{{"verb", "equalizer"}, {"result", "ok"}, {"generators", garr}},
       os.str());
  return kExitOk;
}

int run_pcp_decide(Ctx &ctx, const std::string &gpath, const std::string &ipath) {
  PcPresentation G = load_group(ctx, gpath);
  GpcpInstance gi = read_instance_file(ipath, G.alphabet);
  if (!gi.constants_trivial()) throw ParseError(0, "pcp-decide needs a constant-free instance");
  auto res = pcp_decide_nilpotent(G, gi.homogeneous());
  Alphabet xs = solution_alphabet(gi.pairs.size());
  if (res) {
    std::string w = format_word(res->w, xs);
    std::string v = format_word(res->common_value, G.alphabet);
    emit(ctx.as_json,
         json{{"verb", "pcp-decide"}, {"result", "yes"}, {"witness", w}, {"value", v}},
         "YES\nwitness: " + w + "\nvalue: " + v + '\n');
    return kExitOk;
  }
  emit(ctx.as_json, json{{"verb", "pcp-decide"}, {"result", "no"}}, "NO\n");
  return kExitNo;
}

int run_search(Ctx &ctx, const std::string &ipath, const std::string &gpath) {
  std::optional<PcPresentation> G;
  GpcpInstance inst;
  if (!gpath.empty()) {
    G = load_group(ctx, gpath);
    inst = read_instance_file(ipath, G->alphabet);
  } else
    inst = read_instance_file(ipath);
  WordOracle oracle = make_oracle(G);
  std::optional<SolutionWitness> res;
  if (ctx.pcp_mode) {
    if (!inst.constants_trivial()) throw ParseError(0, "--pcp needs a constant-free instance");
    res = bounded_pcp_search(inst.homogeneous(), oracle, ctx.bound, ctx.threads);
  } else
    res = bounded_gpcp_search(inst, oracle, ctx.bound, ctx.threads);
  Alphabet xs = solution_alphabet(inst.pairs.size());
  if (res) {
    std::string w = res->w.empty() ? "1" : format_word(res->w, xs);
    std::string v = format_word(res->common_value, inst.target_alphabet);
    emit(ctx.as_json,
         json{{"verb", "search"}, {"result", "found"}, {"witness", w}, {"value", v}},
         "witness: " + w + "\nvalue: " + v + '\n');
    return kExitOk;
  }
  emit(ctx.as_json,
       json{{"verb", "search"}, {"result", "none-within-bound"}, {"bound", ctx.bound}},
       "none within bound " + std::to_string(ctx.bound) + '\n');
  return kExitNo;
}

int run_verify(Ctx &ctx, const std::string &ipath, const std::string &word_text,
               const std::string &gpath) {
  std::optional<PcPresentation> G;
  GpcpInstance inst;
  if (!gpath.empty()) {
    G = load_group(ctx, gpath);
    inst = read_instance_file(ipath, G->alphabet);
  } else
    inst = read_instance_file(ipath);
  Alphabet xs = solution_alphabet(inst.pairs.size());
  Word w = parse_word(word_text, xs);
  bool ok = verify_solution(inst, w, make_oracle(G));
  emit(ctx.as_json, json{{"verb", "verify"}, {"result", ok ? "valid" : "invalid"}},
       ok ? "valid\n" : "invalid\n");
  return ok ? kExitOk : kExitNo;
}

int run_encode_hwp(Ctx &ctx, const std::string &path) {
  HwpInstance h = read_hwp_file(path);
  GpcpInstance out = encode_hwp_gpcp(h);
  std::string text = write_instance(out);
  emit(ctx.as_json, json{{"verb", "encode-hwp"}, {"result", "ok"}, {"instance", text}}, text);
  return kExitOk;
}

int run_encode_dtc(Ctx &ctx, const std::string &gpath, const std::string &phipath,
                   const std::string &psipath, const std::string &u_text,
                   const std::string &v_text) {
  NilPresentation p = read_presentation_file(gpath);
  DtcInstance d;
  d.alphabet = p.alphabet;
  d.phi = read_hom_file(phipath, p.alphabet, p.alphabet);
  d.psi = read_hom_file(psipath, p.alphabet, p.alphabet);
  d.u = parse_word(u_text, p.alphabet);
  d.v = parse_word(v_text, p.alphabet);
  GpcpInstance out = encode_dtc_gpcp(d);
  std::string text = write_instance(out);
  emit(ctx.as_json, json{{"verb", "encode-dtc"}, {"result", "ok"}, {"instance", text}}, text);
  return kExitOk;
}

int run_normalize(Ctx &ctx, const std::string &ipath) {
  GpcpInstance inst = read_instance_file(ipath);
  std::string text = write_instance(normalize_gpcp(inst));
  emit(ctx.as_json, json{{"verb", "normalize"}, {"result", "ok"}, {"instance", text}}, text);
  return kExitOk;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"PCP/GPCP toolkit for free and nilpotent groups"};
  app.require_subcommand(1);
  Ctx ctx;
  app.add_flag("--json", ctx.as_json, "machine-readable output");

  std::string f1, f2, f3, f4, word_text, u_text, v_text, group_path;

  auto *snf = app.add_subcommand("snf", "Smith normal form of a matrix file");
  snf->add_option("matrix", f1)->required();

  auto *ak = app.add_subcommand("abelian-kernel", "kernel of an abelian homomorphism");
  ak->add_option("source", f1)->required();
  ak->add_option("target", f2)->required();
  ak->add_option("hom", f3)->required();

  auto *nq = app.add_subcommand("nq", "nilpotent quotient of a presentation");
  nq->add_option("presentation", f1)->required();
  nq->add_option("--class", ctx.klass, "override the class bound");

  auto *nf = app.add_subcommand("normal-form", "collected normal form of a word");
  nf->add_option("presentation", f1)->required();
  nf->add_option("word", word_text)->required();
  nf->add_option("--class", ctx.klass);

  auto *eq = app.add_subcommand("equalizer", "generators of E(phi,psi)");
  eq->add_option("source", f1)->required();
  eq->add_option("target", f2)->required();
  eq->add_option("phi", f3)->required();
  eq->add_option("psi", f4)->required();
  eq->add_option("--class", ctx.klass);

  auto *pd = app.add_subcommand("pcp-decide", "decide PCP over a nilpotent group");
  pd->add_option("group", f1)->required();
  pd->add_option("instance", f2)->required();
  pd->add_option("--class", ctx.klass);

  auto *se = app.add_subcommand("search", "bounded shortlex witness search");
  se->add_option("instance", f1)->required();
  se->add_option("--group", group_path, "nilpotent oracle; default free group");
  se->add_option("--bound", ctx.bound);
  se->add_option("--threads", ctx.threads);
  se->add_option("--class", ctx.klass);
  se->add_flag("--pcp", ctx.pcp_mode, "require a nonvanishing common value");

  auto *ve = app.add_subcommand("verify", "check a candidate solution");
  ve->add_option("instance", f1)->required();
  ve->add_option("word", word_text)->required();
  ve->add_option("--group", group_path);
  ve->add_option("--class", ctx.klass);

  auto *eh = app.add_subcommand("encode-hwp", "hereditary word problem -> GPCP instance");
  eh->add_option("hwp", f1)->required();

  auto *ed = app.add_subcommand("encode-dtc", "double twisted conjugacy -> GPCP instance");
  ed->add_option("group", f1)->required();
  ed->add_option("phi", f2)->required();
  ed->add_option("psi", f3)->required();
  ed->add_option("u", u_text)->required();
  ed->add_option("v", v_text)->required();

  auto *no = app.add_subcommand("normalize", "rewrite constants to (a,1,1,1) form");
  no->add_option("instance", f1)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (snf->parsed()) return run_snf(ctx, f1);
    if (ak->parsed()) return run_abelian_kernel(ctx, f1, f2, f3);
    if (nq->parsed()) return run_nq(ctx, f1);
    if (nf->parsed()) return run_normal_form(ctx, f1, word_text);
    if (eq->parsed()) return run_equalizer(ctx, f1, f2, f3, f4);
    if (pd->parsed()) return run_pcp_decide(ctx, f1, f2);
    if (se->parsed()) return run_search(ctx, f1, group_path);
    if (ve->parsed()) return run_verify(ctx, f1, word_text, group_path);
    if (eh->parsed()) return run_encode_hwp(ctx, f1);
    if (ed->parsed()) return run_encode_dtc(ctx, f1, f2, f3, u_text, v_text);
    if (no->parsed()) return run_normalize(ctx, f1);
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  }
  return kExitBadInput;
}
