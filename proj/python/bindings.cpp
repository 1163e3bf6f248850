#include "pcpg/io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace pcpg;

namespace {

py::object py_int(const Int &v) {
  std::string s = v.str();
  PyObject *o = PyLong_FromString(s.c_str(), nullptr, 10);
  if (!o) throw py::error_already_set();
  return py::reinterpret_steal<py::object>(o);
}

Int from_py(py::handle h) {
  return Int(py::str(h).cast<std::string>());
}

IntMatrix matrix_from(const std::vector<std::vector<py::object>> &rows) {
  std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw py::value_error("ragged matrix");
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = from_py(rows[i][j]);
  }
  return m;
}

py::list matrix_to(const IntMatrix &m) {
  py::list rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    py::list row;
    for (std::size_t j = 0; j < m.cols(); ++j) row.append(py_int(m.at(i, j)));
    rows.append(row);
  }
  return rows;
}

Alphabet solution_alphabet(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return Alphabet(std::move(names));
}

struct Group {
  PcPresentation P;

  Word parse(const std::string &text) const { return parse_word(text, P.alphabet); }
};

GpcpInstance make_instance(const Alphabet &a,
                           const std::vector<std::pair<std::string, std::string>> &pairs,
                           const std::vector<std::string> &constants) {
  GpcpInstance inst;
  inst.target_alphabet = a;
  for (const auto &[g, h] : pairs) inst.pairs.push_back({parse_word(g, a), parse_word(h, a)});
  if (!constants.empty()) {
    if (constants.size() != 4) throw py::value_error("constants must be (a1, b1, a2, b2)");
    inst.a1 = parse_word(constants[0], a);
    inst.b1 = parse_word(constants[1], a);
    inst.a2 = parse_word(constants[2], a);
    inst.b2 = parse_word(constants[3], a);
  }
  return inst;
}

Alphabet alphabet_for(const std::optional<Group> &g, const std::vector<std::string> &names) {
  if (g) return g->P.alphabet;
  if (names.empty()) throw py::value_error("either group or alphabet is required");
  return Alphabet(names);
}

py::object witness_out(const std::optional<SolutionWitness> &r, std::size_t npairs,
                       const Alphabet &target) {
  if (!r) return py::none();
  return py::make_tuple(format_word(r->w, solution_alphabet(npairs)),
                        format_word(r->common_value, target));
}

} // namespace

PYBIND11_MODULE(_pcpg, m) {
  m.doc() = "PCP/GPCP toolkit for free and nilpotent groups";

  m.def("smith_normal_form", [](const std::vector<std::vector<py::object>> &rows) {
    SmithDecomposition s = smith_normal_form(matrix_from(rows));
    py::dict out;
    out["rank"] = s.rank;
    py::list d;
    for (std::size_t i = 0; i < s.rank; ++i) d.append(py_int(s.D.at(i, i)));
    out["d"] = d;
    out["U"] = matrix_to(s.U);
    out["D"] = matrix_to(s.D);
    out["V"] = matrix_to(s.V);
    return out;
  });

  py::class_<Group>(m, "Group")
      .def_property_readonly("ngens", [](const Group &g) { return g.P.ngens(); })
      .def_property_readonly("generators",
                             [](const Group &g) { return g.P.alphabet.names(); })
      .def_property_readonly("nilpotency_class", [](const Group &g) { return g.P.klass; })
      .def_property_readonly("weights", [](const Group &g) { return g.P.weight; })
      .def_property_readonly("moduli",
                             [](const Group &g) {
                               py::list out;
                               for (const Int &v : g.P.modulus) out.append(py_int(v));
                               return out;
                             })
      .def("order", [](const Group &g) { return py_int(g.P.order()); })
      .def("normal_form",
           [](const Group &g, const std::string &w) {
             py::list out;
             for (const Int &v : g.P.normal_form(g.parse(w)).exps) out.append(py_int(v));
             return out;
           })
      .def("is_identity",
           [](const Group &g, const std::string &w) { return g.P.is_identity_word(g.parse(w)); })
      .def("__repr__", [](const Group &g) { return g.P.describe(); });

  m.def(
      "nilpotent_quotient",
      [](const std::vector<std::string> &gens, const std::vector<std::string> &relators,
         int klass) {
        Alphabet a(gens);
        NilPresentation p{a, {}, klass};
        for (const std::string &r : relators) p.relators.push_back(parse_word(r, a));
        return Group{nilpotent_quotient(p)};
      },
      py::arg("generators"), py::arg("relators") = std::vector<std::string>{},
      py::arg("nilpotency_class") = 1);

  m.def("free_nilpotent", [](int n, int c) { return Group{free_nilpotent(n, c)}; });

  m.def("equalizer",
        [](const Group &H, const Group &G, const std::vector<std::string> &phi_images,
           const std::vector<std::string> &psi_images) {
          auto parse_images = [&](const std::vector<std::string> &texts) {
            std::vector<Word> ws;
            for (const std::string &t : texts) ws.push_back(parse_word(t, G.P.alphabet));
            return ws;
          };
          NilHom phi{H.P, G.P, parse_images(phi_images)};
          NilHom psi{H.P, G.P, parse_images(psi_images)};
          if (!hom_validate(phi) || !hom_validate(psi))
            throw py::value_error("images do not define a homomorphism");
          std::vector<std::string> out;
          for (const Word &g : equalizer_nilpotent(H.P, G.P, phi, psi).generators)
            out.push_back(format_word(g, H.P.alphabet));
          return out;
        });

  m.def("pcp_decide",
        [](const Group &G, const std::vector<std::pair<std::string, std::string>> &pairs) {
          GpcpInstance inst = make_instance(G.P.alphabet, pairs, {});
          auto r = pcp_decide_nilpotent(G.P, inst.homogeneous());
          return witness_out(r, inst.pairs.size(), G.P.alphabet);
        });

  m.def(
      "search",
      [](const std::vector<std::pair<std::string, std::string>> &pairs,
         const std::vector<std::string> &constants, int bound,
         const std::optional<Group> &group, const std::vector<std::string> &alphabet, bool pcp,
         int threads) {
        Alphabet a = alphabet_for(group, alphabet);
        GpcpInstance inst = make_instance(a, pairs, constants);
        WordOracle oracle =
            group ? WordOracle::nilpotent(group->P) : WordOracle::free_reduction();
        std::optional<SolutionWitness> r;
        if (pcp) {
          if (!inst.constants_trivial()) throw py::value_error("pcp search takes no constants");
          r = bounded_pcp_search(inst.homogeneous(), oracle, bound, threads);
        } else {
          r = bounded_gpcp_search(inst, oracle, bound, threads);
        }
        return witness_out(r, inst.pairs.size(), a);
      },
      py::arg("pairs"), py::arg("constants") = std::vector<std::string>{},
      py::arg("bound") = 8, py::arg("group") = std::nullopt,
      py::arg("alphabet") = std::vector<std::string>{}, py::arg("pcp") = false,
      py::arg("threads") = 1);

  m.def(
      "verify",
      [](const std::vector<std::pair<std::string, std::string>> &pairs,
         const std::vector<std::string> &constants, const std::string &witness,
         const std::optional<Group> &group, const std::vector<std::string> &alphabet) {
        Alphabet a = alphabet_for(group, alphabet);
        GpcpInstance inst = make_instance(a, pairs, constants);
        Word w = parse_word(witness, solution_alphabet(inst.pairs.size()));
        WordOracle oracle =
            group ? WordOracle::nilpotent(group->P) : WordOracle::free_reduction();
        return verify_solution(inst, w, oracle);
      },
      py::arg("pairs"), py::arg("constants"), py::arg("witness"),
      py::arg("group") = std::nullopt, py::arg("alphabet") = std::vector<std::string>{});

  m.def("encode_hwp", [](const std::vector<std::string> &gens,
                         const std::vector<std::string> &relators, const std::string &word) {
    Alphabet a(gens);
    HwpInstance h;
    h.alphabet = a;
    for (const std::string &r : relators) h.relators.push_back(parse_word(r, a));
    h.w = parse_word(word, a);
    GpcpInstance g = encode_hwp_gpcp(h);
    py::list pairs;
    for (const auto &[u, v] : g.pairs)
      pairs.append(py::make_tuple(format_word(u, a), format_word(v, a)));
    return py::make_tuple(pairs,
                          py::make_tuple(format_word(g.a1, a), format_word(g.b1, a),
                                         format_word(g.a2, a), format_word(g.b2, a)));
  });

  m.def(
      "normalize",
      [](const std::vector<std::pair<std::string, std::string>> &pairs,
         const std::vector<std::string> &constants, const std::vector<std::string> &alphabet) {
        Alphabet a(alphabet);
        GpcpInstance n = normalize_gpcp(make_instance(a, pairs, constants));
        py::list out;
        for (const auto &[g, h] : n.pairs)
          out.append(py::make_tuple(format_word(g, a), format_word(h, a)));
        return py::make_tuple(out, py::make_tuple(format_word(n.a1, a), format_word(n.b1, a),
                                                  format_word(n.a2, a), format_word(n.b2, a)));
      },
      py::arg("pairs"), py::arg("constants"), py::arg("alphabet"));
}
