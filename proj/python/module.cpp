#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <sstream>
#include <stdexcept>

#include "artin/complexes.hpp"
#include "artin/serialize.hpp"

namespace py = pybind11;
using namespace artin;

namespace {

// words are space-separated tokens: a vertex name, optionally ^k
std::vector<SignedLetter> parse_word(const DefiningGraph& g, const std::string& text) {
  std::vector<SignedLetter> out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "e") continue;
    std::string name = tok;
    long long k = 1;
    size_t car = tok.find('^');
    if (car != std::string::npos) {
      name = tok.substr(0, car);
      k = std::stoll(tok.substr(car + 1));
    }
    if (k > 1000 || k < -1000) throw Error("exponent out of range in token: " + tok);
    int v = g.index_of(name);
    int sign = k < 0 ? -1 : 1;
    for (long long i = 0; i < (k < 0 ? -k : k); ++i) out.push_back({v, sign});
  }
  return out;
}

struct PyGroup {
  DefiningGraph g;
  FcContext fc;
  ParabolicContext pc;

  explicit PyGroup(DefiningGraph gr) : g(std::move(gr)), fc(g), pc(fc) {}

  FcWordPtr word(const std::string& text) {
    return fc_from_word(fc, g.full_mask(), parse_word(g, text));
  }
  Mask subset(const std::vector<std::string>& names) { return mask_of(g, names); }
  Parabolic parab(const std::string& w, const std::vector<std::string>& names) {
    return pc.make(word(w), subset(names));
  }

  std::vector<std::string> names() const { return g.vertices; }
  bool fc_type() const { return is_fc_type(g); }
  bool spherical() const { return is_finite_type(g, g.full_mask()); }

  bool equal(const std::string& a, const std::string& b) { return fc_equal(word(a), word(b)); }
  bool trivial(const std::string& a) { return fc_trivial(word(a)); }
  long long syllables(const std::string& a) { return fc_syllable_count(word(a)); }

  std::string nf(const std::string& a) {
    if (!spherical()) throw Error("normal form printing requires a spherical graph");
    const GarsideContext& gc = fc.garside(g.full_mask());
    return artin_str(artin_from_word(gc, parse_word(g, a)));
  }

  std::string z_key(const std::vector<std::string>& names) {
    return pc.make_standard(subset(names)).key;
  }
  bool member(const std::string& a, const std::string& w,
              const std::vector<std::string>& names) {
    return pc.member(word(a), parab(w, names));
  }

  py::tuple adjacent(const std::string& pw, const std::vector<std::string>& px,
                     const std::string& qw, const std::vector<std::string>& qx) {
    auto adj = pc.is_adjacent(parab(pw, px), parab(qw, qx));
    return py::make_tuple(adj.adjacent, adj.witness);
  }

  py::dict minimal(const std::string& a, int bound) {
    Parabolic r = pc.minimal_parabolic(word(a), bound);
    py::dict d;
    d["subset"] = subset_str(g, r.x);
    d["key"] = r.key;
    d["irreducible"] = r.irreducible;
    return d;
  }

  py::dict intersect(const std::string& pw, const std::vector<std::string>& px,
                     const std::string& qw, const std::vector<std::string>& qx, int budget) {
    auto res = pc.intersect(parab(pw, px), parab(qw, qx), budget);
    py::dict d;
    d["mode"] = res.mode;
    d["containment"] = res.containment;
    d["saturation"] = res.saturation;
    d["key"] = res.r.key;
    d["subset"] = subset_str(g, res.r.x);
    return d;
  }

  py::dict cp_domain() {
    CpDomain dom = cp_fundamental_domain(pc);
    py::dict d;
    d["connected"] = dom.connected;
    d["criterion"] = dom.criterion;
    d["vertices"] = dom.vertices.size();
    d["edges"] = dom.edges.size();
    return d;
  }

  py::dict join(int bound) {
    JoinReport jr = check_join(pc, bound);
    py::dict d;
    d["cross_adjacent"] = jr.cross_adjacent;
    d["vertices"] = jr.vertex_count;
    d["diameter"] = jr.diameter;
    d["diameter_ok"] = jr.diameter_ok;
    return d;
  }

  py::dict deligne(int radius) {
    DeligneBall b = deligne_ball(pc, radius);
    py::dict d;
    d["vertices"] = b.vertices.size();
    d["edges"] = b.edges.size();
    d["cubes"] = b.cubes.size();
    return d;
  }

  std::string growth_csv(const std::string& target, int horizon, long long budget, int bound) {
    auto gens = normalizer_generators(pc, bound);
    return artin::growth_to_csv(cayley_growth(pc, word(target), gens, horizon, budget));
  }

  std::string graph_json() const { return graph_to_json(g); }
};

}  // namespace

PYBIND11_MODULE(_artin, m) {
  m.doc() = "FC-type Artin group computations: word problem, parabolic "
            "subgroups, Deligne complex and growth experiments";

  py::class_<PyGroup>(m, "Group")
      .def(py::init([](const std::string& text) {
             return std::make_unique<PyGroup>(parse_graph(text));
           }),
           py::arg("text"), "build from an inline edge list, e.g. 's t 3; t u 3'")
      .def_static(
          "load",
          [](const std::string& path) { return std::make_unique<PyGroup>(load_graph_file(path)); },
          py::arg("path"))
      .def_property_readonly("rank", [](const PyGroup& gp) { return gp.g.rank(); })
      .def("names", &PyGroup::names)
      .def("fc_type", &PyGroup::fc_type)
      .def("spherical", &PyGroup::spherical)
      .def("equal", &PyGroup::equal, py::arg("a"), py::arg("b"))
      .def("trivial", &PyGroup::trivial, py::arg("word"))
      .def("syllables", &PyGroup::syllables, py::arg("word"))
      .def("nf", &PyGroup::nf, py::arg("word"))
      .def("z_key", &PyGroup::z_key, py::arg("subset"))
      .def("member", &PyGroup::member, py::arg("word"), py::arg("conjugator"), py::arg("subset"))
      .def("adjacent", &PyGroup::adjacent, py::arg("p_conjugator"), py::arg("p_subset"),
           py::arg("q_conjugator"), py::arg("q_subset"))
      .def("minimal", &PyGroup::minimal, py::arg("word"), py::arg("bound") = 2)
      .def("intersect", &PyGroup::intersect, py::arg("p_conjugator"), py::arg("p_subset"),
           py::arg("q_conjugator"), py::arg("q_subset"), py::arg("budget") = 3)
      .def("cp_domain", &PyGroup::cp_domain)
      .def("join", &PyGroup::join, py::arg("bound") = 2)
      .def("deligne", &PyGroup::deligne, py::arg("radius"))
      .def("growth_csv", &PyGroup::growth_csv, py::arg("target"), py::arg("horizon") = 4,
           py::arg("budget") = 200000, py::arg("bound") = 2)
      .def("graph_json", &PyGroup::graph_json);
}
