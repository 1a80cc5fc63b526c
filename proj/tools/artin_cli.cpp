#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "artin/complexes.hpp"
#include "artin/serialize.hpp"
#include "json.hpp"

namespace {

using namespace artin;
using Json = nlohmann::ordered_json;

struct Ctx {
  std::unique_ptr<DefiningGraph> g;
  std::unique_ptr<FcContext> fc;
  std::unique_ptr<ParabolicContext> pc;
};

Ctx load_ctx(const std::string& path) {
  Ctx c;
  c.g = std::make_unique<DefiningGraph>(load_graph_file(path));
  c.fc = std::make_unique<FcContext>(*c.g);
  c.pc = std::make_unique<ParabolicContext>(*c.fc);
  return c;
}

// words are space-separated tokens: a vertex name, optionally ^k (k may be
// negative); "e" is the empty word
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
      std::string kk = tok.substr(car + 1);
      try {
        size_t pos = 0;
        k = std::stoll(kk, &pos);
        if (pos != kk.size()) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw Error("bad exponent in token: " + tok);
      }
    }
    if (k > 1000 || k < -1000) throw Error("exponent out of range in token: " + tok);
    int v = g.index_of(name);
    int sign = k < 0 ? -1 : 1;
    for (long long i = 0; i < (k < 0 ? -k : k); ++i) out.push_back({v, sign});
  }
  return out;
}

Mask parse_subset(const DefiningGraph& g, const std::string& text) {
  std::string s = text;
  if (s.size() < 2 || s.front() != '{' || s.back() != '}')
    throw Error("subset literal must look like {s,t}: " + text);
  s = s.substr(1, s.size() - 2);
  std::vector<std::string> names;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, ',')) {
    size_t a = cur.find_first_not_of(" \t");
    size_t b = cur.find_last_not_of(" \t");
    if (a == std::string::npos) continue;
    names.push_back(cur.substr(a, b - a + 1));
  }
  return mask_of(g, names);
}

// parabolic literal "conjugator-word;{x,y}", conjugator "e" for identity
Parabolic parse_parabolic(Ctx& c, const std::string& text) {
  size_t semi = text.find(';');
  if (semi == std::string::npos)
    throw Error("parabolic literal must look like \"word;{s,t}\": " + text);
  std::string wpart = text.substr(0, semi);
  Mask x = parse_subset(*c.g, text.substr(semi + 1));
  FcWordPtr h = fc_from_word(*c.fc, c.g->full_mask(), parse_word(*c.g, wpart));
  return c.pc->make(h, x);
}

void emit(const std::string& out_path, const std::string& text) {
  std::string payload = text;
  if (payload.empty() || payload.back() != '\n') payload += '\n';
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw Error("cannot open output file: " + out_path);
  f << payload;
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"computational toolkit for FC-type Artin groups"};
  app.require_subcommand(1);

  struct Common {
    std::string graph, format = "text", out;
    unsigned seed = 12345;
  };
  auto add_common = [](CLI::App* cmd, Common& c, std::vector<std::string> formats) {
    cmd->add_option("-g,--graph", c.graph, "defining graph file")->required();
    cmd->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember(formats));
    cmd->add_option("-o,--out", c.out, "write output to this file instead of stdout");
    cmd->add_option("--seed", c.seed, "seed for sampled certificates");
  };

  std::string word, left, right, subset, plit, qlit, witness, target;
  int radius = 4, bound = 3, budget = 4, horizon = 5, nbound = 2;
  long long node_budget = 400000;

  auto* classify = app.add_subcommand("classify", "graph and subset classification");
  auto cc = std::make_shared<Common>();
  add_common(classify, *cc, {"text", "json"});

  auto* nf = app.add_subcommand("nf", "normal form of a word");
  auto cnf = std::make_shared<Common>();
  add_common(nf, *cnf, {"text", "json"});
  nf->add_option("-w,--word", word, "input word")->required();

  auto* eq = app.add_subcommand("equal", "decide equality of two words");
  auto ceq = std::make_shared<Common>();
  add_common(eq, *ceq, {"text", "json"});
  eq->add_option("-a,--left", left, "left word")->required();
  eq->add_option("-b,--right", right, "right word")->required();

  auto* dl = app.add_subcommand("delta", "Garside element of a spherical subset");
  auto cdl = std::make_shared<Common>();
  add_common(dl, *cdl, {"text", "json"});
  dl->add_option("-x,--subset", subset, "spherical subset, e.g. {s,t}")->required();

  auto* zc = app.add_subcommand("z", "central element and key of a parabolic");
  auto cz = std::make_shared<Common>();
  add_common(zc, *cz, {"text", "json"});
  zc->add_option("-p,--parabolic", plit, "parabolic literal word;{s,t}")->required();

  auto* mb = app.add_subcommand("member", "membership of a word in a parabolic");
  auto cmb = std::make_shared<Common>();
  add_common(mb, *cmb, {"text", "json"});
  mb->add_option("-w,--word", word, "input word")->required();
  mb->add_option("-p,--parabolic", plit, "parabolic literal")->required();

  auto* adj = app.add_subcommand("adjacent", "adjacency of two parabolics");
  auto cadj = std::make_shared<Common>();
  add_common(adj, *cadj, {"text", "json"});
  adj->add_option("-p,--parabolic", plit, "first parabolic literal")->required();
  adj->add_option("-q,--other", qlit, "second parabolic literal")->required();

  auto* mn = app.add_subcommand("minimal", "minimal parabolic containing a word");
  auto cmn = std::make_shared<Common>();
  add_common(mn, *cmn, {"text", "json"});
  mn->add_option("-w,--word", word, "input word")->required();
  mn->add_option("--bound", bound, "conjugator search bound")->check(CLI::Range(0, 6));
  mn->add_option("--witness", witness, "witness parabolic literal");

  auto* is = app.add_subcommand("intersect", "certified intersection of two parabolics");
  auto cis = std::make_shared<Common>();
  add_common(is, *cis, {"text", "json"});
  is->add_option("-p,--parabolic", plit, "first parabolic literal")->required();
  is->add_option("-q,--other", qlit, "second parabolic literal")->required();
  is->add_option("--budget", budget, "sample ball radius")->check(CLI::Range(1, 8));

  auto* cpd = app.add_subcommand("cp-domain", "standard slice of the parabolic complex");
  auto ccpd = std::make_shared<Common>();
  add_common(cpd, *ccpd, {"text", "json", "dot"});

  auto* cpb = app.add_subcommand("cp-ball", "ball in the complex of parabolic subgroups");
  auto ccpb = std::make_shared<Common>();
  add_common(cpb, *ccpb, {"text", "json", "dot"});
  cpb->add_option("-p,--parabolic", plit, "base parabolic literal")->required();
  cpb->add_option("--radius", radius, "ball radius")->check(CLI::Range(0, 8));
  cpb->add_option("--bound", bound, "conjugator bound for the vertex pool")
      ->check(CLI::Range(0, 6));

  auto* db = app.add_subcommand("deligne-ball", "bounded ball of the Deligne complex");
  auto cdb = std::make_shared<Common>();
  add_common(db, *cdb, {"text", "json", "dot"});
  db->add_option("--radius", radius, "ball radius")->check(CLI::Range(0, 8));

  auto* gr = app.add_subcommand("growth", "normalizer Cayley-graph growth experiment");
  auto cgr = std::make_shared<Common>();
  cgr->format = "csv";
  add_common(gr, *cgr, {"csv", "text", "json"});
  gr->add_option("--target", target, "target word (default: all generators in order)");
  gr->add_option("--horizon", horizon, "largest power of the target")->check(CLI::Range(1, 12));
  gr->add_option("--nbound", nbound, "length bound for normalizer generators")
      ->check(CLI::Range(1, 4));
  gr->add_option("--nodes", node_budget, "node budget per power")
      ->check(CLI::Range(static_cast<long long>(100), static_cast<long long>(5000000)));

  CLI11_PARSE(app, argc, argv);

  try {
    if (classify->parsed()) {
      Ctx c = load_ctx(cc->graph);
      bool fc_ok = is_fc_type(*c.g);
      bool irr = decompose(*c.g, c.g->full_mask()).components.size() == 1;
      std::vector<Mask> sph = spherical_subsets(*c.g);
      if (cc->format == "json") {
        Json j;
        j["vertices"] = c.g->vertices;
        j["fc_type"] = fc_ok;
        j["irreducible"] = irr;
        Json arr = Json::array();
        for (Mask t : sph) {
          SubsetClass sc = classify_subset(*c.g, t);
          Json names = Json::array();
          for (int v : mask_vertices(t)) names.push_back(c.g->vertices[v]);
          arr.push_back({{"subset", names},
                         {"irreducible", sc.irreducible},
                         {"coxeter_order", sc.coxeter_order}});
        }
        j["spherical"] = arr;
        emit(cc->out, j.dump());
      } else {
        std::ostringstream os;
        os << "vertices: " << c.g->rank() << '\n';
        os << "fc_type: " << bool_str(fc_ok) << '\n';
        os << "irreducible: " << bool_str(irr) << '\n';
        os << "spherical subsets: " << sph.size() << '\n';
        for (Mask t : sph) {
          SubsetClass sc = classify_subset(*c.g, t);
          os << "  " << subset_str(*c.g, t) << " coxeter_order=" << sc.coxeter_order
             << (sc.irreducible ? " irreducible" : "") << '\n';
        }
        emit(cc->out, os.str());
      }
    } else if (nf->parsed()) {
      Ctx c = load_ctx(cnf->graph);
      FcWordPtr w = fc_from_word(*c.fc, c.g->full_mask(), parse_word(*c.g, word));
      if (cnf->format == "json") {
        Json j;
        j["input"] = word;
        j["nf"] = fc_str(w);
        j["trivial"] = fc_trivial(w);
        emit(cnf->out, j.dump());
      } else {
        emit(cnf->out, "nf: " + fc_str(w));
      }
    } else if (eq->parsed()) {
      Ctx c = load_ctx(ceq->graph);
      FcWordPtr a = fc_from_word(*c.fc, c.g->full_mask(), parse_word(*c.g, left));
      FcWordPtr b = fc_from_word(*c.fc, c.g->full_mask(), parse_word(*c.g, right));
      bool e = fc_equal(a, b);
      if (ceq->format == "json") {
        Json j;
        j["equal"] = e;
        emit(ceq->out, j.dump());
      } else {
        emit(ceq->out, "equal: " + bool_str(e));
      }
    } else if (dl->parsed()) {
      Ctx c = load_ctx(cdl->graph);
      Mask x = parse_subset(*c.g, subset);
      if (!is_finite_type(*c.g, x)) throw Error("subset is not spherical: " + subset);
      const GarsideContext& gc = c.fc->garside(x);
      ArtinElement d = artin_delta(gc, 1);
      int k = gc.center_exponent();
      if (cdl->format == "json") {
        Json j;
        j["delta"] = artin_str(d);
        j["k"] = k;
        j["z"] = artin_str(artin_delta(gc, k));
        emit(cdl->out, j.dump());
      } else {
        std::ostringstream os;
        os << "delta: " << artin_str(d) << '\n';
        os << "k: " << k << '\n';
        os << "z: " << artin_str(artin_delta(gc, k)) << '\n';
        emit(cdl->out, os.str());
      }
    } else if (zc->parsed()) {
      Ctx c = load_ctx(cz->graph);
      Parabolic p = parse_parabolic(c, plit);
      if (cz->format == "json") {
        emit(cz->out, c.pc->to_json(p));
      } else {
        std::ostringstream os;
        os << "z: " << fc_str(p.z) << '\n';
        os << "key: " << p.key << '\n';
        os << "irreducible: " << bool_str(p.irreducible) << '\n';
        emit(cz->out, os.str());
      }
    } else if (mb->parsed()) {
      Ctx c = load_ctx(cmb->graph);
      Parabolic p = parse_parabolic(c, plit);
      FcWordPtr w = fc_from_word(*c.fc, c.g->full_mask(), parse_word(*c.g, word));
      bool m = c.pc->member(w, p);
      if (cmb->format == "json") {
        Json j;
        j["member"] = m;
        emit(cmb->out, j.dump());
      } else {
        emit(cmb->out, "member: " + bool_str(m));
      }
    } else if (adj->parsed()) {
      Ctx c = load_ctx(cadj->graph);
      Parabolic p = parse_parabolic(c, plit);
      Parabolic q = parse_parabolic(c, qlit);
      ParabolicContext::Adjacency a = c.pc->is_adjacent(p, q);
      if (cadj->format == "json") {
        Json j;
        j["adjacent"] = a.adjacent;
        j["witness"] = a.witness;
        emit(cadj->out, j.dump());
      } else if (a.adjacent) {
        emit(cadj->out, "adjacent (" + (a.witness.empty() ? "unwitnessed" : a.witness) + ")");
      } else {
        emit(cadj->out, "not adjacent");
      }
    } else if (mn->parsed()) {
      Ctx c = load_ctx(cmn->graph);
      FcWordPtr w = fc_from_word(*c.fc, c.g->full_mask(), parse_word(*c.g, word));
      std::optional<Parabolic> wit;
      if (!witness.empty()) wit = parse_parabolic(c, witness);
      Parabolic p = c.pc->minimal_parabolic(w, bound, wit);
      if (cmn->format == "json") {
        emit(cmn->out, c.pc->to_json(p));
      } else {
        std::ostringstream os;
        os << "key: " << p.key << '\n';
        os << "conjugator: " << fc_str(p.g) << '\n';
        os << "standard_part: " << subset_str(*c.g, p.x) << '\n';
        os << "irreducible: " << bool_str(p.irreducible) << '\n';
        emit(cmn->out, os.str());
      }
    } else if (is->parsed()) {
      Ctx c = load_ctx(cis->graph);
      Parabolic p = parse_parabolic(c, plit);
      Parabolic q = parse_parabolic(c, qlit);
      ParabolicContext::IntersectResult r = c.pc->intersect(p, q, budget, cis->seed);
      if (cis->format == "json") {
        emit(cis->out, c.pc->to_json(r));
      } else {
        std::ostringstream os;
        os << "mode: " << r.mode << '\n';
        os << "result: " << subset_str(*c.g, r.r.x) << " conjugated by " << fc_str(r.r.g) << '\n';
        os << "key: " << r.r.key << '\n';
        os << "containment: " << bool_str(r.containment) << '\n';
        os << "saturation: " << bool_str(r.saturation) << '\n';
        os << "samples: " << r.samples << '\n';
        emit(cis->out, os.str());
      }
    } else if (cpd->parsed()) {
      Ctx c = load_ctx(ccpd->graph);
      CpDomain d = cp_fundamental_domain(*c.pc);
      if (ccpd->format == "json") {
        emit(ccpd->out, cp_domain_to_json(*c.g, d));
      } else if (ccpd->format == "dot") {
        emit(ccpd->out, cp_domain_to_dot(*c.g, d));
      } else {
        std::ostringstream os;
        os << "vertices: " << d.vertices.size() << '\n';
        os << "edges: " << d.edges.size() << '\n';
        os << "connected: " << bool_str(d.connected) << '\n';
        os << "criterion: " << bool_str(d.criterion) << '\n';
        os << "agree: " << bool_str(d.connected == d.criterion) << '\n';
        emit(ccpd->out, os.str());
      }
    } else if (cpb->parsed()) {
      Ctx c = load_ctx(ccpb->graph);
      Parabolic base = parse_parabolic(c, plit);
      CpBall b = cp_ball(*c.pc, base, radius, bound);
      if (ccpb->format == "json") {
        emit(ccpb->out, cp_ball_to_json(*c.pc, b));
      } else if (ccpb->format == "dot") {
        emit(ccpb->out, cp_ball_to_dot(b));
      } else {
        int deg = 0;
        for (const auto& [a, bb, w] : b.edges)
          if (a == 0 || bb == 0) ++deg;
        std::ostringstream os;
        os << "vertices: " << b.vertices.size() << '\n';
        os << "edges: " << b.edges.size() << '\n';
        os << "base_neighbors: " << deg << '\n';
        emit(ccpb->out, os.str());
      }
    } else if (db->parsed()) {
      Ctx c = load_ctx(cdb->graph);
      DeligneBall b = deligne_ball(*c.pc, radius);
      if (cdb->format == "json") {
        emit(cdb->out, deligne_to_json(*c.pc, b));
      } else if (cdb->format == "dot") {
        emit(cdb->out, deligne_to_dot(*c.pc, b));
      } else {
        int maxd = 0;
        for (const DeligneVertex& v : b.vertices) maxd = std::max(maxd, v.dist);
        std::ostringstream os;
        os << "vertices: " << b.vertices.size() << '\n';
        os << "edges: " << b.edges.size() << '\n';
        os << "cubes: " << b.cubes.size() << '\n';
        os << "max_dist: " << maxd << '\n';
        emit(cdb->out, os.str());
      }
    } else if (gr->parsed()) {
      Ctx c = load_ctx(cgr->graph);
      std::string tw = target;
      if (tw.empty()) {
        for (int i = 0; i < c.g->rank(); ++i) {
          if (i) tw += ' ';
          tw += c.g->vertices[i];
        }
      }
      FcWordPtr t = fc_from_word(*c.fc, c.g->full_mask(), parse_word(*c.g, tw));
      std::vector<std::vector<SignedLetter>> gens = normalizer_generators(*c.pc, nbound);
      std::vector<GrowthRow> rows = cayley_growth(*c.pc, t, gens, horizon, node_budget);
      if (cgr->format == "json") {
        Json arr = Json::array();
        for (const GrowthRow& r : rows)
          arr.push_back(
              {{"n", r.n}, {"distance", r.distance}, {"rel", r.rel}, {"nodes", r.nodes}});
        Json j;
        j["generators"] = gens.size();
        j["rows"] = arr;
        emit(cgr->out, j.dump());
      } else {
        emit(cgr->out, growth_to_csv(rows));
      }
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
