#include "artin/graph.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace artin {

int DefiningGraph::index_of(const std::string& name) const {
  for (int i = 0; i < rank(); ++i)
    if (vertices[i] == name) return i;
  throw Error("unknown vertex: " + name);
}

namespace {

void attach_field(DefiningGraph& g) {
  long long L = 2;
  for (int i = 0; i < g.rank(); ++i)
    for (int j = i + 1; j < g.rank(); ++j)
      if (g.labels[i][j] != kInfLabel) L = std::lcm(L, (long long)g.labels[i][j]);
  if (L > 1000) throw Error("labels too large for the shared coefficient field");
  g.field = std::make_shared<CycloField>(static_cast<int>(L));
}

int add_vertex(DefiningGraph& g, const std::string& name) {
  // names feed serialization formats whose separators must stay unambiguous
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
      throw Error("vertex name must match [A-Za-z0-9_]+: " + name);
  for (int i = 0; i < g.rank(); ++i)
    if (g.vertices[i] == name) return i;
  g.vertices.push_back(name);
  for (auto& row : g.labels) row.push_back(kInfLabel);
  g.labels.emplace_back(g.rank(), kInfLabel);
  if (g.rank() > 20) throw Error("too many vertices (limit 20)");
  return g.rank() - 1;
}

void set_label(DefiningGraph& g, int i, int j, int m) {
  if (i == j) throw Error("self-loop on vertex " + g.vertices[i]);
  if (m < 2) throw Error("label < 2 between " + g.vertices[i] + " and " + g.vertices[j]);
  if (g.labels[i][j] != kInfLabel)
    throw Error("conflicting or repeated label declaration for " + g.vertices[i] + "," + g.vertices[j]);
  g.labels[i][j] = g.labels[j][i] = m;
}

}  // namespace

DefiningGraph parse_graph(const std::string& text) {
  DefiningGraph g;
  std::vector<bool> declared_bare;
  std::string line;
  std::string normalized = text;
  std::replace(normalized.begin(), normalized.end(), ';', '\n');
  std::istringstream in(normalized);
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    std::string t;
    while (ls >> t) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok.size() == 1) {
      int before = g.rank();
      int idx = add_vertex(g, tok[0]);
      if (idx < before) throw Error("duplicate vertex: " + tok[0]);
      continue;
    }
    if (tok.size() != 3) throw Error("malformed line: " + line);
    if (tok[2] == "inf") throw Error("label token 'inf' forbidden; omit the edge instead");
    int m = 0;
    try {
      size_t pos = 0;
      m = std::stoi(tok[2], &pos);
      if (pos != tok[2].size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw Error("bad label token: " + tok[2]);
    }
    int i = add_vertex(g, tok[0]);
    int j = add_vertex(g, tok[1]);
    set_label(g, i, j, m);
  }
  if (g.rank() == 0) throw Error("empty graph description");
  attach_field(g);
  return g;
}

DefiningGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open graph file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string graph_to_json(const DefiningGraph& g) {
  nlohmann::json j;
  j["vertices"] = g.vertices;
  auto edges = nlohmann::json::array();
  for (int i = 0; i < g.rank(); ++i)
    for (int k = i + 1; k < g.rank(); ++k)
      if (g.labels[i][k] != kInfLabel) edges.push_back({i, k, g.labels[i][k]});
  j["edges"] = edges;
  return j.dump();
}

DefiningGraph graph_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  DefiningGraph g;
  for (const auto& v : j.at("vertices")) {
    int before = g.rank();
    if (add_vertex(g, v.get<std::string>()) < before)
      throw Error("duplicate vertex: " + v.get<std::string>());
  }
  for (const auto& e : j.at("edges")) {
    if (e.size() != 3) throw Error("edge entries must be [i,j,m]");
    auto vid = [&](const nlohmann::json& x) {
      return x.is_string() ? g.index_of(x.get<std::string>()) : x.get<int>();
    };
    int a = vid(e[0]), b = vid(e[1]);
    if (a < 0 || b < 0 || a >= g.rank() || b >= g.rank()) throw Error("edge index out of range");
    set_label(g, a, b, e[2].get<int>());
  }
  if (g.rank() == 0) throw Error("empty graph description");
  attach_field(g);
  return g;
}

std::vector<int> mask_vertices(Mask m) {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if (m & (Mask(1) << i)) out.push_back(i);
  return out;
}

Mask mask_of(const DefiningGraph& g, const std::vector<std::string>& names) {
  Mask m = 0;
  for (const auto& n : names) m |= Mask(1) << g.index_of(n);
  return m;
}

std::string subset_str(const DefiningGraph& g, Mask m) {
  std::string out = "{";
  bool first = true;
  for (int i : mask_vertices(m)) {
    if (!first) out += ",";
    out += g.vertices[i];
    first = false;
  }
  return out + "}";
}

bool is_clique(const DefiningGraph& g, Mask t) {
  auto vs = mask_vertices(t);
  for (size_t a = 0; a < vs.size(); ++a)
    for (size_t b = a + 1; b < vs.size(); ++b)
      if (g.label(vs[a], vs[b]) == kInfLabel) return false;
  return true;
}

bool is_finite_type(const DefiningGraph& g, Mask t) {
  if ((t & ~g.full_mask()) != 0) throw Error("subset not contained in the vertex set");
  auto vs = mask_vertices(t);
  int n = static_cast<int>(vs.size());
  if (n == 0) return true;
  const CycloField* f = g.field.get();
  // doubled cosine matrix: 2 on the diagonal, -2cos(pi/m) off it (-2 when m is infinite)
  std::vector<std::vector<AlgInt>> a(n, std::vector<AlgInt>(n, AlgInt(f, 0)));
  for (int i = 0; i < n; ++i) {
    a[i][i] = AlgInt(f, 2);
    for (int j = i + 1; j < n; ++j) {
      int m = g.label(vs[i], vs[j]);
      AlgInt v = (m == kInfLabel) ? AlgInt(f, 2) : two_cos_pi_over(f, m);
      a[i][j] = a[j][i] = -v;
    }
  }
  for (const AlgInt& d : leading_principal_minors(a))
    if (d.sign() <= 0) return false;
  return true;
}

std::vector<Mask> spherical_subsets(const DefiningGraph& g) {
  int n = g.rank();
  if (n > 16) throw Error("subset enumeration limited to 16 vertices");
  std::vector<char> spherical(size_t(1) << n, 0);
  spherical[0] = 1;
  std::vector<Mask> out{0};
  std::vector<Mask> order;
  for (Mask m = 1; m < (Mask(1) << n); ++m) order.push_back(m);
  std::sort(order.begin(), order.end(), [](Mask x, Mask y) {
    int cx = std::popcount(x), cy = std::popcount(y);
    return cx != cy ? cx < cy : x < y;
  });
  for (Mask m : order) {
    bool facets_ok = true;
    for (int i = 0; i < n && facets_ok; ++i)
      if (m & (Mask(1) << i))
        if (!spherical[m ^ (Mask(1) << i)]) facets_ok = false;
    if (!facets_ok) continue;  // closed under subsets, so a bad facet settles it
    if (is_finite_type(g, m)) {
      spherical[m] = 1;
      out.push_back(m);
    }
  }
  return out;
}

bool is_fc_type(const DefiningGraph& g) {
  // enough to check maximal cliques; finite type is closed under subsets
  std::vector<Mask> maximal;
  // Bron-Kerbosch without pivoting; desk-scale graphs are tiny
  struct Rec {
    const DefiningGraph& g;
    std::vector<Mask>& out;
    void run(Mask r, Mask p, Mask x) {
      if (p == 0 && x == 0) {
        out.push_back(r);
        return;
      }
      Mask pc = p;
      while (pc) {
        int v = std::countr_zero(pc);
        pc &= pc - 1;
        Mask nb = 0;
        for (int u = 0; u < g.rank(); ++u)
          if (u != v && g.label(u, v) != kInfLabel) nb |= Mask(1) << u;
        run(r | (Mask(1) << v), p & nb, x & nb);
        p &= ~(Mask(1) << v);
        x |= Mask(1) << v;
      }
    }
  } rec{g, maximal};
  rec.run(0, g.full_mask(), 0);
  for (Mask c : maximal)
    if (!is_finite_type(g, c)) return false;
  return true;
}

namespace {

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

Decomposition decompose(const DefiningGraph& g, Mask t) {
  auto vs = mask_vertices(t);
  int n = static_cast<int>(vs.size());
  Decomposition d;
  UnionFind uf(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (g.label(vs[a], vs[b]) != 2) uf.unite(a, b);
  std::vector<Mask> comp_of_root(n, 0);
  for (int a = 0; a < n; ++a) comp_of_root[uf.find(a)] |= Mask(1) << vs[a];
  for (int a = 0; a < n; ++a)
    if (comp_of_root[a]) d.components.push_back(comp_of_root[a]);
  std::sort(d.components.begin(), d.components.end());

  // join: complement graph (pairs with no edge at all) disconnected
  if (n >= 2) {
    UnionFind cf(n);
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (g.label(vs[a], vs[b]) == kInfLabel) cf.unite(a, b);
    int roots = 0;
    for (int a = 0; a < n; ++a)
      if (cf.find(a) == a) ++roots;
    d.is_graph_join = roots >= 2;
  }
  return d;
}

SubsetClass classify_subset(const DefiningGraph& g, Mask t) {
  SubsetClass c;
  c.subset = t;
  c.finite_type = is_finite_type(g, t);
  c.irreducible = decompose(g, t).components.size() == 1;
  if (c.finite_type && t != 0) {
    c.coxeter_order = recognized_order(g, t);
    if (c.coxeter_order == 0)
      throw Error("internal: positive definite subset not matched by diagram recognition");
  } else if (t == 0) {
    c.coxeter_order = 1;
  }
  return c;
}

namespace {

unsigned long long chk_umul(unsigned long long a, unsigned long long b) {
  unsigned long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("Coxeter order overflow");
  return r;
}

unsigned long long factorial(int n) {
  unsigned long long r = 1;
  for (int i = 2; i <= n; ++i) r = chk_umul(r, (unsigned long long)i);
  return r;
}

// order of the irreducible component given as a vertex list, or 0
unsigned long long component_order(const DefiningGraph& g, const std::vector<int>& vs) {
  int n = static_cast<int>(vs.size());
  if (n == 1) return 2;
  struct Edge {
    int a, b, m;
  };
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      int m = g.label(vs[a], vs[b]);
      if (m == kInfLabel) return 0;
      if (m >= 3) edges.push_back({a, b, m});
    }
  if (n == 2) {
    if (edges.empty()) return 0;  // reducible pair cannot reach here, but be safe
    return chk_umul(2, (unsigned long long)edges[0].m);
  }
  if (static_cast<int>(edges.size()) != n - 1) return 0;  // must be a tree
  std::vector<std::vector<std::pair<int, int>>> adj(n);
  for (const auto& e : edges) {
    adj[e.a].push_back({e.b, e.m});
    adj[e.b].push_back({e.a, e.m});
  }
  int deg3 = -1;
  for (int i = 0; i < n; ++i) {
    if (adj[i].size() >= 4) return 0;
    if (adj[i].size() == 3) {
      if (deg3 >= 0) return 0;
      deg3 = i;
    }
  }
  if (deg3 < 0) {
    // path: walk from an endpoint and collect the label sequence
    int start = -1;
    for (int i = 0; i < n; ++i)
      if (adj[i].size() == 1) start = i;
    std::vector<int> seq;
    int prev = -1, cur = start;
    while (static_cast<int>(seq.size()) < n - 1) {
      for (auto [nx, m] : adj[cur])
        if (nx != prev) {
          seq.push_back(m);
          prev = cur;
          cur = nx;
          break;
        }
    }
    int big = 0;
    for (int m : seq)
      if (m > 3) ++big;
    if (big == 0) return factorial(n + 1);                       // A_n
    if (big >= 2) return 0;
    int pos = 0, val = 0;
    for (int i = 0; i < n - 1; ++i)
      if (seq[i] > 3) {
        pos = i;
        val = seq[i];
      }
    bool at_end = (pos == 0 || pos == n - 2);
    if (val == 4 && at_end) return chk_umul(unsigned(1) << n, factorial(n));  // B_n
    if (val == 4 && n == 4 && pos == 1) return 1152;                          // F4
    if (val == 5 && at_end && n == 3) return 120;                             // H3
    if (val == 5 && at_end && n == 4) return 14400;                           // H4
    return 0;
  }
  // fork: all labels 3, legs from the branch vertex
  for (const auto& e : edges)
    if (e.m != 3) return 0;
  std::vector<int> legs;
  for (auto [nx, m] : adj[deg3]) {
    int len = 1, prev = deg3, cur = nx;
    while (true) {
      int next = -1;
      for (auto [nn, mm] : adj[cur])
        if (nn != prev) next = nn;
      if (next < 0) break;
      if (adj[cur].size() == 3) return 0;  // second branch point
      prev = cur;
      cur = next;
      ++len;
    }
    legs.push_back(len);
  }
  std::sort(legs.begin(), legs.end());
  if (legs[0] == 1 && legs[1] == 1) return chk_umul(unsigned(1) << (n - 1), factorial(n));  // D_n
  if (legs == std::vector<int>{1, 2, 2}) return 51840;     // E6
  if (legs == std::vector<int>{1, 2, 3}) return 2903040;   // E7
  if (legs == std::vector<int>{1, 2, 4}) return 696729600; // E8
  return 0;
}

}  // namespace

unsigned long long recognized_order(const DefiningGraph& g, Mask t) {
  if (t == 0) return 1;
  unsigned long long total = 1;
  for (Mask comp : decompose(g, t).components) {
    unsigned long long o = component_order(g, mask_vertices(comp));
    if (o == 0) return 0;
    total = chk_umul(total, o);
  }
  return total;
}

}  // namespace artin
