#include "artin/complexes.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "artin/serialize.hpp"
#include "json.hpp"

namespace artin {

namespace {

using Json = nlohmann::ordered_json;

CoxMatrix matrix_of(const FcWordPtr& w) {
  CoxMatrix m(w->node->fc->graph());
  for (const Chunk& ch : fc_flatten(w))
    for (const SignedLetter& l : artin_word(ch.val)) m.apply_right(l.first);
  return m;
}

// ab sums, syllable count and side string are element invariants; together
// with the Coxeter image they make a cheap dedup bucket (fc_equal decides)
std::string element_bucket(const FcWordPtr& w) {
  std::ostringstream os;
  for (long long v : fc_abelianization(w)) os << v << ',';
  os << '#' << fc_syllable_count(w) << '#';
  for (const FcSyllable& s : w->syl) os << (s.side == 0 ? 'L' : 'R');
  os << '#';
  return os.str() + matrix_of(w).key();
}

std::vector<int> odd_class_roots(const DefiningGraph& g) {
  int n = g.rank();
  std::vector<int> cls(n);
  for (int i = 0; i < n; ++i) cls[i] = i;
  auto root = [&](int v) {
    while (cls[v] != v) v = cls[v] = cls[cls[v]];
    return v;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.label(i, j) != kInfLabel && g.label(i, j) % 2 == 1) cls[root(i)] = root(j);
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) out[i] = root(i);
  return out;
}

// L1 norm of the abelianization image, one coordinate per odd-edge class
long long ab_l1(const DefiningGraph& g, const FcWordPtr& w) {
  std::vector<int> roots = odd_class_roots(g);
  std::vector<long long> e = fc_abelianization(w);
  long long total = 0;
  for (int i = 0; i < g.rank(); ++i)
    if (roots[i] == i) total += e[i] < 0 ? -e[i] : e[i];
  return total;
}

// canonical key of the Coxeter coset cox(g) W_T: minimal matrix key over the
// right W_T translates; equal cosets in the Artin group land in equal buckets
struct CosetKeyer {
  const DefiningGraph* g;
  std::map<Mask, std::unique_ptr<CoxTable>> tabs;

  explicit CosetKeyer(const DefiningGraph& gr) : g(&gr) {}
  const CoxTable& tab(Mask t) {
    auto it = tabs.find(t);
    if (it == tabs.end()) it = tabs.emplace(t, std::make_unique<CoxTable>(*g, t)).first;
    return *it->second;
  }
  std::string coset_key(const CoxMatrix& mg, Mask t) {
    const CoxTable& W = tab(t);
    std::string best;
    for (int e = 0; e < W.size(); ++e) {
      CoxMatrix m = mg;
      for (uint8_t l : W.word(e)) m.apply_right(W.vertex_of_local(l));
      std::string k = m.key();
      if (best.empty() || k < best) best = std::move(k);
    }
    return best;
  }
};

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

std::vector<Mask> proper_irreducible_sphericals(const DefiningGraph& g) {
  std::vector<Mask> out;
  for (Mask t : spherical_subsets(g)) {
    if (t == 0 || t == g.full_mask()) continue;
    if (decompose(g, t).components.size() != 1) continue;
    out.push_back(t);
  }
  std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
    size_t pa = mask_vertices(a).size(), pb = mask_vertices(b).size();
    return std::tie(pa, a) < std::tie(pb, b);
  });
  return out;
}

struct DeligneBuilder {
  ParabolicContext* pc;
  const FcContext* fc;
  const DefiningGraph* g;
  CosetKeyer keyer;
  DeligneBall ball;
  std::map<Mask, std::map<std::string, std::vector<int>>> buckets;

  explicit DeligneBuilder(ParabolicContext& p)
      : pc(&p), fc(&p.fc()), g(&p.fc().graph()), keyer(p.fc().graph()) {}

  int find(const FcWordPtr& gw, Mask t, bool add, int dist) {
    std::string ck = keyer.coset_key(matrix_of(gw), t);
    auto& bucket = buckets[t][ck];
    for (int idx : bucket) {
      FcWordPtr diff = fc_mult(fc_inverse(ball.vertices[idx].g), gw);
      if (fc_member(diff, t)) return idx;
    }
    if (!add) return -1;
    int id = static_cast<int>(ball.vertices.size());
    ball.vertices.push_back({gw, t, dist});
    bucket.push_back(id);
    return id;
  }
};

}  // namespace

DeligneBall deligne_ball(ParabolicContext& pc, int radius) {
  const DefiningGraph& g = pc.fc().graph();
  if (!is_fc_type(g)) throw Error("defining graph is not FC type");
  DeligneBuilder bld(pc);
  bld.ball.radius = radius;
  Mask full = g.full_mask();
  const FcContext& fc = pc.fc();
  bld.find(fc_identity(fc.node(full)), 0, true, 0);
  // outward moves: grow the subset in place, or shrink it after sliding the
  // representative by one signed generator of the subset being left
  for (size_t qi = 0; qi < bld.ball.vertices.size(); ++qi) {
    DeligneVertex v = bld.ball.vertices[qi];
    if (v.dist >= radius) continue;
    for (int u = 0; u < g.rank(); ++u) {
      if (v.t & (Mask(1) << u)) continue;
      Mask t2 = v.t | (Mask(1) << u);
      if (!is_finite_type(g, t2)) continue;
      bld.find(v.g, t2, true, v.dist + 1);
    }
    for (int t : mask_vertices(v.t)) {
      Mask t2 = v.t & ~(Mask(1) << t);
      bld.find(v.g, t2, true, v.dist + 1);
      for (int sg : {1, -1}) {
        FcWordPtr h = fc_from_word(fc, full, {{t, sg}});
        bld.find(fc_mult(v.g, h), t2, true, v.dist + 1);
      }
    }
  }
  // complete the edge set inside the collected vertex set
  for (int i = 0; i < static_cast<int>(bld.ball.vertices.size()); ++i) {
    const DeligneVertex v = bld.ball.vertices[i];
    for (int u = 0; u < g.rank(); ++u) {
      if (v.t & (Mask(1) << u)) continue;
      Mask t2 = v.t | (Mask(1) << u);
      if (!is_finite_type(g, t2)) continue;
      int j = bld.find(v.g, t2, false, 0);
      if (j >= 0) bld.ball.edges.push_back({i, j, u});
    }
  }
  std::sort(bld.ball.edges.begin(), bld.ball.edges.end(),
            [](const DeligneEdge& a, const DeligneEdge& b) {
              return std::tie(a.a, a.b) < std::tie(b.a, b.b);
            });
  // exact distances within the collected subcomplex
  {
    std::vector<std::vector<int>> adj(bld.ball.vertices.size());
    for (const DeligneEdge& e : bld.ball.edges) {
      adj[e.a].push_back(e.b);
      adj[e.b].push_back(e.a);
    }
    std::vector<int> dist(bld.ball.vertices.size(), -1);
    std::deque<int> q{0};
    dist[0] = 0;
    while (!q.empty()) {
      int a = q.front();
      q.pop_front();
      for (int b : adj[a])
        if (dist[b] < 0) {
          dist[b] = dist[a] + 1;
          q.push_back(b);
        }
    }
    for (size_t i = 0; i < dist.size(); ++i)
      if (dist[i] >= 0) bld.ball.vertices[i].dist = dist[i];
  }
  // every interval with all faces present spans a cube
  std::vector<Mask> sph = spherical_subsets(g);
  for (int i = 0; i < static_cast<int>(bld.ball.vertices.size()); ++i) {
    const DeligneVertex v = bld.ball.vertices[i];
    for (Mask tp : sph) {
      if (tp == v.t || (tp & v.t) != v.t) continue;
      Mask d = tp & ~v.t;
      bool all = true;
      int top = -1;
      for (Mask sub = d;; sub = (sub - 1) & d) {
        if (sub != 0) {
          int j = bld.find(v.g, v.t | sub, false, 0);
          if (j < 0) {
            all = false;
            break;
          }
          if (sub == d) top = j;
        }
        if (sub == 0) break;
      }
      if (all) bld.ball.cubes.push_back({i, top, static_cast<int>(mask_vertices(d).size())});
    }
  }
  std::sort(bld.ball.cubes.begin(), bld.ball.cubes.end(),
            [](const DeligneCube& a, const DeligneCube& b) {
              return std::tie(a.bottom, a.top) < std::tie(b.bottom, b.top);
            });
  return bld.ball;
}

int deligne_find(ParabolicContext& pc, const DeligneBall& b, const FcWordPtr& gw, Mask t) {
  for (int i = 0; i < static_cast<int>(b.vertices.size()); ++i) {
    if (b.vertices[i].t != t) continue;
    FcWordPtr diff = fc_mult(fc_inverse(b.vertices[i].g), gw);
    if (pc.member_in_standard(diff, t)) return i;
  }
  return -1;
}

int hyperplane_type(const DeligneBall& b, int a, int bvtx) {
  for (const DeligneEdge& e : b.edges)
    if ((e.a == a && e.b == bvtx) || (e.a == bvtx && e.b == a)) return e.type;
  throw Error("not an edge of the ball");
}

std::vector<std::pair<int, int>> crossing_hyperplanes(const DeligneBall& b,
                                                      const std::vector<int>& path) {
  std::vector<std::pair<int, int>> out;
  for (size_t i = 0; i + 1 < path.size(); ++i)
    out.push_back({hyperplane_type(b, path[i], path[i + 1]), static_cast<int>(i)});
  return out;
}

std::vector<int> fixed_set(ParabolicContext& pc, const Parabolic& p, const DeligneBall& b) {
  std::vector<int> out;
  std::vector<FcWordPtr> gens = pc.generators(p);
  for (int i = 0; i < static_cast<int>(b.vertices.size()); ++i) {
    const DeligneVertex& v = b.vertices[i];
    FcWordPtr gi = fc_inverse(v.g);
    bool ok = true;
    for (const FcWordPtr& w : gens)
      if (!pc.member_in_standard(fc_mult(fc_mult(gi, w), v.g), v.t)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(i);
  }
  return out;
}

PathProfile edge_path_profile(const DeligneBall& b, const std::vector<int>& path) {
  if (path.size() < 2) throw Error("edge path needs at least two vertices");
  std::set<std::pair<int, int>> es;
  for (const DeligneEdge& e : b.edges) {
    es.insert({e.a, e.b});
    es.insert({e.b, e.a});
  }
  PathProfile prof;
  for (size_t i = 0; i + 1 < path.size(); ++i) {
    if (!es.count({path[i], path[i + 1]})) throw Error("consecutive vertices are not ball-adjacent");
    size_t pa = mask_vertices(b.vertices[path[i]].t).size();
    size_t pb = mask_vertices(b.vertices[path[i + 1]].t).size();
    prof.dirs.push_back(pb > pa ? 1 : -1);
  }
  for (size_t i = 1; i + 1 < path.size(); ++i) {
    if (prof.dirs[i - 1] == 1 && prof.dirs[i] == -1) prof.peaks.push_back(static_cast<int>(i));
    if (prof.dirs[i - 1] == -1 && prof.dirs[i] == 1) prof.valleys.push_back(static_cast<int>(i));
  }
  return prof;
}

bool gamma_connected(const DefiningGraph& g) {
  int n = g.rank();
  if (n <= 1) return true;
  std::vector<char> vis(n, 0);
  std::deque<int> q{0};
  vis[0] = 1;
  int cnt = 1;
  while (!q.empty()) {
    int a = q.front();
    q.pop_front();
    for (int b = 0; b < n; ++b)
      if (!vis[b] && g.label(a, b) != kInfLabel) {
        vis[b] = 1;
        ++cnt;
        q.push_back(b);
      }
  }
  return cnt == n;
}

CpDomain cp_fundamental_domain(ParabolicContext& pc) {
  const DefiningGraph& g = pc.fc().graph();
  if (decompose(g, g.full_mask()).components.size() != 1)
    throw Error("reducible defining graph: use the join test");
  CpDomain dom;
  dom.vertices = proper_irreducible_sphericals(g);
  std::vector<Parabolic> ps;
  for (Mask t : dom.vertices) ps.push_back(pc.make_standard(t));
  for (size_t i = 0; i < ps.size(); ++i)
    for (size_t j = i + 1; j < ps.size(); ++j) {
      ParabolicContext::Adjacency adj = pc.is_adjacent(ps[i], ps[j]);
      if (adj.adjacent)
        dom.edges.push_back({static_cast<int>(i), static_cast<int>(j), adj.witness});
    }
  {
    size_t n = dom.vertices.size();
    std::vector<std::vector<int>> adj(n);
    for (const auto& [a, b, w] : dom.edges) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    std::vector<char> vis(n, 0);
    size_t cnt = 0;
    if (n > 0) {
      std::deque<int> q{0};
      vis[0] = 1;
      cnt = 1;
      while (!q.empty()) {
        int a = q.front();
        q.pop_front();
        for (int b : adj[a])
          if (!vis[b]) {
            vis[b] = 1;
            ++cnt;
            q.push_back(b);
          }
      }
    }
    dom.connected = cnt == n;
  }
  dom.criterion = gamma_connected(g) && g.rank() >= 3;
  return dom;
}

JoinReport check_join(ParabolicContext& pc, int conjugator_bound) {
  const DefiningGraph& g = pc.fc().graph();
  Decomposition dec = decompose(g, g.full_mask());
  if (dec.components.size() < 2) throw Error("join test needs a reducible defining graph");
  std::vector<Mask> standards = proper_irreducible_sphericals(g);
  std::vector<Parabolic> pool;
  std::vector<int> factor;
  std::set<std::string> seen;
  Mask full = g.full_mask();
  for (const auto& w : pc.signed_words(conjugator_bound)) {
    FcWordPtr h = fc_from_word(pc.fc(), full, w);
    for (Mask t : standards) {
      Parabolic p = pc.make(h, t);
      if (!seen.insert(p.key).second) continue;
      int f = -1;
      for (size_t k = 0; k < dec.components.size(); ++k)
        if ((t & dec.components[k]) == t) f = static_cast<int>(k);
      pool.push_back(std::move(p));
      factor.push_back(f);
    }
  }
  JoinReport rep;
  rep.vertex_count = static_cast<int>(pool.size());
  size_t n = pool.size();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  rep.cross_adjacent = true;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      bool a = pc.is_adjacent(pool[i], pool[j]).adjacent;
      adj[i][j] = adj[j][i] = a ? 1 : 0;
      if (!a && factor[i] != factor[j]) rep.cross_adjacent = false;
    }
  int diam = 0;
  for (size_t s = 0; s < n && diam >= 0; ++s) {
    std::vector<int> dist(n, -1);
    std::deque<size_t> q{s};
    dist[s] = 0;
    while (!q.empty()) {
      size_t a = q.front();
      q.pop_front();
      for (size_t b = 0; b < n; ++b)
        if (adj[a][b] && dist[b] < 0) {
          dist[b] = dist[a] + 1;
          q.push_back(b);
        }
    }
    for (size_t b = 0; b < n; ++b) {
      if (dist[b] < 0) diam = -1;
      if (diam >= 0 && dist[b] > diam) diam = dist[b];
    }
  }
  rep.diameter = diam;
  rep.diameter_ok = diam >= 0 && diam <= 2;
  return rep;
}

CpBall cp_ball(ParabolicContext& pc, const Parabolic& base, int radius, int conjugator_bound) {
  const DefiningGraph& g = pc.fc().graph();
  if (base.x == 0 || base.x == g.full_mask() || !base.irreducible)
    throw Error("cp ball base must be proper, irreducible and spherical");
  std::vector<Mask> standards = proper_irreducible_sphericals(g);
  std::vector<Parabolic> pool{base};
  std::set<std::string> seen{base.key};
  Mask full = g.full_mask();
  for (const auto& w : pc.signed_words(conjugator_bound)) {
    FcWordPtr h = fc_from_word(pc.fc(), full, w);
    for (Mask t : standards) {
      Parabolic p = pc.make(h, t);
      if (seen.insert(p.key).second) pool.push_back(std::move(p));
    }
  }
  CpBall ball;
  ball.radius = radius;
  ball.conjugator_bound = conjugator_bound;
  ball.vertices.push_back(base);
  ball.dist.push_back(0);
  std::map<std::string, int> ballidx{{base.key, 0}};
  std::set<std::pair<int, int>> edgeset;
  for (size_t qi = 0; qi < ball.vertices.size(); ++qi) {
    Parabolic u = ball.vertices[qi];
    int du = ball.dist[qi];
    for (const Parabolic& w : pool) {
      if (w.key == u.key) continue;
      auto it = ballidx.find(w.key);
      if (it == ballidx.end() && du >= radius) continue;
      ParabolicContext::Adjacency adj = pc.is_adjacent(u, w);
      if (!adj.adjacent) continue;
      int wi;
      if (it == ballidx.end()) {
        wi = static_cast<int>(ball.vertices.size());
        ball.vertices.push_back(w);
        ball.dist.push_back(du + 1);
        ballidx.emplace(w.key, wi);
      } else {
        wi = it->second;
      }
      int a = static_cast<int>(qi), b = wi;
      if (a > b) std::swap(a, b);
      if (edgeset.insert({a, b}).second) ball.edges.push_back({a, b, adj.witness});
    }
  }
  std::sort(ball.edges.begin(), ball.edges.end());
  return ball;
}

int cp_distance(const CpBall& b, const std::string& pkey, const std::string& qkey) {
  int pi = -1, qi = -1;
  for (int i = 0; i < static_cast<int>(b.vertices.size()); ++i) {
    if (b.vertices[i].key == pkey) pi = i;
    if (b.vertices[i].key == qkey) qi = i;
  }
  if (pi < 0 || qi < 0) return -1;
  std::vector<std::vector<int>> adj(b.vertices.size());
  for (const auto& [x, y, w] : b.edges) {
    adj[x].push_back(y);
    adj[y].push_back(x);
  }
  std::vector<int> dist(b.vertices.size(), -1);
  std::deque<int> q{pi};
  dist[pi] = 0;
  while (!q.empty()) {
    int a = q.front();
    q.pop_front();
    for (int c : adj[a])
      if (dist[c] < 0) {
        dist[c] = dist[a] + 1;
        q.push_back(c);
      }
  }
  return dist[qi];
}

std::vector<std::vector<SignedLetter>> normalizer_generators(ParabolicContext& pc,
                                                             int length_bound) {
  const DefiningGraph& g = pc.fc().graph();
  std::vector<Mask> standards = proper_irreducible_sphericals(g);
  std::vector<std::vector<SignedLetter>> out;
  std::map<std::string, std::vector<FcWordPtr>> dedupe;
  Mask full = g.full_mask();
  for (const auto& w : pc.signed_words(length_bound)) {
    if (w.empty()) continue;
    FcWordPtr el = fc_from_word(pc.fc(), full, w);
    std::string b = element_bucket(el);
    bool dup = false;
    for (const FcWordPtr& o : dedupe[b])
      if (fc_equal(o, el)) {
        dup = true;
        break;
      }
    if (dup) continue;
    dedupe[b].push_back(el);
    for (Mask t : standards)
      if (is_normalizer(pc.fc(), el, t)) {
        out.push_back(w);
        break;
      }
  }
  return out;
}

std::vector<GrowthRow> cayley_growth(ParabolicContext& pc, const FcWordPtr& target,
                                     const std::vector<std::vector<SignedLetter>>& gens,
                                     int horizon, long long node_budget) {
  const DefiningGraph& g = pc.fc().graph();
  Mask full = g.full_mask();
  const FcNode* fnode = pc.fc().node(full);
  std::vector<FcWordPtr> gel;
  {
    std::map<std::string, std::vector<FcWordPtr>> dd;
    for (const auto& w : gens) {
      FcWordPtr el = fc_from_word(pc.fc(), full, w);
      if (fc_trivial(el)) continue;
      std::string b = element_bucket(el);
      bool dup = false;
      for (const FcWordPtr& o : dd[b])
        if (fc_equal(o, el)) {
          dup = true;
          break;
        }
      if (dup) continue;
      dd[b].push_back(el);
      gel.push_back(el);
    }
  }
  long long maxgen = 0;
  for (const FcWordPtr& e : gel) maxgen = std::max(maxgen, ab_l1(g, e));

  struct Side {
    std::vector<FcWordPtr> elems;
    std::vector<int> level;
    std::map<std::string, std::vector<int>> seen;
    std::vector<int> frontier;
    int depth = 0;
  };
  auto find_in = [](Side& s, const std::string& b, const FcWordPtr& w) {
    auto it = s.seen.find(b);
    if (it == s.seen.end()) return -1;
    for (int i : it->second)
      if (fc_equal(s.elems[i], w)) return i;
    return -1;
  };

  std::vector<GrowthRow> rows;
  FcWordPtr tgt = fc_identity(fnode);
  FcWordPtr tconv = target->node == fnode ? target : fc_convert(target, fnode);
  for (int n = 1; n <= horizon; ++n) {
    tgt = fc_mult(tgt, tconv);
    GrowthRow row;
    row.n = n;
    if (fc_trivial(tgt)) {
      row.distance = 0;
      row.rel = "=";
      rows.push_back(row);
      continue;
    }
    if (gel.empty()) {
      row.distance = 0;
      row.rel = "inf";
      rows.push_back(row);
      continue;
    }
    Side A, B;
    auto seed = [&](Side& s, const FcWordPtr& w) {
      s.elems.push_back(w);
      s.level.push_back(0);
      s.seen[element_bucket(w)].push_back(0);
      s.frontier.push_back(0);
    };
    seed(A, fc_identity(fnode));
    seed(B, tgt);
    long long nodes = 2, best = -1;
    bool budget_hit = false;
    while (true) {
      if (best >= 0 && best <= A.depth + B.depth + 1) break;
      Side& S = A.frontier.size() <= B.frontier.size() ? A : B;
      Side& O = &S == &A ? B : A;
      if (S.frontier.empty()) break;  // side exhausted: the subgroup is fully explored
      std::vector<int> next;
      for (int i : S.frontier) {
        for (const FcWordPtr& e : gel) {
          FcWordPtr w = fc_mult(S.elems[i], e);
          std::string b = element_bucket(w);
          if (find_in(S, b, w) >= 0) continue;
          int id = static_cast<int>(S.elems.size());
          S.elems.push_back(w);
          S.level.push_back(S.depth + 1);
          S.seen[b].push_back(id);
          next.push_back(id);
          ++nodes;
          int j = find_in(O, b, w);
          if (j >= 0) {
            long long cand = static_cast<long long>(S.depth) + 1 + O.level[j];
            if (best < 0 || cand < best) best = cand;
          }
        }
        if (nodes > node_budget) break;
      }
      if (nodes > node_budget) {
        budget_hit = true;
        break;
      }
      S.frontier = std::move(next);
      S.depth += 1;
    }
    row.nodes = nodes;
    if (best >= 0 && best <= A.depth + B.depth + 1) {
      row.distance = best;
      row.rel = "=";
    } else if (best >= 0) {
      row.distance = best;
      row.rel = "<=";
    } else if (!budget_hit && (A.frontier.empty() || B.frontier.empty())) {
      row.distance = 0;
      row.rel = "inf";
    } else {
      long long lb = A.depth + B.depth + 1;
      if (maxgen > 0) {
        long long l1 = ab_l1(g, tgt);
        lb = std::max(lb, (l1 + maxgen - 1) / maxgen);
      }
      row.distance = lb;
      row.rel = ">=";
    }
    rows.push_back(row);
  }
  return rows;
}

std::string deligne_to_dot(ParabolicContext& pc, const DeligneBall& b) {
  const DefiningGraph& g = pc.fc().graph();
  std::ostringstream os;
  os << "graph deligne_ball {\n";
  for (int i = 0; i < static_cast<int>(b.vertices.size()); ++i) {
    const DeligneVertex& v = b.vertices[i];
    std::string rep = fc_trivial(v.g) ? "" : fc_str(v.g) + ".";
    os << "  v" << i << " [label=\"" << dot_escape(rep + "A" + subset_str(g, v.t)) << "\"];\n";
  }
  for (const DeligneEdge& e : b.edges)
    os << "  v" << e.a << " -- v" << e.b << " [label=\"" << dot_escape(g.vertices[e.type])
       << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string deligne_to_json(ParabolicContext& pc, const DeligneBall& b) {
  const DefiningGraph& g = pc.fc().graph();
  Json j;
  j["radius"] = b.radius;
  Json vs = Json::array();
  for (int i = 0; i < static_cast<int>(b.vertices.size()); ++i) {
    const DeligneVertex& v = b.vertices[i];
    Json names = Json::array();
    for (int x : mask_vertices(v.t)) names.push_back(g.vertices[x]);
    vs.push_back({{"id", i}, {"rep", fc_str(v.g)}, {"subset", names}, {"dist", v.dist}});
  }
  j["vertices"] = vs;
  Json es = Json::array();
  for (const DeligneEdge& e : b.edges)
    es.push_back({{"a", e.a}, {"b", e.b}, {"type", g.vertices[e.type]}});
  j["edges"] = es;
  Json cs = Json::array();
  for (const DeligneCube& c : b.cubes)
    cs.push_back({{"bottom", c.bottom}, {"top", c.top}, {"dim", c.dim}});
  j["cubes"] = cs;
  return j.dump();
}

std::string cp_domain_to_dot(const DefiningGraph& g, const CpDomain& d) {
  std::ostringstream os;
  os << "graph cp_domain {\n";
  for (int i = 0; i < static_cast<int>(d.vertices.size()); ++i)
    os << "  v" << i << " [label=\"" << dot_escape("A" + subset_str(g, d.vertices[i])) << "\"];\n";
  for (const auto& [a, b, w] : d.edges)
    os << "  v" << a << " -- v" << b << " [label=\"" << dot_escape(w) << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string cp_domain_to_json(const DefiningGraph& g, const CpDomain& d) {
  Json j;
  Json vs = Json::array();
  for (Mask t : d.vertices) {
    Json names = Json::array();
    for (int x : mask_vertices(t)) names.push_back(g.vertices[x]);
    vs.push_back(names);
  }
  j["vertices"] = vs;
  Json es = Json::array();
  for (const auto& [a, b, w] : d.edges) es.push_back({{"a", a}, {"b", b}, {"witness", w}});
  j["edges"] = es;
  j["connected"] = d.connected;
  j["criterion"] = d.criterion;
  j["agree"] = d.connected == d.criterion;
  return j.dump();
}

std::string cp_ball_to_dot(const CpBall& b) {
  std::ostringstream os;
  os << "graph cp_ball {\n";
  for (int i = 0; i < static_cast<int>(b.vertices.size()); ++i)
    os << "  v" << i << " [label=\"" << dot_escape(b.vertices[i].key) << "\"];\n";
  for (const auto& [x, y, w] : b.edges)
    os << "  v" << x << " -- v" << y << " [label=\"" << dot_escape(w) << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string cp_ball_to_json(ParabolicContext& pc, const CpBall& b) {
  Json j;
  j["radius"] = b.radius;
  j["conjugator_bound"] = b.conjugator_bound;
  Json vs = Json::array();
  for (int i = 0; i < static_cast<int>(b.vertices.size()); ++i) {
    Json v = Json::parse(pc.to_json(b.vertices[i]));
    v["dist"] = b.dist[i];
    vs.push_back(v);
  }
  j["vertices"] = vs;
  Json es = Json::array();
  for (const auto& [x, y, w] : b.edges) es.push_back({{"a", x}, {"b", y}, {"witness", w}});
  j["edges"] = es;
  return j.dump();
}

std::string growth_to_csv(const std::vector<GrowthRow>& rows) {
  std::ostringstream os;
  os << "n,distance,nodes_expanded\n";
  for (const GrowthRow& r : rows) {
    os << r.n << ',';
    if (r.rel == "=")
      os << r.distance;
    else if (r.rel == "inf")
      os << "unreachable";
    else
      os << r.rel << r.distance;
    os << ',' << r.nodes << '\n';
  }
  return os.str();
}

}  // namespace artin
