#include "artin/parabolic.hpp"

#include <algorithm>
#include <climits>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

#include "artin/serialize.hpp"
#include "json.hpp"

namespace artin {

namespace {

using Json = nlohmann::ordered_json;

constexpr long long kBallCap = 3000;  // exact enumeration limit per side
constexpr int kSampleDraws = 600;
constexpr int kMaxCandidates = 12;
constexpr long long kWitnessIdx = LLONG_MAX / 2;

// conjugation-invariant prefilter key; fc_equal decides inside a bucket
std::string invariant_bucket(const FcWordPtr& w) {
  std::ostringstream os;
  for (long long v : fc_abelianization(w)) os << v << ',';
  os << '#' << fc_syllable_count(w) << '#';
  std::string head = os.str();
  return head + fc_cox_key(w);
}

FcWordPtr conj_by(const FcWordPtr& h, const FcWordPtr& a) {  // h a h^{-1}
  return fc_mult(fc_mult(h, a), fc_inverse(h));
}

std::vector<std::string> split_key(const std::string& key) {
  std::vector<std::string> parts;
  size_t pos = 0;
  while (true) {
    size_t amp = key.find(" & ", pos);
    if (amp == std::string::npos) {
      parts.push_back(key.substr(pos));
      break;
    }
    parts.push_back(key.substr(pos, amp - pos));
    pos = amp + 3;
  }
  return parts;
}

}  // namespace

ParabolicContext::ParabolicContext(const FcContext& fc) : fc_(&fc) {}

FcWordPtr ParabolicContext::z_of_standard(Mask x) {
  auto it = zcache_.find(x);
  if (it != zcache_.end()) return it->second;
  FcWordPtr z = fc_identity(fc_->node(fc_->graph().full_mask()));
  for (Mask comp : decompose(fc_->graph(), x).components)
    z = fc_feed(z, make_chunks(*fc_, z_element(fc_->garside(comp))));
  zcache_[x] = z;
  return z;
}

Parabolic ParabolicContext::make(const FcWordPtr& g0, Mask x) {
  const DefiningGraph& gr = fc_->graph();
  if ((x & ~gr.full_mask()) != 0 || !is_finite_type(gr, x))
    throw Error("standard part is not spherical: " + subset_str(gr, x));
  const FcNode* full = fc_->node(gr.full_mask());
  FcWordPtr g = !g0 ? fc_identity(full) : (g0->node == full ? g0 : fc_convert(g0, full));
  Parabolic p;
  p.g = g;
  p.x = x;
  Decomposition dec = decompose(gr, x);
  p.irreducible = dec.components.size() == 1;
  p.z = conj_by(g, z_of_standard(x));
  if (x == 0) {
    p.key = "1";
    return p;
  }
  if (p.irreducible) {
    p.key = intern(p.z);
    return p;
  }
  // reducible: the subgroup is the product of its irreducible components and
  // each of those is pinned by its own z, so the key is the sorted part list
  std::vector<std::string> parts;
  for (Mask comp : dec.components) parts.push_back(intern(conj_by(g, z_of_standard(comp))));
  std::sort(parts.begin(), parts.end());
  p.key = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) p.key += " & " + parts[i];
  return p;
}

Parabolic ParabolicContext::make_standard(Mask x) {
  return make(fc_identity(fc_->node(fc_->graph().full_mask())), x);
}

std::string ParabolicContext::intern(const FcWordPtr& z, const std::string* forced) {
  auto& bucket = intern_[invariant_bucket(z)];
  for (const auto& entry : bucket)
    if (fc_equal(entry.first, z)) return entry.second;
  std::string key = forced ? *forced : fc_str(z);
  bucket.emplace_back(z, key);
  return key;
}

const std::unordered_set<std::string>& ParabolicContext::coxeter_keys(Mask x) {
  auto it = wkeys_.find(x);
  if (it != wkeys_.end()) return it->second;
  const DefiningGraph& gr = fc_->graph();
  CoxTable W(gr, x);
  std::unordered_set<std::string> keys;
  for (int e = 0; e < W.size(); ++e) {
    CoxMatrix m(gr);
    for (uint8_t l : W.word(e)) m.apply_right(W.vertex_of_local(l));
    keys.insert(m.key());
  }
  return wkeys_.emplace(x, std::move(keys)).first->second;
}

bool ParabolicContext::member_in_standard(const FcWordPtr& beta, Mask x) {
  // the Coxeter image of A_X is W_X, so a miss there settles it cheaply
  if (coxeter_keys(x).count(fc_cox_key(beta)) == 0) return false;
  return fc_member(beta, x);
}

bool ParabolicContext::member(const FcWordPtr& alpha, const Parabolic& p) {
  FcWordPtr beta = fc_mult(fc_mult(fc_inverse(p.g), alpha), p.g);
  return member_in_standard(beta, p.x);
}

std::vector<FcWordPtr> ParabolicContext::generators(const Parabolic& p) {
  std::vector<FcWordPtr> out;
  Mask full = fc_->graph().full_mask();
  for (int v : mask_vertices(p.x))
    out.push_back(conj_by(p.g, fc_from_word(*fc_, full, {{v, 1}})));
  return out;
}

bool ParabolicContext::contains(const Parabolic& big, const Parabolic& small) {
  for (const FcWordPtr& s : generators(small))
    if (!member(s, big)) return false;
  return true;
}

Parabolic ParabolicContext::conjugate(const FcWordPtr& h, const Parabolic& p) {
  return make(fc_mult(h, p.g), p.x);
}

std::vector<std::vector<SignedLetter>> ParabolicContext::signed_words(int bound) const {
  std::vector<std::vector<SignedLetter>> out;
  out.push_back({});
  size_t lo = 0, hi = 1;
  int n = fc_->graph().rank();
  for (int len = 1; len <= bound; ++len) {
    for (size_t i = lo; i < hi; ++i)
      for (int v = 0; v < n; ++v)
        for (int sg : {1, -1}) {
          std::vector<SignedLetter> w = out[i];
          if (!w.empty() && w.back().first == v && w.back().second == -sg) continue;
          w.push_back({v, sg});
          out.push_back(std::move(w));
        }
    lo = hi;
    hi = out.size();
  }
  return out;
}

std::optional<FcWordPtr> ParabolicContext::is_conjugate(const Parabolic& p, const Parabolic& q,
                                                        int bound) {
  const DefiningGraph& gr = fc_->graph();
  Decomposition dp = decompose(gr, p.x), dq = decompose(gr, q.x);
  {
    // conjugation preserves the multiset of component ranks
    std::vector<size_t> sp, sq;
    for (Mask c : dp.components) sp.push_back(mask_vertices(c).size());
    for (Mask c : dq.components) sq.push_back(mask_vertices(c).size());
    std::sort(sp.begin(), sp.end());
    std::sort(sq.begin(), sq.end());
    if (sp != sq) return std::nullopt;
  }
  if (fc_abelianization(p.z) != fc_abelianization(q.z)) return std::nullopt;

  std::vector<FcWordPtr> qzs;
  for (Mask c : dq.components) qzs.push_back(conj_by(q.g, z_of_standard(c)));
  // a bijective match of component z's forces equality of the subgroups
  auto matches = [&](const std::vector<FcWordPtr>& cz) {
    std::vector<char> used(qzs.size(), 0);
    for (const FcWordPtr& a : cz) {
      bool ok = false;
      for (size_t j = 0; j < qzs.size(); ++j) {
        if (used[j]) continue;
        if (fc_equal(a, qzs[j])) {
          used[j] = 1;
          ok = true;
          break;
        }
      }
      if (!ok) return false;
    }
    return true;
  };

  Mask full = gr.full_mask();
  std::vector<std::vector<SignedLetter>> words{{}};
  std::vector<std::vector<FcWordPtr>> czs;
  {
    std::vector<FcWordPtr> base;
    for (Mask c : dp.components) base.push_back(conj_by(p.g, z_of_standard(c)));
    if (matches(base)) return fc_identity(fc_->node(full));
    czs.push_back(std::move(base));
  }
  size_t lo = 0, hi = 1;
  for (int len = 1; len <= bound; ++len) {
    for (size_t i = lo; i < hi; ++i)
      for (int v = 0; v < gr.rank(); ++v)
        for (int sg : {1, -1}) {
          std::vector<SignedLetter> w = words[i];
          if (!w.empty() && w.back().first == v && w.back().second == -sg) continue;
          w.push_back({v, sg});
          FcWordPtr l = fc_from_word(*fc_, full, {{v, sg}});
          FcWordPtr li = fc_inverse(l);
          std::vector<FcWordPtr> cz;
          cz.reserve(czs[i].size());
          for (const FcWordPtr& a : czs[i]) cz.push_back(fc_mult(fc_mult(li, a), l));
          bool hit = matches(cz);
          words.push_back(std::move(w));
          czs.push_back(std::move(cz));
          if (hit) return fc_from_word(*fc_, full, words.back());
        }
    lo = hi;
    hi = words.size();
  }
  return std::nullopt;
}

ParabolicContext::Adjacency ParabolicContext::is_adjacent(const Parabolic& p, const Parabolic& q) {
  Mask full = fc_->graph().full_mask();
  if (!p.irreducible || !q.irreducible || p.x == full || q.x == full)
    throw Error("adjacency needs proper irreducible spherical parabolics");
  Adjacency out;
  out.adjacent = fc_equal(fc_mult(p.z, q.z), fc_mult(q.z, p.z));
  if (!out.adjacent) return out;
  if (p.key == q.key) {
    out.witness = "equal";
    return out;
  }
  if (contains(q, p) || contains(p, q)) {
    out.witness = "inclusion";
    return out;
  }
  std::vector<FcWordPtr> gp = generators(p), gq = generators(q);
  for (const FcWordPtr& a : gp)
    for (const FcWordPtr& b : gq)
      if (!fc_equal(fc_mult(a, b), fc_mult(b, a))) return out;  // adjacent, unwitnessed
  for (const FcWordPtr& a : gp)
    if (member(a, q)) return out;
  for (const FcWordPtr& b : gq)
    if (member(b, p)) return out;
  out.witness = "commute-disjoint";
  return out;
}

Parabolic ParabolicContext::minimal_parabolic(const FcWordPtr& alpha0, int bound,
                                              const std::optional<Parabolic>& witness) {
  const DefiningGraph& gr = fc_->graph();
  Mask full = gr.full_mask();
  const FcNode* fnode = fc_->node(full);
  FcWordPtr alpha = alpha0->node == fnode ? alpha0 : fc_convert(alpha0, fnode);
  if (witness && !member(alpha, *witness))
    throw Error("witness parabolic does not contain the element");
  if (fc_trivial(alpha)) return make_standard(0);

  std::vector<Mask> sphericals;
  for (Mask y : spherical_subsets(gr))
    if (y != 0) sphericals.push_back(y);
  std::sort(sphericals.begin(), sphericals.end(), [](Mask a, Mask b) {
    size_t pa = mask_vertices(a).size(), pb = mask_vertices(b).size();
    return std::tie(pa, a) < std::tie(pb, b);
  });

  struct Cand {
    size_t pc;
    long long hidx;
    Mask x;
    Parabolic p;
  };
  std::vector<Cand> cands;
  std::set<std::string> seen;
  // alpha lies in h A_Y h^{-1} iff h^{-1} alpha h lies in A_Y
  auto consider = [&](const std::vector<SignedLetter>& hword, const FcWordPtr& beta,
                      long long hidx) {
    std::string bkey = fc_cox_key(beta);
    FcWordPtr h;
    for (Mask y : sphericals) {
      if (coxeter_keys(y).count(bkey) == 0) continue;
      if (!fc_member(beta, y)) continue;
      if (!h) h = fc_from_word(*fc_, full, hword);
      Parabolic c = make(h, y);
      if (seen.insert(c.key).second)
        cands.push_back({mask_vertices(y).size(), hidx, y, std::move(c)});
    }
  };

  std::vector<std::vector<SignedLetter>> words{{}};
  std::vector<FcWordPtr> betas{alpha};
  long long hidx = 0;
  consider(words[0], alpha, hidx++);
  size_t lo = 0, hi = 1;
  for (int len = 1; len <= bound; ++len) {
    for (size_t i = lo; i < hi; ++i)
      for (int v = 0; v < gr.rank(); ++v)
        for (int sg : {1, -1}) {
          std::vector<SignedLetter> w = words[i];
          if (!w.empty() && w.back().first == v && w.back().second == -sg) continue;
          w.push_back({v, sg});
          FcWordPtr l = fc_from_word(*fc_, full, {{v, sg}});
          FcWordPtr beta = fc_mult(fc_mult(fc_inverse(l), betas[i]), l);
          words.push_back(std::move(w));
          betas.push_back(beta);
          consider(words.back(), beta, hidx++);
        }
    lo = hi;
    hi = words.size();
  }

  if (witness) {
    FcWordPtr beta = fc_mult(fc_mult(fc_inverse(witness->g), alpha), witness->g);
    std::string bkey = fc_cox_key(beta);
    for (Mask y : sphericals) {
      if ((y & ~witness->x) != 0) continue;
      if (coxeter_keys(y).count(bkey) == 0) continue;
      if (!fc_member(beta, y)) continue;
      Parabolic c = make(witness->g, y);
      if (seen.insert(c.key).second)
        cands.push_back({mask_vertices(y).size(), kWitnessIdx, y, std::move(c)});
    }
  }

  if (cands.empty())
    throw Error("no spherical parabolic containing the element found within the bound");
  std::stable_sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
    return std::tie(a.pc, a.hidx, a.x) < std::tie(b.pc, b.hidx, b.x);
  });
  for (const Cand& c : cands) {
    bool minimal = true;
    for (const Cand& d : cands) {
      if (&d == &c) continue;
      if (!contains(d.p, c.p)) {
        minimal = false;
        break;
      }
    }
    if (minimal) return c.p;
  }
  throw Error("bounded search could not certify a minimal parabolic");
}

ParabolicContext::IntersectResult ParabolicContext::intersect(const Parabolic& p,
                                                              const Parabolic& q, int budget,
                                                              unsigned seed) {
  IntersectResult res;
  if (p.key == q.key) {
    res.r = p;
    res.containment = true;
    res.saturation = true;
    res.mode = "equal";
    return res;
  }
  if (fc_trivial(p.g) && fc_trivial(q.g)) {
    res.r = make_standard(p.x & q.x);
    res.mode = "standard";
  } else if (fc_equal(p.g, q.g)) {
    res.r = make(p.g, p.x & q.x);
    res.mode = "same-conjugator";
  }
  if (!res.mode.empty()) {
    res.containment = contains(p, res.r) && contains(q, res.r);
    res.saturation = true;
    return res;
  }

  res.mode = "sampled";
  const FcNode* fnode = fc_->node(fc_->graph().full_mask());
  std::vector<FcWordPtr> commons;
  std::map<std::string, std::vector<size_t>> dedupe;
  auto add_common = [&](const FcWordPtr& w) {
    if (fc_trivial(w)) return;
    std::string b = invariant_bucket(w);
    for (size_t i : dedupe[b])
      if (fc_equal(commons[i], w)) return;
    dedupe[b].push_back(commons.size());
    commons.push_back(w);
  };
  if (member(p.z, q)) add_common(p.z);
  if (member(q.z, p)) add_common(q.z);

  auto ball_side = [&](const Parabolic& from, const Parabolic& other, unsigned salt) {
    std::vector<FcWordPtr> gens = generators(from);
    int m = static_cast<int>(gens.size());
    if (m == 0) return;
    std::vector<FcWordPtr> letters = gens;
    for (const FcWordPtr& g2 : gens) letters.push_back(fc_inverse(g2));
    int k = 2 * m;
    auto invid = [m](int i) { return i < m ? i + m : i - m; };
    long long est = 0, layer = 1;
    for (int d = 1; d <= budget && est <= kBallCap; ++d) {
      layer *= (d == 1 ? k : k - 1);
      est += layer;
    }
    if (est <= kBallCap) {
      struct NodeB {
        FcWordPtr w;
        int last;
      };
      std::vector<NodeB> cur{{fc_identity(fnode), -1}};
      for (int d = 1; d <= budget; ++d) {
        std::vector<NodeB> nxt;
        for (const NodeB& nb : cur)
          for (int i = 0; i < k; ++i) {
            if (nb.last >= 0 && i == invid(nb.last)) continue;
            FcWordPtr w = fc_mult(nb.w, letters[i]);
            if (member(w, other)) add_common(w);
            nxt.push_back({w, i});
          }
        cur = std::move(nxt);
      }
    } else {
      std::mt19937 rng(seed + salt);
      std::uniform_int_distribution<int> dlen(1, budget), dletter(0, k - 1);
      for (int draw = 0; draw < kSampleDraws; ++draw) {
        int len = dlen(rng);
        FcWordPtr w = fc_identity(fnode);
        int last = -1;
        for (int d = 0; d < len; ++d) {
          int i = dletter(rng);
          while (last >= 0 && i == invid(last)) i = dletter(rng);
          w = fc_mult(w, letters[i]);
          last = i;
        }
        if (member(w, other)) add_common(w);
      }
    }
  };
  ball_side(p, q, 0);
  ball_side(q, p, 1);
  res.samples = static_cast<long long>(commons.size());

  if (commons.empty()) {
    res.r = make_standard(0);
    res.containment = true;
    res.saturation = true;
    return res;
  }

  int inner = std::max(1, budget - 2);
  std::vector<Parabolic> cands;
  std::set<std::string> ckeys;
  auto add_cand = [&](const FcWordPtr& w) {
    if (static_cast<int>(cands.size()) >= kMaxCandidates || fc_trivial(w)) return;
    try {
      Parabolic c = minimal_parabolic(w, inner, p);
      if (ckeys.insert(c.key).second) cands.push_back(std::move(c));
    } catch (const Error&) {
      // certification failed for this sample; other candidates may still work
    }
  };
  for (size_t i = 0; i < commons.size(); ++i) add_cand(commons[i]);
  for (size_t i = 0; i < commons.size() && i < 5; ++i)
    for (size_t j = i + 1; j < commons.size() && j < 5; ++j)
      add_cand(fc_mult(commons[i], commons[j]));

  std::vector<Parabolic> cert;
  for (const Parabolic& c : cands)
    if (contains(p, c) && contains(q, c)) cert.push_back(c);
  if (cert.empty()) throw Error("budget exhausted without a candidate satisfying (i)");

  std::vector<char> dominated(cert.size(), 0);
  for (size_t i = 0; i < cert.size(); ++i)
    for (size_t j = 0; j < cert.size() && !dominated[i]; ++j) {
      if (i == j || cert[i].key == cert[j].key) continue;
      if (contains(cert[j], cert[i])) dominated[i] = 1;
    }
  size_t pick = 0;
  for (size_t i = 0; i < cert.size(); ++i)
    if (!dominated[i]) {
      pick = i;
      break;
    }
  res.r = cert[pick];
  res.containment = true;
  res.saturation = true;
  for (const FcWordPtr& w : commons)
    if (!member(w, res.r)) {
      res.saturation = false;
      break;
    }
  return res;
}

std::string ParabolicContext::to_json(const Parabolic& p) {
  Json j;
  j["key"] = p.key;
  j["conjugator"] = fc_str(p.g);
  Json names = Json::array();
  for (int v : mask_vertices(p.x)) names.push_back(fc_->graph().vertices[v]);
  j["standard_part"] = names;
  j["irreducible"] = p.irreducible;
  return j.dump();
}

Parabolic ParabolicContext::from_json(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object() || !j.contains("key") || !j.contains("conjugator") ||
      !j.contains("standard_part"))
    throw Error("bad parabolic JSON");
  std::vector<std::string> names;
  for (const auto& n : j["standard_part"]) names.push_back(n.get<std::string>());
  Mask x = mask_of(fc_->graph(), names);
  FcWordPtr g = fc_parse(*fc_, fc_->graph().full_mask(), j["conjugator"].get<std::string>());
  std::string stored = j["key"].get<std::string>();
  if (x != 0) {
    // adopt the stored names for classes this context has not seen yet, so
    // keys survive a round trip; classes named earlier keep their names
    std::vector<std::string> parts = split_key(stored);
    std::sort(parts.begin(), parts.end());
    Decomposition dec = decompose(fc_->graph(), x);
    if (parts.size() == dec.components.size())
      for (size_t i = 0; i < parts.size(); ++i)
        intern(conj_by(g, z_of_standard(dec.components[i])), &parts[i]);
  }
  Parabolic p = make(g, x);
  if (j.contains("irreducible") && j["irreducible"].get<bool>() != p.irreducible)
    throw Error("inconsistent parabolic JSON: irreducible flag");
  return p;
}

std::string ParabolicContext::to_json(const IntersectResult& r) {
  Json j;
  j["mode"] = r.mode;
  j["containment"] = r.containment;
  j["saturation"] = r.saturation;
  j["samples"] = r.samples;
  j["result"] = Json::parse(to_json(r.r));
  return j.dump();
}

bool is_normalizer(const FcContext& fc, const FcWordPtr& h, Mask x) {
  Mask full = fc.graph().full_mask();
  FcWordPtr hi = fc_inverse(h);
  for (int v : mask_vertices(x)) {
    FcWordPtr s = fc_from_word(fc, full, {{v, 1}});
    if (!fc_member(fc_mult(fc_mult(h, s), hi), x)) return false;
    if (!fc_member(fc_mult(fc_mult(hi, s), h), x)) return false;
  }
  return true;
}

}  // namespace artin
