#include "artin/fc.hpp"

#include <bit>
#include <cstdlib>
#include <utility>

namespace artin {

namespace {

ArtinElement embed(const GarsideContext& big, const Chunk& ch) {
  return artin_from_word(big, artin_word(ch.val));
}

ArtinElement apow(const GarsideContext& c, int v, long long k) {
  ArtinElement r = artin_identity(c);
  if (k == 0) return r;
  ArtinElement g = artin_generator(c, v, k > 0 ? 1 : -1);
  for (long long i = 0; i < std::llabs(k); ++i) r = mult(r, g);
  return r;
}

}  // namespace

FcContext::FcContext(const DefiningGraph& g) : g_(&g) {
  if (!is_fc_type(g)) throw Error("defining graph is not FC-type");
}

const GarsideContext& FcContext::garside(Mask clique) const {
  auto it = gar_.find(clique);
  if (it != gar_.end()) return *it->second;
  if (!is_clique(*g_, clique)) throw Error("not a clique subset");
  auto ptr = std::make_unique<GarsideContext>(*g_, clique);
  const GarsideContext& ref = *ptr;
  gar_.emplace(clique, std::move(ptr));
  return ref;
}

const FcNode* FcContext::node(Mask m) const {
  if ((m & ~g_->full_mask()) != 0) throw Error("subset outside the graph");
  if (is_clique(*g_, m)) return node(m, -1, -1);
  std::vector<int> vs = mask_vertices(m);
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = i + 1; j < vs.size(); ++j)
      if (g_->label(vs[i], vs[j]) == kInfLabel) return node(m, vs[i], vs[j]);
  throw Error("internal: non-clique subset without a non-adjacent pair");
}

const FcNode* FcContext::node(Mask m, int s, int t) const {
  auto key = std::make_tuple(m, s, t);
  auto it = nodes_.find(key);
  if (it != nodes_.end()) return it->second.get();
  auto n = std::make_unique<FcNode>();
  n->fc = this;
  n->mask = m;
  if (s < 0) {
    n->leaf = true;
    n->gar = &garside(m);
  } else {
    if (s == t || ((m >> s) & 1) == 0 || ((m >> t) & 1) == 0 ||
        g_->label(s, t) != kInfLabel)
      throw Error("invalid split pair");
    n->s = s;
    n->t = t;
    n->zmask = m & ~(Mask(1) << s) & ~(Mask(1) << t);
  }
  FcNode* raw = n.get();
  nodes_.emplace(key, std::move(n));
  if (!raw->leaf) {
    raw->factor0 = node(m & ~(Mask(1) << s));
    raw->factor1 = node(m & ~(Mask(1) << t));
    raw->znode = node(raw->zmask);
  }
  return raw;
}

std::vector<Chunk> make_chunks(const FcContext& fc, const ArtinElement& a) {
  if (a.is_identity()) return {};
  Fraction f = reduced_fraction(a);
  Mask supp = 0;
  for (const SignedLetter& l : artin_word(f.den)) supp |= Mask(1) << l.first;
  for (const SignedLetter& l : artin_word(f.num)) supp |= Mask(1) << l.first;
  const GarsideContext& c = fc.garside(supp);
  return {Chunk{supp, artin_from_word(c, artin_word(a))}};
}

FcWordPtr fc_identity(const FcNode* n) {
  auto w = std::make_shared<FcWord>();
  w->node = n;
  if (n->leaf) {
    w->leafval = artin_identity(*n->gar);
  } else {
    w->c0 = fc_identity(n->znode);
  }
  return w;
}

namespace {

void flatten_into(const FcWordPtr& w, std::vector<Chunk>& out) {
  if (w->node->leaf) {
    std::vector<Chunk> c = make_chunks(*w->node->fc, *w->leafval);
    out.insert(out.end(), c.begin(), c.end());
    return;
  }
  flatten_into(w->c0, out);
  for (const FcSyllable& s : w->syl) flatten_into(s.w, out);
}

}  // namespace

std::vector<Chunk> fc_flatten(const FcWordPtr& w) {
  std::vector<Chunk> out;
  flatten_into(w, out);
  return out;
}

FcWordPtr fc_feed(const FcWordPtr& w, const std::vector<Chunk>& chunks) {
  const FcNode* n = w->node;
  if (n->leaf) {
    ArtinElement v = *w->leafval;
    for (const Chunk& ch : chunks) {
      if ((ch.support & ~n->mask) != 0) throw Error("chunk outside the node subset");
      v = mult(v, embed(*n->gar, ch));
    }
    auto r = std::make_shared<FcWord>();
    r->node = n;
    r->leafval = std::move(v);
    return r;
  }
  FcWordPtr c0 = w->c0;
  std::vector<FcSyllable> syl = w->syl;
  for (const Chunk& ch : chunks) {
    if ((ch.support & ~n->mask) != 0) throw Error("chunk outside the node subset");
    if ((ch.support & ~n->zmask) == 0) {
      // lies in the edge subgroup: absorb without changing the block count
      if (syl.empty())
        c0 = fc_feed(c0, {ch});
      else
        syl.back().w = fc_feed(syl.back().w, {ch});
      continue;
    }
    int side = ((ch.support >> n->s) & 1) ? 1 : 0;
    if (!syl.empty() && syl.back().side == side) {
      syl.back().w = fc_feed(syl.back().w, {ch});
      // the merged block may have fallen into the edge subgroup: collapse
      auto carry = fc_try_into(syl.back().w, n->zmask);
      if (carry) {
        syl.pop_back();
        if (syl.empty())
          c0 = fc_feed(c0, *carry);
        else
          syl.back().w = fc_feed(syl.back().w, *carry);
      }
    } else {
      syl.push_back({side, fc_feed(fc_identity(n->factor(side)), {ch})});
    }
  }
  auto r = std::make_shared<FcWord>();
  r->node = n;
  r->c0 = std::move(c0);
  r->syl = std::move(syl);
  return r;
}

FcWordPtr fc_from_word(const FcContext& fc, Mask m, const std::vector<SignedLetter>& word) {
  std::vector<Chunk> chunks;
  chunks.reserve(word.size());
  for (const SignedLetter& l : word) {
    if (((m >> l.first) & 1) == 0) throw Error("letter outside the subset");
    Mask vm = Mask(1) << l.first;
    chunks.push_back({vm, artin_generator(fc.garside(vm), l.first, l.second)});
  }
  return fc_feed(fc_identity(fc.node(m)), chunks);
}

FcWordPtr fc_mult(const FcWordPtr& a, const FcWordPtr& b) {
  if (a->node != b->node) throw Error("ambient subset mismatch");
  return fc_feed(a, fc_flatten(b));
}

FcWordPtr fc_inverse(const FcWordPtr& a) {
  std::vector<Chunk> ch = fc_flatten(a);
  std::vector<Chunk> rev;
  rev.reserve(ch.size());
  for (size_t i = ch.size(); i-- > 0;) rev.push_back({ch[i].support, inverse(ch[i].val)});
  return fc_feed(fc_identity(a->node), rev);
}

bool fc_trivial(const FcWordPtr& w) {
  if (w->node->leaf) return w->leafval->is_identity();
  return w->syl.empty() && fc_trivial(w->c0);
}

namespace {

bool struct_eq(const FcWordPtr& a, const FcWordPtr& b) {
  if (a->node != b->node) return false;
  if (a->node->leaf) return equal(*a->leafval, *b->leafval);
  if (a->syl.size() != b->syl.size()) return false;
  if (!struct_eq(a->c0, b->c0)) return false;
  for (size_t i = 0; i < a->syl.size(); ++i) {
    if (a->syl[i].side != b->syl[i].side) return false;
    if (!struct_eq(a->syl[i].w, b->syl[i].w)) return false;
  }
  return true;
}

}  // namespace

bool fc_equal(const FcWordPtr& a, const FcWordPtr& b) {
  if (a->node != b->node) throw Error("ambient subset mismatch");
  if (struct_eq(a, b)) return true;
  if (!a->node->leaf) {
    // block count and side sequence are invariants of the element
    if (a->syl.size() != b->syl.size()) return false;
    for (size_t i = 0; i < a->syl.size(); ++i)
      if (a->syl[i].side != b->syl[i].side) return false;
  }
  return fc_trivial(fc_mult(a, fc_inverse(b)));
}

namespace {

/* Does an element of the dihedral group on {c,g} have the shape c^j g^a?
   Even label: the per-generator exponent sums determine (j,a) outright.
   Odd label: only j+a is invariant; the Garside normal form of c^j g^a has,
   in every sign pattern, either |a| = |inf| or |a| <= canonical length + 1,
   so scanning |a| <= |p| + l + 1 with j = (j+a) - a is exhaustive.  Each
   candidate is confirmed by exact normal-form equality, so a returned shape
   is always sound. */
std::optional<std::pair<long long, long long>> peel_solve(const FcContext& fc,
                                                          const ArtinElement& r,
                                                          int c, int g) {
  const GarsideContext& ctx = *r.ctx;
  std::vector<long long> e = exponent_vector(r);
  long long ec = e[c], eg = e[g];
  int m = fc.graph().label(c, g);
  auto matches = [&](long long j, long long a) {
    return equal(r, mult(apow(ctx, c, j), apow(ctx, g, a)));
  };
  if (m % 2 == 0) {
    if (matches(ec, eg)) return std::make_pair(ec, eg);
    return std::nullopt;
  }
  long long tot = ec + eg;
  long long bound = std::llabs(r.p) + static_cast<long long>(r.xs.size()) + 1;
  for (long long a = -bound; a <= bound; ++a)
    if (matches(tot - a, a)) return std::make_pair(tot - a, a);
  return std::nullopt;
}

/* Membership of a P3-machine element (mask {x,c,y}, pair (x,y), cone vertex
   c) in the free subgroup <x,y>: peel blocks from the right.  If w lies in
   <x,y> the amalgam normal form theorem forces the last block to be
   c^j g^a with g the block-side generator; peeling g^a off keeps membership
   and drops the block count, so the loop certifies membership exactly. */
std::optional<std::vector<Chunk>> peel_p3(const FcWordPtr& w) {
  const FcNode* n = w->node;
  const FcContext& fc = *n->fc;
  int c = mask_vertices(n->zmask)[0];
  std::vector<Chunk> out;
  FcWordPtr cur = w;
  while (!cur->syl.empty()) {
    const FcSyllable& last = cur->syl.back();
    int g = last.side == 0 ? n->t : n->s;  // side 0 excludes s
    const ArtinElement& r = *last.w->leafval;
    auto ja = peel_solve(fc, r, c, g);
    if (!ja) return std::nullopt;
    auto [j, a] = *ja;
    if (a != 0) {
      Mask gm = Mask(1) << g;
      out.insert(out.begin(), Chunk{gm, apow(fc.garside(gm), g, a)});
    }
    FcWord next = *cur;
    next.syl.pop_back();
    FcWordPtr nx = std::make_shared<FcWord>(std::move(next));
    if (j != 0) {
      Mask cm = Mask(1) << c;
      nx = fc_feed(nx, {Chunk{cm, apow(fc.garside(cm), c, j)}});
    }
    cur = nx;
  }
  if (!fc_trivial(cur->c0)) return std::nullopt;
  return out;
}

}  // namespace

std::optional<std::vector<Chunk>> fc_try_into(const FcWordPtr& w, Mask target) {
  const FcNode* n = w->node;
  Mask t = target & n->mask;
  if (t == n->mask) return fc_flatten(w);
  if (n->leaf) {
    if (!garside_membership(*w->leafval, t)) return std::nullopt;
    return make_chunks(*n->fc, *w->leafval);
  }
  const FcContext& fc = *n->fc;
  Mask missing = n->mask & ~t;
  // removing a splitting-pair vertex: the block count criterion decides
  for (int v : {n->s, n->t}) {
    if (((missing >> v) & 1) == 0) continue;
    int keep_side = (v == n->s) ? 0 : 1;
    if (w->syl.empty()) return fc_try_into(w->c0, t);
    if (w->syl.size() > 1 || w->syl[0].side != keep_side) return std::nullopt;
    if (fc_trivial(w->c0)) return fc_try_into(w->syl[0].w, t);
    std::vector<Chunk> chunks = fc_flatten(w->c0);
    std::vector<Chunk> more = fc_flatten(w->syl[0].w);
    chunks.insert(chunks.end(), more.begin(), more.end());
    Mask keep = n->mask & ~(Mask(1) << v);
    return fc_try_into(fc_feed(fc_identity(fc.node(keep)), chunks), t);
  }
  // both pair vertices stay: re-split along a pair containing a missing vertex
  for (int v : mask_vertices(missing)) {
    for (int d : mask_vertices(n->mask & ~(Mask(1) << v))) {
      if (fc.graph().label(v, d) == kInfLabel) {
        FcWordPtr q = fc_feed(fc_identity(fc.node(n->mask, v, d)), fc_flatten(w));
        return fc_try_into(q, t);
      }
    }
  }
  // every missing vertex is adjacent to the whole rest of the subset
  if (std::popcount(n->mask) == 3) return peel_p3(w);
  throw Unsupported("parabolic membership through a cone vertex of " +
                    subset_str(fc.graph(), n->mask) + " is outside the implemented fragment");
}

bool fc_member(const FcWordPtr& w, Mask target) { return fc_try_into(w, target).has_value(); }

FcWordPtr fc_convert(const FcWordPtr& w, const FcNode* target) {
  auto ch = fc_try_into(w, target->mask);
  if (!ch) throw Error("element does not lie in the requested standard parabolic");
  return fc_feed(fc_identity(target), *ch);
}

long long fc_syllable_count(const FcWordPtr& w) {
  if (w->node->leaf) return 0;
  return static_cast<long long>(w->syl.size());
}

std::vector<long long> fc_abelianization(const FcWordPtr& w) {
  const DefiningGraph& g = w->node->fc->graph();
  int n = g.rank();
  // odd labels identify the two generators in the abelianization
  std::vector<int> cls(n);
  for (int i = 0; i < n; ++i) cls[i] = i;
  auto root = [&](int v) {
    while (cls[v] != v) v = cls[v] = cls[cls[v]];
    return v;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.label(i, j) != kInfLabel && g.label(i, j) % 2 == 1) cls[root(i)] = root(j);
  std::vector<long long> sums(n, 0);
  for (const Chunk& ch : fc_flatten(w)) {
    std::vector<long long> ce = exponent_vector(ch.val);
    for (int i = 0; i < n; ++i) sums[root(i)] = chk_add(sums[root(i)], ce[i]);
  }
  std::vector<long long> e(n, 0);
  for (int i = 0; i < n; ++i) e[i] = sums[root(i)];
  return e;
}

std::string fc_cox_key(const FcWordPtr& w) {
  CoxMatrix m(w->node->fc->graph());
  for (const Chunk& ch : fc_flatten(w))
    for (const SignedLetter& l : artin_word(ch.val)) m.apply_right(l.first);
  return m.key();
}

Mask fc_letter_support(const FcWordPtr& w) {
  Mask m = 0;
  for (const Chunk& ch : fc_flatten(w)) m |= ch.support;
  return m;
}

}  // namespace artin
