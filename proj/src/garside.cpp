#include "artin/garside.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace artin {

namespace {

void check_same_ctx(const ArtinElement& a, const ArtinElement& b) {
  if (a.ctx != b.ctx) throw Error("ambient subset mismatch");
}

// stabilize a raw simple sequence into left-weighted form, collect Delta's, drop trivials
ArtinElement normalize(const GarsideContext& c, long long p, std::vector<int> xs) {
  const CoxTable& W = c.W();
  if (W.rank() == 0) return ArtinElement{&c, 0, {}};
  const int w0 = W.w0();
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < xs.size(); ++i) {
      int a = xs[i], b = xs[i + 1];
      while (true) {
        uint32_t m = W.left_descents(b) & ~W.right_descents(a);
        if (m == 0) break;
        int s = std::countr_zero(m);
        a = W.right(a, s);
        b = W.left(b, s);
        changed = true;
      }
      xs[i] = a;
      xs[i + 1] = b;
    }
  }
  size_t head = 0;
  while (head < xs.size() && xs[head] == w0) {
    ++head;
    ++p;
  }
  std::vector<int> out;
  for (size_t i = head; i < xs.size(); ++i)
    if (xs[i] != 0) out.push_back(xs[i]);
  return ArtinElement{&c, p, std::move(out)};
}

int tau_pow(const CoxTable& W, int x, long long k) {
  return (k % 2 == 0) ? x : W.tau(x);
}

}  // namespace

ArtinElement artin_identity(const GarsideContext& c) { return ArtinElement{&c, 0, {}}; }

ArtinElement artin_delta(const GarsideContext& c, long long power) {
  if (c.W().rank() == 0) return artin_identity(c);
  return ArtinElement{&c, power, {}};
}

ArtinElement artin_simple(const GarsideContext& c, int widx) {
  return normalize(c, 0, {widx});
}

ArtinElement artin_generator(const GarsideContext& c, int vertex, int sign) {
  const CoxTable& W = c.W();
  int g = W.gen(W.local_of_vertex(vertex));
  if (sign > 0) return ArtinElement{&c, 0, {g}};
  // s^{-1} = Delta^{-1} * lift(w0 s)
  int y = W.mult(W.w0(), g);
  return normalize(c, -1, {y});
}

ArtinElement artin_from_word(const GarsideContext& c, const std::vector<SignedLetter>& word) {
  ArtinElement r = artin_identity(c);
  for (auto [v, sg] : word) r = mult(r, artin_generator(c, v, sg));
  return r;
}

ArtinElement mult(const ArtinElement& a, const ArtinElement& b) {
  check_same_ctx(a, b);
  const CoxTable& W = a.ctx->W();
  std::vector<int> xs;
  xs.reserve(a.xs.size() + b.xs.size());
  for (int x : a.xs) xs.push_back(tau_pow(W, x, b.p));
  for (int x : b.xs) xs.push_back(x);
  return normalize(*a.ctx, a.p + b.p, std::move(xs));
}

ArtinElement inverse(const ArtinElement& a) {
  const GarsideContext& c = *a.ctx;
  const CoxTable& W = c.W();
  ArtinElement r = artin_identity(c);
  for (size_t i = a.xs.size(); i-- > 0;) {
    // lift(u)^{-1} = Delta^{-1} * lift(w0 u^{-1})
    int y = W.mult(W.w0(), W.inverse(a.xs[i]));
    r = mult(r, ArtinElement{&c, -1, {y}});
  }
  return mult(r, artin_delta(c, -a.p));
}

bool equal(const ArtinElement& a, const ArtinElement& b) {
  check_same_ctx(a, b);
  return a.p == b.p && a.xs == b.xs;
}

bool left_weighted(const ArtinElement& a) {
  const CoxTable& W = a.ctx->W();
  for (int x : a.xs)
    if (x == 0 || (W.rank() > 0 && x == W.w0())) return false;
  for (size_t i = 0; i + 1 < a.xs.size(); ++i) {
    uint32_t need = W.left_descents(a.xs[i + 1]);
    if ((W.right_descents(a.xs[i]) & need) != need) return false;
  }
  return true;
}

namespace {

// mask of atoms (local) left-dividing a positive element
uint32_t initial_atoms(const ArtinElement& a) {
  const CoxTable& W = a.ctx->W();
  if (a.p > 0) return (uint32_t(1) << W.rank()) - 1;
  if (a.xs.empty()) return 0;
  return W.left_descents(a.xs[0]);
}

// divide a positive element by an atom on the left
ArtinElement atom_left_divide(const ArtinElement& a, int s) {
  const GarsideContext& c = *a.ctx;
  const CoxTable& W = c.W();
  if (a.p > 0) {
    int z = W.mult(W.gen(s), W.w0());  // s^{-1} Delta = lift(s w0)
    std::vector<int> xs{tau_pow(W, z, a.p - 1)};
    xs.insert(xs.end(), a.xs.begin(), a.xs.end());
    return normalize(c, a.p - 1, std::move(xs));
  }
  std::vector<int> xs = a.xs;
  xs[0] = W.left(xs[0], s);
  return normalize(c, 0, std::move(xs));
}

}  // namespace

ArtinElement left_gcd(const ArtinElement& a0, const ArtinElement& b0) {
  check_same_ctx(a0, b0);
  if (!a0.is_positive() || !b0.is_positive()) throw Error("lattice operations need positive elements");
  ArtinElement a = a0, b = b0;
  std::vector<int> letters;
  while (true) {
    uint32_t common = initial_atoms(a) & initial_atoms(b);
    if (common == 0) break;
    int s = std::countr_zero(common);
    letters.push_back(s);
    a = atom_left_divide(a, s);
    b = atom_left_divide(b, s);
  }
  const CoxTable& W = a0.ctx->W();
  std::vector<int> xs;
  xs.reserve(letters.size());
  for (int s : letters) xs.push_back(W.gen(s));
  return normalize(*a0.ctx, 0, std::move(xs));
}

ArtinElement rev(const ArtinElement& a) {
  const CoxTable& W = a.ctx->W();
  std::vector<int> xs;
  xs.reserve(a.xs.size());
  for (size_t i = a.xs.size(); i-- > 0;) xs.push_back(tau_pow(W, W.inverse(a.xs[i]), a.p));
  return normalize(*a.ctx, a.p, std::move(xs));
}

ArtinElement right_gcd(const ArtinElement& a, const ArtinElement& b) {
  return rev(left_gcd(rev(a), rev(b)));
}

ArtinElement left_lcm(const ArtinElement& a, const ArtinElement& b) {
  check_same_ctx(a, b);
  if (!a.is_positive() || !b.is_positive()) throw Error("lattice operations need positive elements");
  long long n = std::max(std::max(a.sup(), b.sup()), 0LL);
  ArtinElement dn = artin_delta(*a.ctx, n);
  ArtinElement u = right_gcd(mult(inverse(a), dn), mult(inverse(b), dn));
  return mult(dn, inverse(u));
}

bool left_divides(const ArtinElement& a, const ArtinElement& b) {
  return mult(inverse(a), b).is_positive();
}

Fraction reduced_fraction(const ArtinElement& a) {
  const GarsideContext& c = *a.ctx;
  if (a.is_positive()) return {artin_identity(c), a};
  long long twok = ((-a.p) % 2 == 0) ? -a.p : -a.p + 1;
  ArtinElement dn = artin_delta(c, twok);
  ArtinElement pos = mult(dn, a);
  ArtinElement g = left_gcd(dn, pos);
  ArtinElement den = mult(inverse(g), dn);
  ArtinElement num = mult(inverse(g), pos);
  if (!den.is_positive() || !num.is_positive()) throw Error("internal: fraction parts not positive");
  return {den, num};
}

namespace {

Mask support_positive(const ArtinElement& a) {
  const CoxTable& W = a.ctx->W();
  if (a.p > 0) return W.subset();
  Mask m = 0;
  for (int x : a.xs)
    for (uint8_t s : W.word(x)) m |= Mask(1) << W.vertex_of_local(s);
  return m;
}

}  // namespace

bool garside_membership(const ArtinElement& a, Mask x) {
  const CoxTable& W = a.ctx->W();
  if ((x & ~W.subset()) != 0) throw Error("target subset not inside the ambient subset");
  Fraction f = reduced_fraction(a);
  return (support_positive(f.den) & ~x) == 0 && (support_positive(f.num) & ~x) == 0;
}

std::vector<SignedLetter> artin_word(const ArtinElement& a) {
  const CoxTable& W = a.ctx->W();
  std::vector<SignedLetter> out;
  auto push_simple = [&](int e) {
    for (uint8_t s : W.word(e)) out.push_back({W.vertex_of_local(s), 1});
  };
  if (a.p < 0) {
    // write as den^{-1} num; both parts are positive
    Fraction f = reduced_fraction(a);
    std::vector<SignedLetter> d = artin_word(f.den);
    for (auto it = d.rbegin(); it != d.rend(); ++it) out.push_back({it->first, -1});
    std::vector<SignedLetter> n = artin_word(f.num);
    out.insert(out.end(), n.begin(), n.end());
    return out;
  }
  for (long long i = 0; i < a.p; ++i) push_simple(W.w0());
  for (int xi : a.xs) push_simple(xi);
  return out;
}

std::vector<SignedLetter> word_in_subset(const ArtinElement& a, Mask x) {
  if (!garside_membership(a, x)) throw Error("element not in the requested standard parabolic");
  return artin_word(a);
}

ArtinElement parabolic_delta(const GarsideContext& c, Mask x) {
  const CoxTable& W = c.W();
  if ((x & ~W.subset()) != 0) throw Error("subset not contained in ambient");
  uint32_t local = 0;
  for (int v : mask_vertices(x)) local |= uint32_t(1) << W.local_of_vertex(v);
  return artin_simple(c, W.parabolic_w0(local));
}

int parabolic_center_exponent(const GarsideContext& c, Mask x) {
  const CoxTable& W = c.W();
  if (x == 0) return 1;
  uint32_t local = 0;
  for (int v : mask_vertices(x)) local |= uint32_t(1) << W.local_of_vertex(v);
  int pw0 = W.parabolic_w0(local);
  for (int v : mask_vertices(x)) {
    int g = W.gen(W.local_of_vertex(v));
    if (W.mult(W.mult(pw0, g), pw0) != g) return 2;
  }
  return 1;
}

ArtinElement z_element(const GarsideContext& c) { return artin_delta(c, c.center_exponent()); }

long long total_letters(const ArtinElement& a) {
  const CoxTable& W = a.ctx->W();
  long long n = 0;
  if (W.rank() > 0) n += std::llabs(a.p) * W.length(W.w0());
  for (int x : a.xs) n += W.length(x);
  return n;
}

std::vector<long long> exponent_vector(const ArtinElement& a) {
  const CoxTable& W = a.ctx->W();
  std::vector<long long> e(a.ctx->graph().rank(), 0);
  auto add = [&](int widx, long long multiplier) {
    for (uint8_t s : W.word(widx)) {
      int v = W.vertex_of_local(s);
      e[v] = chk_add(e[v], multiplier);
    }
  };
  if (W.rank() > 0 && a.p != 0) add(W.w0(), a.p);
  for (int x : a.xs) add(x, 1);
  return e;
}

std::string artin_str(const ArtinElement& a) {
  std::ostringstream os;
  os << "D^" << a.p;
  const CoxTable& W = a.ctx->W();
  for (int x : a.xs) os << "|" << W.element_word_str(x);
  return os.str();
}

ArtinElement parse_artin(const GarsideContext& c, const std::string& s) {
  const CoxTable& W = c.W();
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : s) {
    if (ch == '|') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  if (parts.empty() || parts[0].rfind("D^", 0) != 0) throw Error("bad element literal: " + s);
  long long p = std::stoll(parts[0].substr(2));
  std::vector<int> xs;
  for (size_t i = 1; i < parts.size(); ++i) {
    std::istringstream ws(parts[i]);
    std::string name;
    std::vector<int> letters;
    while (ws >> name) letters.push_back(W.local_of_vertex(c.graph().index_of(name)));
    if (letters.empty()) throw Error("empty simple in element literal: " + s);
    xs.push_back(W.image_of_word(letters));
  }
  ArtinElement r{&c, p, std::move(xs)};
  if (!left_weighted(r)) throw Error("literal is not a left-weighted normal form: " + s);
  return r;
}

}  // namespace artin
