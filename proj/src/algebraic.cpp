#include "artin/algebraic.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <sstream>

namespace artin {

long long chk_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw Error("integer overflow in add");
  return r;
}

long long chk_sub(long long a, long long b) {
  long long r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error("integer overflow in sub");
  return r;
}

long long chk_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("integer overflow in mul");
  return r;
}

namespace {

// exact division of integer polynomials, remainder must vanish
std::vector<long long> poly_div(const std::vector<long long>& num, const std::vector<long long>& den) {
  std::vector<long long> rem = num;
  std::vector<long long> quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, 0);
  while (rem.size() >= den.size() && !(rem.size() == 1 && rem[0] == 0)) {
    long long lead = rem.back();
    long long dlead = den.back();
    if (lead % dlead != 0) throw Error("non-exact polynomial division");
    long long q = lead / dlead;
    size_t shift = rem.size() - den.size();
    quot[shift] = q;
    for (size_t i = 0; i < den.size(); ++i)
      rem[shift + i] = chk_sub(rem[shift + i], chk_mul(q, den[i]));
    while (rem.size() > 1 && rem.back() == 0) rem.pop_back();
    if (rem.size() == 1 && rem[0] == 0) break;
    if (rem.size() < den.size()) throw Error("nonzero remainder in polynomial division");
  }
  return quot;
}

}  // namespace

std::vector<long long> cyclotomic(int n) {
  // Phi_n from x^n - 1 = prod_{d | n} Phi_d
  std::vector<std::vector<long long>> memo(n + 1);
  for (int k = 1; k <= n; ++k) {
    if (n % k != 0) continue;
    std::vector<long long> p(k + 1, 0);
    p[0] = -1;
    p[k] = 1;
    for (int d = 1; d < k; ++d)
      if (k % d == 0) p = poly_div(p, memo[d]);
    memo[k] = p;
  }
  return memo[n];
}

CycloField::CycloField(int L) : L_(L) {
  if (L < 2) throw Error("field parameter must be >= 2");
  std::vector<long long> phi = cyclotomic(2 * L);
  int twod = static_cast<int>(phi.size()) - 1;
  if (twod % 2 != 0) throw Error("unexpected odd cyclotomic degree");
  int d = twod / 2;
  for (int k = 0; k <= twod; ++k)
    if (phi[k] != phi[twod - k]) throw Error("cyclotomic polynomial not palindromic");
  // Phi_2L(x) = x^d * Q(x + 1/x); expand Q in the basis V_k, V_k(2cos t) = 2cos(kt)
  std::vector<std::vector<long long>> V(d + 1);
  V[0] = {2};
  if (d >= 1) V[1] = {0, 1};
  for (int k = 2; k <= d; ++k) {
    V[k].assign(k + 1, 0);
    for (size_t i = 0; i < V[k - 1].size(); ++i) V[k][i + 1] = V[k - 1][i];
    for (size_t i = 0; i < V[k - 2].size(); ++i) V[k][i] = chk_sub(V[k][i], V[k - 2][i]);
  }
  std::vector<long long> q(d + 1, 0);
  q[0] = phi[d];
  for (int k = 1; k <= d; ++k)
    for (size_t i = 0; i < V[k].size(); ++i)
      q[i] = chk_add(q[i], chk_mul(phi[d + k], V[k][i]));
  if (q.back() != 1) throw Error("minimal polynomial not monic");
  minpoly_ = q;
  degree_ = d;
  theta_ = 2.0L * cosl(acosl(-1.0L) / static_cast<long double>(L));
}

AlgInt::AlgInt(const CycloField* f, long long n) : f_(f), c_(f->degree(), 0) { c_[0] = n; }

AlgInt::AlgInt(const CycloField* f, std::vector<long long> coords) : f_(f), c_(std::move(coords)) {
  if (static_cast<int>(c_.size()) != f->degree()) throw Error("coordinate size mismatch");
}

bool AlgInt::is_zero() const {
  for (long long x : c_)
    if (x != 0) return false;
  return true;
}

AlgInt AlgInt::operator+(const AlgInt& o) const {
  std::vector<long long> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = chk_add(c_[i], o.c_[i]);
  return AlgInt(f_, std::move(r));
}

AlgInt AlgInt::operator-(const AlgInt& o) const {
  std::vector<long long> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = chk_sub(c_[i], o.c_[i]);
  return AlgInt(f_, std::move(r));
}

AlgInt AlgInt::operator-() const {
  std::vector<long long> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = chk_sub(0, c_[i]);
  return AlgInt(f_, std::move(r));
}

AlgInt AlgInt::operator*(const AlgInt& o) const {
  int d = f_->degree();
  std::vector<long long> conv(2 * d - 1, 0);
  for (int i = 0; i < d; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < d; ++j)
      conv[i + j] = chk_add(conv[i + j], chk_mul(c_[i], o.c_[j]));
  }
  const auto& mp = f_->minpoly();
  for (int k = 2 * d - 2; k >= d; --k) {
    long long lead = conv[k];
    if (lead == 0) continue;
    conv[k] = 0;
    // x^k = x^(k-d) * (x^d) and x^d = -sum mp[i] x^i
    for (int i = 0; i < d; ++i)
      conv[k - d + i] = chk_sub(conv[k - d + i], chk_mul(lead, mp[i]));
  }
  conv.resize(d);
  return AlgInt(f_, std::move(conv));
}

bool AlgInt::operator==(const AlgInt& o) const { return c_ == o.c_; }

long double AlgInt::eval() const {
  long double t = f_->theta();
  long double v = 0.0L;
  for (size_t i = c_.size(); i-- > 0;) v = v * t + static_cast<long double>(c_[i]);
  return v;
}

int AlgInt::sign() const {
  if (is_zero()) return 0;
  long double v = eval();
  long double scale = 1.0L;
  long double tp = 1.0L;
  for (size_t i = 0; i < c_.size(); ++i) {
    scale += fabsl(static_cast<long double>(c_[i])) * tp;
    tp *= fabsl(f_->theta()) + 1.0L;
  }
  if (fabsl(v) < 1e-12L * scale)
    throw Error("numeric sign evaluation too close to zero: " + str());
  return v > 0 ? 1 : -1;
}

std::string AlgInt::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ",";
    os << c_[i];
  }
  os << "]";
  return os.str();
}

AlgInt theta_elem(const CycloField* f) {
  std::vector<long long> c(f->degree(), 0);
  if (f->degree() == 1) {
    // theta is an integer: reduce x mod the linear minimal polynomial
    c[0] = -f->minpoly()[0];
  } else {
    c[1] = 1;
  }
  return AlgInt(f, std::move(c));
}

AlgInt two_cos_pi_over(const CycloField* f, int m) {
  if (m < 2 || f->L() % m != 0) throw Error("label does not divide field parameter");
  int k = f->L() / m;
  // V_k(theta) with V_0 = 2, V_1 = theta
  AlgInt vprev(f, 2);
  AlgInt vcur = theta_elem(f);
  if (k == 0) return vprev;
  for (int i = 1; i < k; ++i) {
    AlgInt vnext = theta_elem(f) * vcur - vprev;
    vprev = vcur;
    vcur = vnext;
  }
  return vcur;
}

std::vector<AlgInt> leading_principal_minors(const std::vector<std::vector<AlgInt>>& a) {
  int n = static_cast<int>(a.size());
  if (n == 0) return {};
  const CycloField* f = a[0][0].field();
  if (n > 20) throw Error("matrix too large for exact minor expansion");
  // D[mask] = det of the block on rows 0..popcount(mask)-1 and columns in mask
  std::vector<AlgInt> D(size_t(1) << n);
  D[0] = AlgInt(f, 1);
  std::vector<uint32_t> by_count;
  by_count.reserve(D.size());
  for (uint32_t m = 1; m < (uint32_t(1) << n); ++m) by_count.push_back(m);
  std::sort(by_count.begin(), by_count.end(), [](uint32_t x, uint32_t y) {
    int cx = std::popcount(x), cy = std::popcount(y);
    return cx != cy ? cx < cy : x < y;
  });
  for (uint32_t mask : by_count) {
    int r = std::popcount(mask) - 1;
    AlgInt acc(f, 0);
    int pos = 0;
    for (int j = 0; j < n; ++j) {
      if (!(mask & (uint32_t(1) << j))) continue;
      AlgInt term = a[r][j] * D[mask ^ (uint32_t(1) << j)];
      acc = ((r + pos) % 2 == 0) ? acc + term : acc - term;
      ++pos;
    }
    D[mask] = acc;
  }
  std::vector<AlgInt> out;
  out.reserve(n);
  for (int k = 1; k <= n; ++k) out.push_back(D[(uint32_t(1) << k) - 1]);
  return out;
}

}  // namespace artin
