#include "artin/coxeter.hpp"

#include <bit>
#include <sstream>
#include <unordered_map>

namespace artin {

namespace {

std::string matrix_key(const std::vector<AlgInt>& m) {
  std::string k;
  for (const AlgInt& x : m)
    for (long long c : x.coords())
      k.append(reinterpret_cast<const char*>(&c), sizeof(c));
  return k;
}

// entries of sigma_s as a dim x dim column-action matrix over the listed vertices
std::vector<AlgInt> reflection_matrix(const DefiningGraph& g, const std::vector<int>& verts, int s_local) {
  const CycloField* f = g.field.get();
  int n = static_cast<int>(verts.size());
  std::vector<AlgInt> m(n * n, AlgInt(f, 0));
  for (int j = 0; j < n; ++j) m[j * n + j] = AlgInt(f, 1);
  m[s_local * n + s_local] = AlgInt(f, -1);
  for (int j = 0; j < n; ++j) {
    if (j == s_local) continue;
    int lbl = g.label(verts[s_local], verts[j]);
    AlgInt lam = (lbl == kInfLabel) ? AlgInt(f, 2) : two_cos_pi_over(f, lbl);
    m[s_local * n + j] = lam;  // sigma_s(alpha_j) = alpha_j + lambda alpha_s
  }
  return m;
}

std::vector<AlgInt> mat_mult(const CycloField* f, int n, const std::vector<AlgInt>& a,
                             const std::vector<AlgInt>& b) {
  std::vector<AlgInt> c(n * n, AlgInt(f, 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (a[i * n + k].is_zero()) continue;
      for (int j = 0; j < n; ++j) c[i * n + j] = c[i * n + j] + a[i * n + k] * b[k * n + j];
    }
  return c;
}

}  // namespace

CoxTable::CoxTable(const DefiningGraph& g, Mask t) : g_(&g), t_(t) {
  if (!is_finite_type(g, t)) throw Error("subset is not finite type: " + subset_str(g, t));
  verts_ = mask_vertices(t);
  rank_ = static_cast<int>(verts_.size());
  const CycloField* f = g.field.get();
  int n = rank_;

  std::vector<std::vector<AlgInt>> gens(rank_);
  for (int s = 0; s < rank_; ++s) gens[s] = reflection_matrix(g, verts_, s);

  std::unordered_map<std::string, int> lookup;
  std::vector<AlgInt> id(n * n, AlgInt(f, 0));
  for (int i = 0; i < n; ++i) id[i * n + i] = AlgInt(f, 1);
  mat_.push_back(id);
  word_.push_back({});
  length_.push_back(0);
  right_.push_back(std::vector<int>(rank_, -1));
  lookup[matrix_key(id)] = 0;
  std::vector<int> via_parent{-1}, via_letter{-1};

  for (int e = 0; e < static_cast<int>(mat_.size()); ++e) {
    for (int s = 0; s < rank_; ++s) {
      std::vector<AlgInt> m = mat_mult(f, n, mat_[e], gens[s]);
      std::string k = matrix_key(m);
      auto it = lookup.find(k);
      if (it != lookup.end()) {
        right_[e][s] = it->second;
        continue;
      }
      int idx = static_cast<int>(mat_.size());
      if (idx > kEnumCutoff) throw Error("enumeration cutoff exceeded (misclassified subset?)");
      lookup[k] = idx;
      mat_.push_back(std::move(m));
      std::vector<uint8_t> w = word_[e];
      w.push_back(static_cast<uint8_t>(s));
      word_.push_back(std::move(w));
      length_.push_back(length_[e] + 1);
      right_.push_back(std::vector<int>(rank_, -1));
      via_parent.push_back(e);
      via_letter.push_back(s);
      right_[e][s] = idx;
    }
  }

  int sz = size();
  left_.assign(sz, std::vector<int>(rank_, -1));
  for (int s = 0; s < rank_; ++s) left_[0][s] = right_[0][s];
  for (int e = 1; e < sz; ++e) {
    int p = via_parent[e], letter = via_letter[e];
    for (int s = 0; s < rank_; ++s) left_[e][s] = right_[left_[p][s]][letter];
  }

  ldesc_.assign(sz, 0);
  rdesc_.assign(sz, 0);
  for (int e = 0; e < sz; ++e)
    for (int s = 0; s < rank_; ++s) {
      if (length_[left_[e][s]] < length_[e]) ldesc_[e] |= uint32_t(1) << s;
      if (length_[right_[e][s]] < length_[e]) rdesc_[e] |= uint32_t(1) << s;
    }

  if (rank_ > 0) {
    int maxlen = length_[sz - 1];
    for (int e = 0; e < sz - 1; ++e)
      if (length_[e] >= maxlen) throw Error("internal: longest element not unique");
    if (ldesc_[sz - 1] != (uint32_t(1) << rank_) - 1 || rdesc_[sz - 1] != (uint32_t(1) << rank_) - 1)
      throw Error("internal: longest element descent sets incomplete");
  }

  inv_.assign(sz, 0);
  for (int e = 0; e < sz; ++e) {
    int r = 0;
    const auto& w = word_[e];
    for (auto it = w.rbegin(); it != w.rend(); ++it) r = right_[r][*it];
    inv_[e] = r;
  }
  tau_.assign(sz, 0);
  for (int e = 0; e < sz; ++e) tau_[e] = mult(mult(w0(), e), w0());
}

int CoxTable::local_of_vertex(int v) const {
  for (int i = 0; i < rank_; ++i)
    if (verts_[i] == v) return i;
  throw Error("vertex not in subset");
}

bool CoxTable::tau_trivial_on_gens() const {
  for (int s = 0; s < rank_; ++s)
    if (tau_[gen(s)] != gen(s)) return false;
  return true;
}

int CoxTable::mult(int a, int b) const {
  int r = a;
  for (uint8_t s : word_[b]) r = right_[r][s];
  return r;
}

int CoxTable::image_of_word(const std::vector<int>& local_letters) const {
  int r = 0;
  for (int s : local_letters) {
    if (s < 0 || s >= rank_) throw Error("letter outside subset");
    r = right_[r][s];
  }
  return r;
}

std::string CoxTable::element_word_str(int e) const {
  std::string out;
  for (uint8_t s : word_[e]) {
    if (!out.empty()) out += " ";
    out += g_->vertices[verts_[s]];
  }
  return out;
}

int CoxTable::parabolic_w0(uint32_t local_mask) const {
  // greedy climb: multiply by non-descent generators of the sub-parabolic
  int e = 0;
  while (true) {
    uint32_t candidates = local_mask & ~rdesc_[e];
    if (candidates == 0) return e;
    e = right_[e][std::countr_zero(candidates)];
  }
}

CoxMatrix::CoxMatrix(const DefiningGraph& g) : g_(&g), n_(g.rank()) {
  const CycloField* f = g.field.get();
  a_.assign(n_ * n_, AlgInt(f, 0));
  for (int i = 0; i < n_; ++i) a_[i * n_ + i] = AlgInt(f, 1);
}

void CoxMatrix::apply_right(int vertex) {
  std::vector<int> all(n_);
  for (int i = 0; i < n_; ++i) all[i] = i;
  std::vector<AlgInt> sigma = reflection_matrix(*g_, all, vertex);
  a_ = mat_mult(g_->field.get(), n_, a_, sigma);
}

std::string CoxMatrix::key() const { return matrix_key(a_); }

CoxMatrix cox_image(const DefiningGraph& g, const std::vector<int>& vertex_letters) {
  CoxMatrix m(g);
  for (int v : vertex_letters) m.apply_right(v);
  return m;
}

}  // namespace artin
