#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "artin/graph.hpp"

namespace artin {

inline constexpr int kEnumCutoff = 1000000;

/* Enumerated finite Coxeter group W_T.  Elements are indices into the table;
   index 0 is the identity and the last index is the longest element.  Words
   are ShortLex-minimal over the declared vertex order. */
class CoxTable {
 public:
  CoxTable(const DefiningGraph& g, Mask t);

  const DefiningGraph& graph() const { return *g_; }
  Mask subset() const { return t_; }
  int rank() const { return rank_; }
  int size() const { return static_cast<int>(length_.size()); }
  int w0() const { return size() - 1; }

  int vertex_of_local(int local) const { return verts_[local]; }
  int local_of_vertex(int v) const;
  int gen(int local) const { return right_[0][local]; }

  int right(int e, int local) const { return right_[e][local]; }
  int left(int e, int local) const { return left_[e][local]; }
  int length(int e) const { return length_[e]; }
  const std::vector<uint8_t>& word(int e) const { return word_[e]; }
  uint32_t left_descents(int e) const { return ldesc_[e]; }
  uint32_t right_descents(int e) const { return rdesc_[e]; }
  int inverse(int e) const { return inv_[e]; }
  int tau(int e) const { return tau_[e]; }  // w0 e w0
  bool tau_trivial_on_gens() const;

  int mult(int a, int b) const;
  int image_of_word(const std::vector<int>& local_letters) const;
  const std::vector<AlgInt>& matrix(int e) const { return mat_[e]; }

  std::string element_word_str(int e) const;  // global names joined by spaces

  // longest element of the standard parabolic W_X, X given by local mask
  int parabolic_w0(uint32_t local_mask) const;

 private:
  const DefiningGraph* g_;
  Mask t_;
  int rank_;
  std::vector<int> verts_;  // ascending global vertex indices
  std::vector<std::vector<AlgInt>> mat_;
  std::vector<std::vector<int>> right_, left_;
  std::vector<int> length_, inv_, tau_;
  std::vector<std::vector<uint8_t>> word_;
  std::vector<uint32_t> ldesc_, rdesc_;
};

/* Exact Tits-representation matrix over the full vertex set; gives a faithful
   equality test in the Coxeter quotient even when W_S is infinite. */
class CoxMatrix {
 public:
  explicit CoxMatrix(const DefiningGraph& g);  // identity
  void apply_right(int vertex);                // this <- this * sigma_vertex
  bool operator==(const CoxMatrix& o) const { return a_ == o.a_; }
  std::string key() const;

 private:
  const DefiningGraph* g_;
  int n_;
  std::vector<AlgInt> a_;
};

CoxMatrix cox_image(const DefiningGraph& g, const std::vector<int>& vertex_letters);

}  // namespace artin
