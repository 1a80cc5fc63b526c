#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "artin/algebraic.hpp"

namespace artin {

// subsets of generators are bitmasks over the declared vertex order
using Mask = uint32_t;

constexpr int kInfLabel = 0;  // m_ij = infinity (absent edge)

struct DefiningGraph {
  std::vector<std::string> vertices;
  std::vector<std::vector<int>> labels;  // symmetric, kInfLabel off-edge, 0 on diagonal
  std::shared_ptr<CycloField> field;     // Z[2cos(pi/L)], L = lcm(2, finite labels)

  int rank() const { return static_cast<int>(vertices.size()); }
  Mask full_mask() const { return rank() == 32 ? ~Mask(0) : (Mask(1) << rank()) - 1; }
  int label(int i, int j) const { return labels[i][j]; }
  int index_of(const std::string& name) const;
};

DefiningGraph parse_graph(const std::string& text);
DefiningGraph load_graph_file(const std::string& path);
std::string graph_to_json(const DefiningGraph& g);
DefiningGraph graph_from_json(const std::string& text);

std::vector<int> mask_vertices(Mask m);
Mask mask_of(const DefiningGraph& g, const std::vector<std::string>& names);
std::string subset_str(const DefiningGraph& g, Mask m);  // "{s,t}" in declared order

bool is_clique(const DefiningGraph& g, Mask t);
bool is_finite_type(const DefiningGraph& g, Mask t);
std::vector<Mask> spherical_subsets(const DefiningGraph& g);
bool is_fc_type(const DefiningGraph& g);

struct Decomposition {
  std::vector<Mask> components;  // maximal parts with all cross-labels 2
  bool is_graph_join = false;    // splits with every cross-pair carrying an edge
};
Decomposition decompose(const DefiningGraph& g, Mask t);

struct SubsetClass {
  Mask subset = 0;
  bool finite_type = false;
  bool irreducible = false;
  unsigned long long coxeter_order = 0;  // 0 encodes infinite
};
SubsetClass classify_subset(const DefiningGraph& g, Mask t);

/* Recognition of the classified irreducible finite Coxeter diagrams
   (A,B,D,E,F,H,I2).  Returns |W_T| when T matches one, 0 otherwise.
   Independent route from the positive-definiteness test; also the
   order-formula provider. */
unsigned long long recognized_order(const DefiningGraph& g, Mask t);

}  // namespace artin
