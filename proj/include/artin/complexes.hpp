#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "artin/parabolic.hpp"

namespace artin {

/* Bounded ball of the Deligne complex around the vertex A_emptyset.
   Vertices are cosets g A_T with T spherical; down-moves are explored only
   through single signed generators of T, so the ball is a subcomplex of the
   true complex (never a wrong vertex or edge, possibly missing far cosets). */
struct DeligneVertex {
  FcWordPtr g;  // first representative found; coset equality is semantic
  Mask t = 0;
  int dist = 0;
};
struct DeligneEdge {
  int a = 0, b = 0;  // a carries the smaller subset
  int type = 0;      // the added generator (global vertex id)
};
struct DeligneCube {
  int bottom = 0, top = 0;
  int dim = 0;
};
struct DeligneBall {
  std::vector<DeligneVertex> vertices;
  std::vector<DeligneEdge> edges;
  std::vector<DeligneCube> cubes;  // all intervals of dim >= 1 with every face present
  int radius = 0;
};

DeligneBall deligne_ball(ParabolicContext& pc, int radius);
// index of the vertex equal to the coset g A_T, or -1
int deligne_find(ParabolicContext& pc, const DeligneBall& b, const FcWordPtr& g, Mask t);
// the generator added along an edge of the ball; throws if (a,b) is not an edge
int hyperplane_type(const DeligneBall& b, int a, int bvtx);
// dual hyperplane types along an edge path, as (type, edge position)
std::vector<std::pair<int, int>> crossing_hyperplanes(const DeligneBall& b,
                                                      const std::vector<int>& path);
// ball vertices g A_T whose stabilizer g A_T g^{-1} contains P pointwise
std::vector<int> fixed_set(ParabolicContext& pc, const Parabolic& p, const DeligneBall& b);

struct PathProfile {
  std::vector<int> dirs;  // +1 upward (subset grows), -1 downward
  std::vector<int> peaks, valleys;  // positions of interior turning points
};
PathProfile edge_path_profile(const DeligneBall& b, const std::vector<int>& path);

/* Standard-subset slice of the complex of parabolic subgroups, with the
   connectivity verdict compared against the graph criterion (Gamma connected
   and at least three vertices). */
struct CpDomain {
  std::vector<Mask> vertices;  // proper irreducible spherical subsets
  std::vector<std::tuple<int, int, std::string>> edges;
  bool connected = false;
  bool criterion = false;
};
CpDomain cp_fundamental_domain(ParabolicContext& pc);
bool gamma_connected(const DefiningGraph& g);

// join test for reducible graphs: cross-factor adjacency and ball diameter
struct JoinReport {
  bool cross_adjacent = false;
  int vertex_count = 0;
  int diameter = -1;  // over the bounded vertex pool
  bool diameter_ok = false;
};
JoinReport check_join(ParabolicContext& pc, int conjugator_bound);

struct CpBall {
  std::vector<Parabolic> vertices;  // index 0 is the base
  std::vector<int> dist;
  std::vector<std::tuple<int, int, std::string>> edges;
  int radius = 0;
  int conjugator_bound = 0;
};
CpBall cp_ball(ParabolicContext& pc, const Parabolic& base, int radius, int conjugator_bound);
int cp_distance(const CpBall& b, const std::string& pkey, const std::string& qkey);  // -1 unreachable

// words <= length_bound normalizing some proper irreducible spherical standard
// subset; one word per group element, closed under inverse
std::vector<std::vector<SignedLetter>> normalizer_generators(ParabolicContext& pc,
                                                             int length_bound);

/* Distance curve d(1, target^n) in the Cayley graph of the words above.
   Bidirectional level-complete BFS; rel records what the distance column
   proves: "=" exact, "<=" a found path not yet proven shortest, ">=" the
   best lower bound (completed levels or abelianization), "inf" unreachable
   within the explored subgroup. */
struct GrowthRow {
  int n = 0;
  long long distance = 0;
  std::string rel = "=";
  long long nodes = 0;
};
std::vector<GrowthRow> cayley_growth(ParabolicContext& pc, const FcWordPtr& target,
                                     const std::vector<std::vector<SignedLetter>>& gens,
                                     int horizon, long long node_budget);

std::string deligne_to_dot(ParabolicContext& pc, const DeligneBall& b);
std::string deligne_to_json(ParabolicContext& pc, const DeligneBall& b);
std::string cp_domain_to_dot(const DefiningGraph& g, const CpDomain& d);
std::string cp_domain_to_json(const DefiningGraph& g, const CpDomain& d);
std::string cp_ball_to_dot(const CpBall& b);
std::string cp_ball_to_json(ParabolicContext& pc, const CpBall& b);
std::string growth_to_csv(const std::vector<GrowthRow>& rows);

}  // namespace artin
