#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "artin/fc.hpp"

namespace artin {

/* Spherical parabolic subgroup g A_X g^{-1}.  The key is the canonical name
   of the central element z = g Delta_X^k g^{-1}: equal subgroups get equal
   keys (within one ParabolicContext) because keys are interned by exact
   element equality of z. */
struct Parabolic {
  FcWordPtr g;
  Mask x = 0;
  bool irreducible = false;
  FcWordPtr z;
  std::string key;
};

class ParabolicContext {
 public:
  explicit ParabolicContext(const FcContext& fc);
  ParabolicContext(const ParabolicContext&) = delete;
  ParabolicContext& operator=(const ParabolicContext&) = delete;

  const FcContext& fc() const { return *fc_; }

  Parabolic make(const FcWordPtr& g, Mask x);
  Parabolic make_standard(Mask x);

  bool member(const FcWordPtr& alpha, const Parabolic& p);
  bool contains(const Parabolic& big, const Parabolic& small);  // small ⊆ big
  std::vector<FcWordPtr> generators(const Parabolic& p);
  FcWordPtr z_of_standard(Mask x);

  Parabolic conjugate(const FcWordPtr& h, const Parabolic& p);  // h P h^{-1}
  // first h with |h| <= bound and h^{-1} z_P h = z_Q, if any
  std::optional<FcWordPtr> is_conjugate(const Parabolic& p, const Parabolic& q, int bound);

  struct Adjacency {
    bool adjacent = false;
    std::string witness;  // "equal", "inclusion", "commute-disjoint" or empty
  };
  Adjacency is_adjacent(const Parabolic& p, const Parabolic& q);

  /* Smallest certified parabolic containing alpha among all h A_Y h^{-1}
     with |h| <= bound (plus the witness's standard subsets); the result is
     contained in every member of that set. */
  Parabolic minimal_parabolic(const FcWordPtr& alpha, int bound,
                              const std::optional<Parabolic>& witness = std::nullopt);

  struct IntersectResult {
    Parabolic r;
    bool containment = false;  // generators of r lie in both inputs
    bool saturation = false;   // every sampled common element lies in r
    std::string mode;          // "equal", "standard", "same-conjugator", "sampled"
    long long samples = 0;
  };
  IntersectResult intersect(const Parabolic& p, const Parabolic& q, int budget,
                            unsigned seed = 12345);

  std::string to_json(const Parabolic& p);
  Parabolic from_json(const std::string& text);
  std::string to_json(const IntersectResult& r);

  // all reduced signed words of length <= bound, shortest first, lexicographic
  std::vector<std::vector<SignedLetter>> signed_words(int bound) const;

  // membership in A_X with a cheap Coxeter-image prune in front
  bool member_in_standard(const FcWordPtr& beta, Mask x);
  const std::unordered_set<std::string>& coxeter_keys(Mask x);

 private:
  std::string intern(const FcWordPtr& z, const std::string* forced = nullptr);

  const FcContext* fc_;
  std::map<std::string, std::vector<std::pair<FcWordPtr, std::string>>> intern_;
  std::map<Mask, std::unordered_set<std::string>> wkeys_;
  std::map<Mask, FcWordPtr> zcache_;
};

// does h normalize the standard parabolic A_X (both conjugates inside)
bool is_normalizer(const FcContext& fc, const FcWordPtr& h, Mask x);

}  // namespace artin
