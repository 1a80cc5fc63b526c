#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "artin/garside.hpp"

namespace artin {

class FcContext;

/* Node of the recursive amalgam decomposition of an FC-type Artin group:
   for a non-adjacent pair (s,t) inside the subset,
     A_mask = A_{mask\{s}}  *_{A_{mask\{s,t}}}  A_{mask\{t}}.
   Cliques are leaves and carry a Garside context instead of a split. */
struct FcNode {
  const FcContext* fc = nullptr;
  Mask mask = 0;
  bool leaf = false;
  const GarsideContext* gar = nullptr;  // leaf payload
  int s = -1, t = -1;                   // split pair (ambient vertex ids)
  Mask zmask = 0;                       // mask minus the pair
  const FcNode* factor0 = nullptr;      // over mask \ {s}
  const FcNode* factor1 = nullptr;      // over mask \ {t}
  const FcNode* znode = nullptr;        // over zmask

  const FcNode* factor(int side) const { return side == 0 ? factor0 : factor1; }
};

struct FcWord;
using FcWordPtr = std::shared_ptr<const FcWord>;

struct FcSyllable {
  int side;     // 0: factor without s, 1: factor without t
  FcWordPtr w;  // over the factor node; never inside the edge subgroup
};

/* Element of A_mask: Garside normal form at a leaf, alternating amalgam form
   c0 r_1 ... r_n at a split (c0 in the edge subgroup, r_i strictly
   alternating between the factors, none of them in the edge subgroup).
   Immutable; syllable count and side sequence are invariants of the group
   element, the element is trivial iff the form is empty. */
struct FcWord {
  const FcNode* node = nullptr;
  std::optional<ArtinElement> leafval;
  FcWordPtr c0;
  std::vector<FcSyllable> syl;
};

// one product factor: an element of A_support, support a clique and exact
struct Chunk {
  Mask support;
  ArtinElement val;
};

/* Owns the decomposition nodes and the per-clique Garside contexts of one
   FC-type defining graph.  Must outlive every FcWord built from it. */
class FcContext {
 public:
  explicit FcContext(const DefiningGraph& g);
  FcContext(const FcContext&) = delete;
  FcContext& operator=(const FcContext&) = delete;

  const DefiningGraph& graph() const { return *g_; }
  const GarsideContext& garside(Mask clique) const;
  const FcNode* node(Mask m) const;                // default split choices
  const FcNode* node(Mask m, int s, int t) const;  // explicit split pair

 private:
  const DefiningGraph* g_;
  mutable std::map<Mask, std::unique_ptr<GarsideContext>> gar_;
  mutable std::map<std::tuple<Mask, int, int>, std::unique_ptr<FcNode>> nodes_;
};

FcWordPtr fc_identity(const FcNode* n);
std::vector<Chunk> fc_flatten(const FcWordPtr& w);
FcWordPtr fc_feed(const FcWordPtr& w, const std::vector<Chunk>& chunks);
FcWordPtr fc_from_word(const FcContext& fc, Mask m, const std::vector<SignedLetter>& word);
FcWordPtr fc_mult(const FcWordPtr& a, const FcWordPtr& b);
FcWordPtr fc_inverse(const FcWordPtr& a);
bool fc_trivial(const FcWordPtr& w);
bool fc_equal(const FcWordPtr& a, const FcWordPtr& b);

/* Membership driver: if w lies in A_target, returns w rewritten as chunks
   over cliques inside target; nullopt otherwise.  Throws Unsupported when
   the recursion would have to remove a cone vertex of a subset of rank > 3
   (outside the implemented fragment). */
std::optional<std::vector<Chunk>> fc_try_into(const FcWordPtr& w, Mask target);
bool fc_member(const FcWordPtr& w, Mask target);
FcWordPtr fc_convert(const FcWordPtr& w, const FcNode* target);

long long fc_syllable_count(const FcWordPtr& w);
/* Abelianization image: generators joined by an odd label share a conjugacy
   class, so only the sum per odd-edge component is well defined.  Entry i
   holds the class sum of vertex i (equal entries across one class). */
std::vector<long long> fc_abelianization(const FcWordPtr& w);
std::string fc_cox_key(const FcWordPtr& w);  // exact Coxeter-image fingerprint
Mask fc_letter_support(const FcWordPtr& w);  // letters present in the stored form

// rewrite an element of a clique group as an exact-support chunk (empty if trivial)
std::vector<Chunk> make_chunks(const FcContext& fc, const ArtinElement& a);

}  // namespace artin
