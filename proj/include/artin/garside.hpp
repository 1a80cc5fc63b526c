#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "artin/coxeter.hpp"

namespace artin {

// Garside structure of the finite-type Artin group A_T
class GarsideContext {
 public:
  GarsideContext(const DefiningGraph& g, Mask t) : w_(g, t) {}
  const CoxTable& W() const { return w_; }
  Mask subset() const { return w_.subset(); }
  const DefiningGraph& graph() const { return w_.graph(); }
  int center_exponent() const {
    return (w_.rank() == 0 || w_.tau_trivial_on_gens()) ? 1 : 2;
  }

 private:
  CoxTable w_;
};

/* Left-greedy normal form Delta^p x_1...x_l: simples are CoxTable indices,
   none of them identity or w0, and right_descents(x_i) contains
   left_descents(x_{i+1}).  Unique per group element. */
struct ArtinElement {
  const GarsideContext* ctx = nullptr;
  long long p = 0;
  std::vector<int> xs;

  bool is_identity() const { return p == 0 && xs.empty(); }
  bool is_positive() const { return p >= 0; }
  long long sup() const { return p + static_cast<long long>(xs.size()); }
};

// signed letter: (global vertex index, +1 or -1)
using SignedLetter = std::pair<int, int>;

ArtinElement artin_identity(const GarsideContext& c);
ArtinElement artin_delta(const GarsideContext& c, long long power);
ArtinElement artin_generator(const GarsideContext& c, int vertex, int sign);
ArtinElement artin_simple(const GarsideContext& c, int widx);
ArtinElement artin_from_word(const GarsideContext& c, const std::vector<SignedLetter>& word);

ArtinElement mult(const ArtinElement& a, const ArtinElement& b);
ArtinElement inverse(const ArtinElement& a);
bool equal(const ArtinElement& a, const ArtinElement& b);
bool left_weighted(const ArtinElement& a);  // invariant re-check used by tests

// lattice operations on positive elements (prefix order)
ArtinElement left_gcd(const ArtinElement& a, const ArtinElement& b);
ArtinElement right_gcd(const ArtinElement& a, const ArtinElement& b);
ArtinElement left_lcm(const ArtinElement& a, const ArtinElement& b);
ArtinElement rev(const ArtinElement& a);  // word-reversing anti-automorphism
bool left_divides(const ArtinElement& a, const ArtinElement& b);

// a = den^{-1} * num with den, num positive and left_gcd(den, num) trivial
struct Fraction {
  ArtinElement den, num;
};
Fraction reduced_fraction(const ArtinElement& a);

// membership in the standard parabolic A_X, X a global vertex mask inside the ambient subset
bool garside_membership(const ArtinElement& a, Mask x);
// a rewritten as a signed word over X (requires garside_membership)
std::vector<SignedLetter> word_in_subset(const ArtinElement& a, Mask x);
std::vector<SignedLetter> artin_word(const ArtinElement& a);  // over the ambient subset

// longest element of the sub-parabolic X as an element of A_T, and its central power
ArtinElement parabolic_delta(const GarsideContext& c, Mask x);
int parabolic_center_exponent(const GarsideContext& c, Mask x);
ArtinElement z_element(const GarsideContext& c);  // Delta_T^k

long long total_letters(const ArtinElement& a);
std::vector<long long> exponent_vector(const ArtinElement& a);  // per global vertex

std::string artin_str(const ArtinElement& a);
ArtinElement parse_artin(const GarsideContext& c, const std::string& s);

}  // namespace artin
