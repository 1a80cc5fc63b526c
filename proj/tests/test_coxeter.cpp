#include <doctest.h>

#include <random>

#include "artin/coxeter.hpp"
#include "helpers.hpp"

using namespace artin;
using testutil::load_fixture;

TEST_CASE("enumeration sizes and longest-element lengths") {
  struct Row {
    const char* name;
    int size, w0len;
  };
  // |W| and number of positive roots for A3, B3, H3, I2(3), I2(4)
  for (Row r : std::initializer_list<Row>{{"path3", 24, 6},
                                          {"b3", 48, 9},
                                          {"h3", 120, 15},
                                          {"dihedral3", 6, 3},
                                          {"dihedral4", 8, 4}}) {
    DefiningGraph g = load_fixture(r.name);
    CoxTable W(g, g.full_mask());
    CAPTURE(r.name);
    CHECK(W.size() == r.size);
    CHECK(W.length(W.w0()) == r.w0len);
    CHECK(W.length(0) == 0);
  }
  // D4: the star fixture with the leaf pairs filled in by commuting edges
  DefiningGraph d4 = parse_graph("c a 3; c b 3; c d 3; a b 2; a d 2; b d 2");
  CoxTable W(d4, d4.full_mask());
  CHECK(W.size() == 192);
  CHECK(W.length(W.w0()) == 12);
}

TEST_CASE("shortlex words are geodesic and reproduce the element") {
  DefiningGraph g = load_fixture("b3");
  CoxTable W(g, g.full_mask());
  for (int e = 0; e < W.size(); ++e) {
    const auto& w = W.word(e);
    CHECK(static_cast<int>(w.size()) == W.length(e));
    std::vector<int> letters(w.begin(), w.end());
    CHECK(W.image_of_word(letters) == e);
  }
}

TEST_CASE("group laws on the table") {
  DefiningGraph g = load_fixture("path3");
  CoxTable W(g, g.full_mask());
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> pick(0, W.size() - 1);
  for (int i = 0; i < 200; ++i) {
    int a = pick(rng), b = pick(rng), c = pick(rng);
    CHECK(W.mult(a, W.inverse(a)) == 0);
    CHECK(W.mult(W.mult(a, b), c) == W.mult(a, W.mult(b, c)));
  }
  // braid relation: sts = tst
  int s = W.gen(0), t = W.gen(1);
  CHECK(W.mult(W.mult(s, t), s) == W.mult(W.mult(t, s), t));
}

TEST_CASE("descent sets") {
  DefiningGraph g = load_fixture("dihedral4");
  CoxTable W(g, g.full_mask());
  CHECK(W.right_descents(0) == 0u);
  CHECK(W.left_descents(W.w0()) == 0b11u);
  CHECK(W.right_descents(W.w0()) == 0b11u);
  int s = W.gen(0);
  CHECK(W.right_descents(s) == 0b01u);
  CHECK(W.left_descents(s) == 0b01u);
}

TEST_CASE("tau is conjugation by the longest element") {
  // diagram automorphism nontrivial for A3 and I2(odd), trivial for B3, H3, I2(even)
  auto tau_trivial = [](const char* name) {
    DefiningGraph g = load_fixture(name);
    return CoxTable(g, g.full_mask()).tau_trivial_on_gens();
  };
  CHECK_FALSE(tau_trivial("path3"));
  CHECK_FALSE(tau_trivial("dihedral3"));
  CHECK(tau_trivial("b3"));
  CHECK(tau_trivial("h3"));
  CHECK(tau_trivial("dihedral4"));
  CHECK(tau_trivial("edge2"));

  DefiningGraph g = load_fixture("path3");
  CoxTable W(g, g.full_mask());
  for (int e = 0; e < W.size(); ++e)
    CHECK(W.tau(e) == W.mult(W.mult(W.w0(), e), W.w0()));
  // tau swaps the outer generators of A3
  CHECK(W.tau(W.gen(0)) == W.gen(2));
  CHECK(W.tau(W.gen(1)) == W.gen(1));
}

TEST_CASE("parabolic longest elements") {
  DefiningGraph g = load_fixture("path3");
  CoxTable W(g, g.full_mask());
  CHECK(W.parabolic_w0(0) == 0);
  CHECK(W.parabolic_w0(0b111) == W.w0());
  CHECK(W.parabolic_w0(0b001) == W.gen(0));
  int st = W.parabolic_w0(0b011);
  CHECK(W.length(st) == 3);
  CHECK(W.mult(st, st) == 0);
  CHECK(st == W.mult(W.mult(W.gen(0), W.gen(1)), W.gen(0)));
}

TEST_CASE("subgroup tables embed") {
  DefiningGraph g = load_fixture("path3");
  CoxTable sub(g, mask_of(g, {"s", "t"}));
  CHECK(sub.size() == 6);
  CHECK(sub.vertex_of_local(0) == 0);
  CHECK(sub.vertex_of_local(1) == 1);
  CHECK(sub.local_of_vertex(1) == 1);
  CHECK(sub.element_word_str(sub.w0()) == "s t s");
}

TEST_CASE("matrix representation is exact and matches the table") {
  DefiningGraph g = load_fixture("h3");
  CoxTable W(g, g.full_mask());
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> pick(0, W.size() - 1);
  for (int i = 0; i < 12; ++i) {
    int e = pick(rng);
    const auto& w = W.word(e);
    std::vector<int> verts;
    for (uint8_t l : w) verts.push_back(W.vertex_of_local(l));
    CoxMatrix m(g);
    for (int v : verts) m.apply_right(v);
    CHECK(m == cox_image(g, verts));
    CHECK((e == 0) == (m == CoxMatrix(g)));
  }
}

TEST_CASE("matrix representation separates elements of an infinite group") {
  DefiningGraph g = load_fixture("pathinf3");
  // (su) has infinite order: no relation between the endpoints
  int s = g.index_of("s"), u = g.index_of("u");
  CoxMatrix id(g);
  CoxMatrix m(g);
  for (int k = 1; k <= 8; ++k) {
    m.apply_right(s);
    m.apply_right(u);
    CHECK_FALSE(m == id);
  }
  // while (st)^3 = 1 under the label-3 relation
  int t = g.index_of("t");
  CoxMatrix r(g);
  for (int k = 0; k < 3; ++k) {
    r.apply_right(s);
    r.apply_right(t);
  }
  CHECK(r == id);
}
