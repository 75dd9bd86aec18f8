#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "affpav/errors.hpp"
#include "affpav/rootdata.hpp"

using namespace affpav;
using rootdata::Isogeny;
using rootdata::RootDatum;
using rootdata::Vec;

TEST_CASE("A1 sc is forced") {
  auto rd = RootDatum::make('A', 1, Isogeny::SimplyConnected);
  CHECK(rd->num_positive() == 1);
  CHECK(rd->roots().size() == 2);
  // <alpha, alpha^vee> = 2
  CHECK(rd->pair(rd->simple_root(1).ch, rd->simple_root(1).cov) == 2);
  // X_* = Z alpha^vee: the coroot is the basis vector
  CHECK(rd->simple_root(1).cov == Vec{1});
  CHECK(rd->in_coroot_lattice(Vec{1}));
}

TEST_CASE("Cartan diagonal is 2 and pairing rejects bad shapes") {
  for (auto iso : {Isogeny::SimplyConnected, Isogeny::Adjoint}) {
    for (auto [s, r] : std::vector<std::pair<char, int>>{
             {'A', 2}, {'B', 2}, {'C', 3}, {'D', 4}, {'G', 2}}) {
      auto rd = RootDatum::make(s, r, iso);
      for (int i = 1; i <= r; ++i)
        CHECK(rd->pair(rd->simple_root(i).ch, rd->simple_root(i).cov) == 2);
    }
  }
  auto rd = RootDatum::make('A', 2, Isogeny::SimplyConnected);
  CHECK_THROWS_AS(rd->pair(Vec{1}, Vec{1, 2}), UserError);
}

TEST_CASE("B2 adjoint: closure finds 4 positive roots, theta long") {
  auto rd = RootDatum::make('B', 2, Isogeny::Adjoint);
  CHECK(rd->num_positive() == 4);
  CHECK(rd->roots().size() == 8);
  // adjoint character coordinates are the simple-root coefficients: the
  // highest root of B2 is alpha_1 + 2 alpha_2
  CHECK(rd->highest_root().ch == Vec{1, 2});
  // theta is long: <theta, theta^vee> = 2 and theta^vee = alpha_1^vee + alpha_2^vee
  CHECK(rd->pair(rd->highest_root().ch, rd->highest_root().cov) == 2);
  Vec sum(2, 0);
  for (int j = 0; j < 2; ++j)
    sum[j] = rd->simple_root(1).cov[j] + rd->simple_root(2).cov[j];
  CHECK(rd->highest_root().cov == sum);
}

TEST_CASE("B2: <2rho, a1^vee + a2^vee> = 4") {
  for (auto iso : {Isogeny::SimplyConnected, Isogeny::Adjoint}) {
    auto rd = RootDatum::make('B', 2, iso);
    Vec mu(2, 0);
    for (int j = 0; j < 2; ++j)
      mu[j] = rd->simple_root(1).cov[j] + rd->simple_root(2).cov[j];
    CHECK(rd->pair(rd->two_rho(), mu) == 4);
  }
}

TEST_CASE("A1: <2rho, alpha^vee> = 2 (2rho = alpha)") {
  auto rd = RootDatum::make('A', 1, Isogeny::SimplyConnected);
  CHECK(rd->two_rho() == rd->simple_root(1).ch);
  CHECK(rd->pair(rd->two_rho(), rd->simple_root(1).cov) == 2);
}

TEST_CASE("reflection closure sizes across series") {
  struct Case {
    char s;
    int r;
    int pos;
  };
  for (const Case& c : std::vector<Case>{{'A', 3, 6}, {'B', 3, 9}, {'C', 3, 9},
                                         {'D', 4, 12}, {'G', 2, 6}}) {
    auto rd = RootDatum::make(c.s, c.r, Isogeny::SimplyConnected);
    CHECK(rd->num_positive() == c.pos);
    CHECK(static_cast<int>(rd->roots().size()) == 2 * c.pos);
  }
}

TEST_CASE("simple reflections permute the roots") {
  auto rd = RootDatum::make('B', 2, Isogeny::Adjoint);
  for (int i = 1; i <= 2; ++i) {
    for (const auto& r : rd->roots()) {
      // act on the character by the inverse-transpose = the reflection itself
      Vec img = rd->simple_reflection(i).apply_transpose(r.ch);
      CHECK(rd->root_index(img) >= 0);
    }
  }
}

TEST_CASE("adjoint lattice contains coweights, sc equals coroot lattice") {
  auto adj = RootDatum::make('A', 2, Isogeny::Adjoint);
  // basis vectors are the fundamental coweights; alpha^vee has Cartan coords
  CHECK(adj->simple_root(1).cov == Vec{2, -1});
  CHECK(!adj->in_coroot_lattice(Vec{1, 0}));
  CHECK(adj->in_coroot_lattice(Vec{2, -1}));
  CHECK(adj->in_coroot_lattice(Vec{1, 1}));  // a1^vee + a2^vee = (1,1)

  auto sc = RootDatum::make('A', 2, Isogeny::SimplyConnected);
  CHECK(sc->in_coroot_lattice(Vec{1, 0}));
  CHECK(sc->in_coroot_lattice(Vec{-3, 5}));
}

TEST_CASE("determinism: identical inputs build structurally equal data") {
  auto a = RootDatum::make('C', 3, Isogeny::Adjoint);
  auto b = RootDatum::make('C', 3, Isogeny::Adjoint);
  CHECK(*a == *b);
}

TEST_CASE("unsupported types are rejected with a message") {
  CHECK_THROWS_AS(RootDatum::make('E', 6, Isogeny::SimplyConnected), UserError);
  CHECK_THROWS_AS(RootDatum::make('B', 1, Isogeny::SimplyConnected), UserError);
  CHECK_THROWS_AS(RootDatum::make('A', 0, Isogeny::SimplyConnected), UserError);
  CHECK_THROWS_AS(RootDatum::make('G', 3, Isogeny::SimplyConnected), UserError);
  CHECK_THROWS_AS(RootDatum::parse("B2"), UserError);
  CHECK_THROWS_AS(RootDatum::parse("B2:meta"), UserError);
  CHECK(RootDatum::parse("B2:adjoint")->spec_string() == "B2:adjoint");
}

TEST_CASE("dominance test") {
  auto rd = RootDatum::make('B', 2, Isogeny::Adjoint);
  CHECK(rd->is_dominant(Vec{0, 1}));
  CHECK(rd->is_dominant(Vec{0, 0}));
  CHECK(!rd->is_dominant(Vec{-1, 1}));
}
