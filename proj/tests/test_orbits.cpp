#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liestrat/catalog.hpp"
#include "liestrat/orbits.hpp"
#include "liestrat/rng.hpp"

using namespace liestrat;

namespace {

std::vector<Rational> rievec(std::initializer_list<long> xs) {
  std::vector<Rational> v;
  for (long x : xs) v.push_back(Rational(x));
  return v;
}

FlaggedAlgebra<Rational> flagged(const char* name) {
  CatalogAlgebra c = *load_catalog(name);
  return validate_jh_flag(c.algebra, *c.flag);
}

GroupWord random_word(SplitMix64& rng, int dim, int length, int height) {
  GroupWord w;
  for (int i = 0; i < length; ++i)
    w.factors.push_back({1 + int(rng.below(uint64_t(dim))), random_rational(rng, height)});
  return w;
}

}  // namespace

TEST_CASE("coadjoint_apply examples on h3") {
  FlaggedAlgebra<Rational> h3 = flagged("heisenberg3");
  std::vector<Rational> zstar = rievec({1, 0, 0});

  // t = 0 is the identity
  CoadjointResult id = coadjoint_apply(h3, rievec({0, 0, 1}), Rational(0), zstar);
  CHECK(id.is_exact);
  CHECK(id.exact == zstar);

  // exp(X): Z* -> Z* - Y*   (flag coordinates (Z, Y, X))
  CoadjointResult rx = coadjoint_apply(h3, rievec({0, 0, 1}), Rational(1), zstar);
  REQUIRE(rx.is_exact);
  CHECK(rx.exact == rievec({1, -1, 0}));

  // exp(sY): Z* -> Z* + s X*
  CoadjointResult ry = coadjoint_apply(h3, rievec({0, 1, 0}), Rational(7), zstar);
  REQUIRE(ry.is_exact);
  CHECK(ry.exact == rievec({1, 0, 7}));
}

TEST_CASE("coadjoint_apply non-nilpotent direction falls back to floats") {
  FlaggedAlgebra<Rational> axb = flagged("axb");
  // flag (Y, A): A = e2 has non-nilpotent ad
  CoadjointResult r = coadjoint_apply(axb, rievec({0, 1}), Rational(1), rievec({1, 0}));
  CHECK_FALSE(r.is_exact);
  REQUIRE(r.approx.size() == 2);
  // e^{coad(A)} scales the Y* coordinate by e^{+1} or e^{-1} depending on
  // orientation; either way the result stays on the ray {y != 0}
  CHECK(r.approx[0] != doctest::Approx(0.0));
}

TEST_CASE("group word inverse undoes the word (nilpotent, exact)") {
  SplitMix64 rng(211);
  for (const char* name : {"heisenberg3", "heisenberg5", "filiform4", "free2step3"}) {
    FlaggedAlgebra<Rational> fa = flagged(name);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<Rational> xi = random_functional(rng, fa.dim(), 5);
      GroupWord w = random_word(rng, fa.dim(), 1 + int(rng.below(5)), 4);
      std::vector<Rational> moved = apply_word_exact(fa, w, xi);
      CHECK(apply_word_exact(fa, w.inverse(), moved) == xi);
    }
  }
}

TEST_CASE("orbit_dimension examples") {
  FlaggedAlgebra<Rational> h3 = flagged("heisenberg3");
  CHECK(orbit_dimension(h3, rievec({0, 0, 0})) == 0);
  CHECK(orbit_dimension(h3, rievec({1, 0, 0})) == 2);
  FlaggedAlgebra<Rational> axb = flagged("axb");
  CHECK(orbit_dimension(axb, rievec({1, 0})) == 2);
}

TEST_CASE("orbit dimension equals 2d from the descending trace") {
  SplitMix64 rng(223);
  for (auto& [name, fa] : flagged_catalog()) {
    for (int trial = 0; trial < 80; ++trial) {
      std::vector<Rational> xi = random_functional(rng, fa.dim(), 6);
      CHECK(orbit_dimension(fa, xi) == 2 * descending_sequence(fa, xi).d);
    }
  }
}

TEST_CASE("cross-section h3 example: Z* + 3Y* - 2X* reduces to Z*") {
  FlaggedAlgebra<Rational> h3 = flagged("heisenberg3");
  std::vector<Rational> xi = rievec({1, 3, -2});
  OrbitRepresentative rep = nilpotent_cross_section(h3, xi);
  CHECK(rep.representative == rievec({1, 0, 0}));
  CHECK(rep.zeroed == std::vector<int>{2, 3});
  // the word is an exact certificate
  CHECK(apply_word_exact(h3, rep.word, xi) == rep.representative);
}

TEST_CASE("cross-section idempotence") {
  FlaggedAlgebra<Rational> h3 = flagged("heisenberg3");
  std::vector<Rational> xi = rievec({1, 0, 0});
  OrbitRepresentative rep = nilpotent_cross_section(h3, xi);
  CHECK(rep.representative == xi);
  CHECK(rep.word.factors.empty());
}

TEST_CASE("cross-section is constant on orbits") {
  SplitMix64 rng(227);
  for (const char* name : {"heisenberg3", "heisenberg5", "filiform4", "free2step3"}) {
    FlaggedAlgebra<Rational> fa = flagged(name);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<Rational> xi = random_functional(rng, fa.dim(), 4);
      OrbitRepresentative base = nilpotent_cross_section(fa, xi);
      for (int w = 0; w < 20; ++w) {
        GroupWord word = random_word(rng, fa.dim(), 1 + int(rng.below(4)), 3);
        std::vector<Rational> moved = apply_word_exact(fa, word, xi);
        OrbitRepresentative other = nilpotent_cross_section(fa, moved);
        CHECK(other.representative == base.representative);
      }
    }
  }
}

TEST_CASE("cross-section round trip and label preservation") {
  SplitMix64 rng(229);
  FlaggedAlgebra<Rational> fa = flagged("free2step3");
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Rational> xi = random_functional(rng, fa.dim(), 5);
    OrbitRepresentative rep = nilpotent_cross_section(fa, xi);
    CHECK(apply_word_exact(fa, rep.word, xi) == rep.representative);
    for (int j : rep.zeroed) CHECK(is_zero(rep.representative[j - 1]));
    CHECK(fine_index(fa, rep.representative) == fine_index(fa, xi));
  }
}

TEST_CASE("cross-section rejects non-nilpotent algebras") {
  FlaggedAlgebra<Rational> axb = flagged("axb");
  CHECK_THROWS_AS(nilpotent_cross_section(axb, rievec({1, 0})), ValidationError);
}
