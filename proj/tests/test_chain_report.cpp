#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liestrat/catalog.hpp"
#include "liestrat/chain_report.hpp"
#include "liestrat/orbits.hpp"

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

SamplingConfig small_sampling(uint64_t seed = 0) {
  SamplingConfig cfg;
  cfg.seed = seed;
  cfg.samples = 400;
  cfg.height = 6;
  return cfg;
}

PerturbConfig small_perturb() {
  PerturbConfig cfg;
  cfg.directions = 4;
  cfg.depth = 10;
  return cfg;
}

}  // namespace

TEST_CASE("enumerate_layers: abelian has the single character layer") {
  LayerCatalog cat = enumerate_layers(flagged("abelian3"), small_sampling());
  REQUIRE(cat.size() == 1);
  const LayerEntry& e = cat.layers().begin()->second;
  CHECK(e.is_character);
  CHECK(e.orbit_dim == 0);
  CHECK(e.label.e.empty());
}

TEST_CASE("enumerate_layers: h3 has exactly the two known layers") {
  LayerCatalog cat = enumerate_layers(flagged("heisenberg3"), small_sampling());
  REQUIRE(cat.size() == 2);
  bool saw_generic = false, saw_character = false;
  for (const auto& [label, entry] : cat.layers()) {
    if (label.is_character()) {
      saw_character = true;
      CHECK(entry.fine == FineIndex({1, 2, 3}));
    } else {
      saw_generic = true;
      CHECK(label.e == std::vector<int>{2, 3});
      CHECK(entry.fine == FineIndex({1, 2, 1}));
      CHECK(entry.orbit_dim == 2);
    }
  }
  CHECK(saw_generic);
  CHECK(saw_character);
}

TEST_CASE("enumerate_layers: axb has exactly the two known layers") {
  LayerCatalog cat = enumerate_layers(flagged("axb"), small_sampling());
  REQUIRE(cat.size() == 2);
  for (const auto& [label, entry] : cat.layers()) {
    if (label.is_character()) {
      CHECK(entry.fine == FineIndex({1, 2}));
    } else {
      CHECK(label.e == std::vector<int>{1, 2});
      CHECK(label.b == std::vector<int>{1});
      CHECK(entry.fine == FineIndex({1, 0}));
    }
  }
}

TEST_CASE("enumerate_layers: free2step3 finds the four strata") {
  // Hand enumeration over the grid {-1,0,1}^6: with a = xi(Z12), b = xi(Z13),
  // c = xi(Z23), the strata are a != 0; a = 0, b != 0; a = b = 0, c != 0; and
  // the characters a = b = c = 0.
  SamplingConfig cfg = small_sampling();
  cfg.samples = 200;
  LayerCatalog cat = enumerate_layers(flagged("free2step3"), cfg);
  REQUIRE(cat.size() == 4);
  std::vector<UltrafineLabel> expected = {
      UltrafineLabel({4, 5}, {5}, {}),
      UltrafineLabel({4, 6}, {6}, {}),
      UltrafineLabel({5, 6}, {6}, {}),
      UltrafineLabel({}, {}, {}),
  };
  for (const UltrafineLabel& label : expected) CHECK(cat.layers().count(label) == 1);
  CHECK(cat.layers().at(expected[0]).fine == FineIndex({1, 2, 3, 4, 3, 4}));
  CHECK(cat.layers().at(expected[1]).fine == FineIndex({1, 2, 3, 4, 5, 4}));
  CHECK(cat.layers().at(expected[2]).fine == FineIndex({1, 2, 3, 4, 5, 4}));
}

TEST_CASE("enumerate_layers: diag3 strata") {
  LayerCatalog cat = enumerate_layers(flagged("diag3"), small_sampling());
  REQUIRE(cat.size() == 3);
  CHECK(cat.layers().count(UltrafineLabel({1, 3}, {3}, {1})) == 1);
  CHECK(cat.layers().count(UltrafineLabel({2, 3}, {3}, {1})) == 1);
  CHECK(cat.layers().count(UltrafineLabel({}, {}, {})) == 1);
}

TEST_CASE("witnesses classify back to their layer") {
  LayerCatalog cat = enumerate_layers(flagged("filiform4"), small_sampling());
  FlaggedAlgebra<Rational> fa = flagged("filiform4");
  Subspace<Rational> derived = fa.alg.derived_subspace();
  for (const auto& [label, entry] : cat.layers())
    for (const auto& w : entry.witnesses) {
      CHECK(ultrafine_label(fa, w) == label);
      CHECK(orbit_dimension(fa, w) == entry.orbit_dim);
      CHECK((label.orbit_dim() == 0) == entry.is_character);
      // characters are exactly the functionals vanishing on [g,g]
      bool vanishes = true;
      for (int r = 0; r < derived.dim(); ++r)
        if (!is_zero(vec_dot(w, derived.basis_vector(r)))) vanishes = false;
      CHECK(vanishes == entry.is_character);
    }
}

TEST_CASE("label sets are monotone across seeds") {
  FlaggedAlgebra<Rational> fa = flagged("free2step3");
  LayerCatalog a = enumerate_layers(fa, small_sampling(1));
  LayerCatalog b = enumerate_layers(fa, small_sampling(2));
  // the sign grid already hits every stratum, so the label sets agree
  CHECK(a.size() == b.size());
  for (const auto& [label, entry] : a.layers()) CHECK(b.layers().count(label) == 1);
}

TEST_CASE("order_layers: generic first, characters last") {
  FlaggedAlgebra<Rational> h3 = flagged("heisenberg3");
  std::vector<LayerEntry> ordered = order_layers(enumerate_layers(h3, small_sampling()));
  REQUIRE(ordered.size() == 2);
  CHECK(ordered[0].orbit_dim == 2);
  CHECK(ordered[1].is_character);

  std::vector<LayerEntry> f23 =
      order_layers(enumerate_layers(flagged("free2step3"), small_sampling()));
  REQUIRE(f23.size() == 4);
  CHECK(f23[0].label == UltrafineLabel({4, 5}, {5}, {}));
  CHECK(f23[1].label == UltrafineLabel({4, 6}, {6}, {}));
  CHECK(f23[2].label == UltrafineLabel({5, 6}, {6}, {}));
  CHECK(f23[3].is_character);
}

TEST_CASE("single-layer catalog orders trivially") {
  std::vector<LayerEntry> ordered =
      order_layers(enumerate_layers(flagged("abelian2"), small_sampling()));
  CHECK(ordered.size() == 1);
  CHECK(ordered[0].is_character);
}

TEST_CASE("verify_openness passes on the catalog") {
  for (auto& [name, fa] : flagged_catalog()) {
    CAPTURE(name);
    std::vector<LayerEntry> ordered = order_layers(enumerate_layers(fa, small_sampling()));
    OpennessReport rep = verify_openness(fa, ordered, small_perturb());
    CHECK(rep.checked > 0);
    CHECK(rep.violations.empty());
  }
}

TEST_CASE("openness: perturbing a character witness may only move earlier") {
  FlaggedAlgebra<Rational> h3 = flagged("heisenberg3");
  std::vector<LayerEntry> ordered = order_layers(enumerate_layers(h3, small_sampling()));
  // X* plus a small multiple of Z* lands in the generic (earlier) layer
  std::vector<Rational> moved = vec_add(rievec({0, 0, 1}),
                                        vec_scale(rational(1, 1024), rievec({1, 0, 0})));
  UltrafineLabel observed = ultrafine_label(h3, moved);
  CHECK(observed == ordered[0].label);
}

TEST_CASE("an intentionally wrong order is caught by the openness check") {
  FlaggedAlgebra<Rational> h3 = flagged("heisenberg3");
  std::vector<LayerEntry> ordered = order_layers(enumerate_layers(h3, small_sampling()));
  std::swap(ordered[0], ordered[1]);  // characters first: their union is not open
  OpennessReport rep = verify_openness(h3, ordered, small_perturb());
  CHECK_FALSE(rep.violations.empty());
  CHECK(rep.violations[0].layer_index == 1);
}

TEST_CASE("layer order respects closure on R x| h3 with weights +1/-1") {
  // [A,X] = X, [A,Y] = -Y, [X,Y] = Z; flag (Z, Y, X, A).  The open stratum
  // {xi(Z) != 0} carries b = {} while its two boundary strata of the same
  // orbit dimension carry b = {1}; ordering by ascending card(b) is what
  // keeps the unions open here.
  using Table = LieAlgebra<Rational>::StructureTable;
  Table t(4, std::vector<std::vector<Rational>>(4, std::vector<Rational>(4, Rational(0))));
  auto set = [&](int i, int j, std::initializer_list<long> w) {
    t[i][j] = rievec(w);
    for (int r = 0; r < 4; ++r) t[j][i][r] = -t[i][j][r];
  };
  set(0, 1, {0, 1, 0, 0});    // [A, X] = X
  set(0, 2, {0, 0, -1, 0});   // [A, Y] = -Y
  set(1, 2, {0, 0, 0, 1});    // [X, Y] = Z
  LieAlgebra<Rational> alg = LieAlgebra<Rational>::validated({"A", "X", "Y", "Z"}, t);
  Mat<Rational> flag(4, 4);
  flag(0, 3) = Rational(1);  // Z
  flag(1, 2) = Rational(1);  // Y
  flag(2, 1) = Rational(1);  // X
  flag(3, 0) = Rational(1);  // A
  FlaggedAlgebra<Rational> fa = validate_jh_flag(alg, flag);

  std::vector<LayerEntry> ordered = order_layers(enumerate_layers(fa, small_sampling()));
  REQUIRE(ordered.size() == 4);
  CHECK(ordered[0].label == UltrafineLabel({2, 3}, {3}, {}));
  CHECK(ordered[1].label == UltrafineLabel({2, 4}, {4}, {1}));
  CHECK(ordered[2].label == UltrafineLabel({3, 4}, {4}, {1}));
  CHECK(ordered[3].is_character);
  OpennessReport rep = verify_openness(fa, ordered, small_perturb());
  CHECK(rep.violations.empty());
}

TEST_CASE("solvability_report end to end") {
  ChainReport rep = solvability_report(flagged("heisenberg3"), "heisenberg3",
                                       small_sampling(), small_perturb());
  CHECK(rep.chain_length == 2);
  CHECK(rep.nilpotent);
  REQUIRE(rep.layers.size() == 2);
  CHECK(rep.layers[0].fiber == "K(H), H infinite-dimensional");
  CHECK(rep.layers[1].fiber == "C (character)");
  CHECK(rep.openness.violations.empty());
  REQUIRE(rep.disclaimers.size() == 2);
  CHECK(rep.disclaimers[0] == "chain_length is an upper bound on minimal length");
  CHECK(rep.disclaimers[1] == "layer set is a sampled lower bound");

  ChainReport ab = solvability_report(flagged("abelian4"), "abelian4", small_sampling(),
                                      small_perturb());
  CHECK(ab.chain_length == 1);
  CHECK(ab.layers[0].is_character);
}

TEST_CASE("probes are classified and can only extend the catalog") {
  SamplingConfig cfg = small_sampling();
  cfg.samples = 0;
  cfg.probes.push_back(rievec({1, 0, 0}));
  cfg.probes.push_back(rievec({0, 0, 1}));
  LayerCatalog cat = enumerate_layers(flagged("heisenberg3"), cfg);
  CHECK(cat.size() == 2);
}
