#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liestrat/catalog.hpp"
#include "liestrat/rng.hpp"
#include "liestrat/subgroup.hpp"

using namespace liestrat;

namespace {

std::vector<Rational> rievec(std::initializer_list<long> xs) {
  std::vector<Rational> v;
  for (long x : xs) v.push_back(Rational(x));
  return v;
}

LieAlgebra<Rational> heisenberg() { return load_catalog("heisenberg3")->algebra; }

}  // namespace

TEST_CASE("validate_algebra accepts the standard examples") {
  CHECK(load_catalog("abelian3")->algebra.dim() == 3);
  LieAlgebra<Rational> h3 = heisenberg();
  CHECK(h3.bracket(rievec({1, 0, 0}), rievec({0, 1, 0})) == rievec({0, 0, 1}));
}

TEST_CASE("validate_algebra rejects a corrupted Heisenberg table") {
  // [X,Y] = Z plus a bogus [X,Z] = X breaks Jacobi at (X,Y,Z)
  using Table = LieAlgebra<Rational>::StructureTable;
  Table t(3, std::vector<std::vector<Rational>>(3, std::vector<Rational>(3, Rational(0))));
  t[0][1] = rievec({0, 0, 1});
  t[1][0] = rievec({0, 0, -1});
  t[0][2] = rievec({1, 0, 0});
  t[2][0] = rievec({-1, 0, 0});
  try {
    LieAlgebra<Rational>::validated({"X", "Y", "Z"}, t);
    FAIL("expected a Jacobi violation");
  } catch (const ValidationError& e) {
    CHECK(e.kind == "jacobi");
    CHECK(e.indices == std::vector<int>{1, 2, 3});
    CHECK_FALSE(e.witness.empty());
  }

  // antisymmetry violation reported before Jacobi
  Table t2(2, std::vector<std::vector<Rational>>(2, std::vector<Rational>(2, Rational(0))));
  t2[0][1] = rievec({0, 1});
  t2[1][0] = rievec({0, 1});
  try {
    LieAlgebra<Rational>::validated({"A", "B"}, t2);
    FAIL("expected an antisymmetry violation");
  } catch (const ValidationError& e) {
    CHECK(e.kind == "antisymmetry");
  }
}

TEST_CASE("validate_jh_flag on h3: (Z,Y,X) valid, (X,Y,Z) rejected at step 1") {
  CatalogAlgebra h3 = *load_catalog("heisenberg3");
  FlaggedAlgebra<Rational> fa = validate_jh_flag(h3.algebra, *h3.flag);
  CHECK(fa.dim() == 3);
  // flag coordinates: [e2, e3] = [Y, X] = -Z = -e1
  CHECK(fa.alg.structure(1, 2) == rievec({-1, 0, 0}));

  Mat<Rational> identity_flag = Mat<Rational>::identity(3);  // order (X, Y, Z)
  try {
    validate_jh_flag(h3.algebra, identity_flag);
    FAIL("expected ideal-step failure");
  } catch (const ValidationError& e) {
    CHECK(e.kind == "ideal-step");
    REQUIRE(!e.indices.empty());
    CHECK(e.indices[0] == 1);  // span(X) is not an ideal: [Y,X] = -Z
  }

  // singular flag matrix
  Mat<Rational> singular(3, 3);
  CHECK_THROWS_AS(validate_jh_flag(h3.algebra, singular), ValidationError);
}

TEST_CASE("validate_jh_flag: any order works for abelian") {
  CatalogAlgebra ab = *load_catalog("abelian4");
  SplitMix64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    Mat<Rational> rows(4, 4);
    // random invertible matrix as a flag
    do {
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) rows(i, j) = random_rational(rng, 3);
    } while (rows.rank() < 4);
    CHECK_NOTHROW(validate_jh_flag(ab.algebra, rows));
  }
}

TEST_CASE("find_jh_flag finds flags where rational ones exist") {
  // abelian: identity order accepted
  CHECK(find_jh_flag(load_catalog("abelian3")->algebra).has_value());

  // h3: search starts from the center
  std::optional<FlaggedAlgebra<Rational>> fa = find_jh_flag(heisenberg());
  REQUIRE(fa.has_value());
  CHECK(fa->flag_rows.row(0) == rievec({0, 0, 1}));  // Z first

  // ax+b: the unique 1-dimensional ideal is span(Y)
  std::optional<FlaggedAlgebra<Rational>> axb = find_jh_flag(load_catalog("axb")->algebra);
  REQUIRE(axb.has_value());
  CHECK(axb->flag_rows.row(0) == rievec({0, 1}));

  for (const char* name : {"heisenberg5", "filiform4", "free2step3", "diag3"})
    CHECK(find_jh_flag(load_catalog(name)->algebra).has_value());
}

TEST_CASE("find_jh_flag reports NotFound on irrational roots") {
  FlagSearchFailure fail;
  std::optional<FlaggedAlgebra<Rational>> fa =
      find_jh_flag(load_catalog("nonrational3")->algebra, &fail);
  CHECK_FALSE(fa.has_value());
  CHECK(fail.diagnostic.find("provide a flag explicitly") != std::string::npos);
}

TEST_CASE("roots: nilpotent algebras have all-zero roots") {
  for (const char* name : {"abelian3", "heisenberg3", "heisenberg5", "filiform4", "free2step3"}) {
    CatalogAlgebra c = *load_catalog(name);
    FlaggedAlgebra<Rational> fa = validate_jh_flag(c.algebra, *c.flag);
    CHECK(fa.alg.is_nilpotent());
    CHECK(fa.roots.is_zero_matrix());
  }
}

TEST_CASE("roots of ax+b: lambda_1(A) = 1, lambda_2 = 0") {
  CatalogAlgebra c = *load_catalog("axb");
  FlaggedAlgebra<Rational> fa = validate_jh_flag(c.algebra, *c.flag);
  // flag order (Y, A): e2 = A
  CHECK(fa.roots.row(0) == rievec({0, 1}));  // lambda_1(aA + yY) = a
  CHECK(fa.roots.row(1) == rievec({0, 0}));
}

TEST_CASE("roots satisfy the defining congruence") {
  for (auto& [name, fa] : flagged_catalog()) {
    int m = fa.dim();
    for (int j = 0; j < m; ++j)
      for (int i = 0; i < m; ++i) {
        const std::vector<Rational>& w = fa.alg.structure(i, j);  // [e_i, e_j]
        CHECK(w[j] == fa.roots(j, i));
        for (int r = j + 1; r < m; ++r) CHECK(is_zero(w[r]));
      }
    // lambda_j vanishes on [g,g]
    Subspace<Rational> derived = fa.alg.derived_subspace();
    for (int j = 0; j < m; ++j)
      for (int r = 0; r < derived.dim(); ++r)
        CHECK(is_zero(vec_dot(fa.roots.row(j), derived.basis_vector(r))));
  }
}

TEST_CASE("flag ideal property holds for catalog flags") {
  for (auto& [name, fa] : flagged_catalog()) {
    int m = fa.dim();
    for (int j = 1; j <= m; ++j) {
      Subspace<Rational> gj = fa.step(j);
      for (int i = 0; i < m; ++i)
        for (int r = 0; r < j; ++r)
          CHECK(gj.contains(fa.alg.bracket(fa.alg.basis_coord(i), fa.alg.basis_coord(r))));
    }
  }
}

TEST_CASE("ad and coad matrices") {
  CatalogAlgebra c = *load_catalog("heisenberg3");
  LieAlgebra<Rational> h3 = c.algebra;
  CHECK(h3.ad(rievec({0, 0, 0})).is_zero_matrix());
  // ad(X): Y -> Z, else 0 (defining coordinates X,Y,Z)
  Mat<Rational> adx = h3.ad(rievec({1, 0, 0}));
  Mat<Rational> expected(3, 3);
  expected(2, 1) = Rational(1);
  CHECK(adx == expected);

  SplitMix64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rational> x = random_functional(rng, 3, 5);
    CHECK(h3.coad(x) == Rational(-1) * h3.ad(x).transposed());
    // <coad(x) xi, y> = -<xi, [x, y]>
    std::vector<Rational> xi = random_functional(rng, 3, 5);
    std::vector<Rational> y = random_functional(rng, 3, 5);
    CHECK(vec_dot(h3.coad(x).apply(xi), y) == -vec_dot(xi, h3.bracket(x, y)));
  }
}

TEST_CASE("modular exponent") {
  // nilpotent => traceless ad => zero exponent
  for (const char* name : {"heisenberg3", "free2step3"}) {
    LieAlgebra<Rational> a = load_catalog(name)->algebra;
    CHECK(vec_is_zero(a.modular_exponent_row()));
  }
  // ax+b (defining basis A, Y): tr(ad(aA + yY)) = a
  LieAlgebra<Rational> axb = load_catalog("axb")->algebra;
  CHECK(axb.modular_exponent_row() == rievec({1, 0}));
  SplitMix64 rng(19);
  for (int t = 0; t < 50; ++t) {
    std::vector<Rational> v = random_functional(rng, 2, 6);
    CHECK(axb.ad(v).trace() == v[0]);
  }
  // k = g: relative exponent vanishes identically
  SubgroupDescriptor<Rational> whole =
      subgroup_from_subalgebra(axb, Subspace<Rational>::full(2));
  for (int t = 0; t < 20; ++t) {
    std::vector<Rational> v = random_functional(rng, 2, 6);
    CHECK(is_zero(rho_exponent(whole, v)));
  }
}

TEST_CASE("nilpotency classification") {
  CHECK(load_catalog("abelian2")->algebra.is_nilpotent());
  CHECK(load_catalog("heisenberg5")->algebra.is_nilpotent());
  CHECK(load_catalog("filiform4")->algebra.is_nilpotent());
  CHECK_FALSE(load_catalog("axb")->algebra.is_nilpotent());
  CHECK_FALSE(load_catalog("diag3")->algebra.is_nilpotent());
  CHECK_FALSE(load_catalog("nonrational3")->algebra.is_nilpotent());
}

TEST_CASE("complexified algebra matches rational structure") {
  LieAlgebra<Rational> h3 = heisenberg();
  LieAlgebra<GaussianRational> hc = complexify(h3);
  CHECK(hc.dim() == 3);
  std::vector<GaussianRational> x = complexify(rievec({1, 0, 0}));
  std::vector<GaussianRational> y = complexify(rievec({0, 1, 0}));
  CHECK(hc.bracket(x, y) == complexify(rievec({0, 0, 1})));
}
