#include "liestrat/catalog.hpp"

#include <utility>

namespace liestrat {

namespace {

struct BracketDef {
  int i, j;  // 1-based, i < j
  std::vector<Rational> coeffs;
};

LieAlgebra<Rational> make_algebra(std::vector<std::string> names,
                                  const std::vector<BracketDef>& brackets) {
  int m = int(names.size());
  LieAlgebra<Rational>::StructureTable table(
      m, std::vector<std::vector<Rational>>(m, std::vector<Rational>(m, Rational(0))));
  for (const BracketDef& b : brackets) {
    table[b.i - 1][b.j - 1] = b.coeffs;
    std::vector<Rational> neg(m, Rational(0));
    for (int r = 0; r < m; ++r) neg[r] = -b.coeffs[r];
    table[b.j - 1][b.i - 1] = neg;
  }
  return LieAlgebra<Rational>::validated(std::move(names), std::move(table));
}

Mat<Rational> permutation_flag(const std::vector<int>& order) {
  int m = int(order.size());
  Mat<Rational> f(m, m);
  for (int i = 0; i < m; ++i) f(i, order[i] - 1) = Rational(1);
  return f;
}

std::vector<Rational> unit(int m, int r) {
  std::vector<Rational> v(m, Rational(0));
  v[r - 1] = Rational(1);
  return v;
}

CatalogAlgebra abelian(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("a" + std::to_string(i));
  CatalogAlgebra c;
  c.name = "abelian" + std::to_string(n);
  c.algebra = make_algebra(std::move(names), {});
  c.flag = Mat<Rational>::identity(n);
  return c;
}

CatalogAlgebra heisenberg3() {
  // [X, Y] = Z; flag (Z, Y, X)
  CatalogAlgebra c;
  c.name = "heisenberg3";
  c.algebra = make_algebra({"X", "Y", "Z"}, {{1, 2, unit(3, 3)}});
  c.flag = permutation_flag({3, 2, 1});
  return c;
}

CatalogAlgebra heisenberg5() {
  // [X1, Y1] = Z, [X2, Y2] = Z; flag (Z, Y1, Y2, X1, X2)
  CatalogAlgebra c;
  c.name = "heisenberg5";
  c.algebra = make_algebra({"X1", "X2", "Y1", "Y2", "Z"},
                           {{1, 3, unit(5, 5)}, {2, 4, unit(5, 5)}});
  c.flag = permutation_flag({5, 3, 4, 1, 2});
  return c;
}

CatalogAlgebra filiform4() {
  // [X, Y1] = Y2, [X, Y2] = Y3; flag (Y3, Y2, Y1, X)
  CatalogAlgebra c;
  c.name = "filiform4";
  c.algebra = make_algebra({"X", "Y1", "Y2", "Y3"},
                           {{1, 2, unit(4, 3)}, {1, 3, unit(4, 4)}});
  c.flag = permutation_flag({4, 3, 2, 1});
  return c;
}

CatalogAlgebra free2step3() {
  // [X1,X2]=Z12, [X1,X3]=Z13, [X2,X3]=Z23; flag (Z12, Z13, Z23, X1, X2, X3)
  CatalogAlgebra c;
  c.name = "free2step3";
  c.algebra = make_algebra({"X1", "X2", "X3", "Z12", "Z13", "Z23"},
                           {{1, 2, unit(6, 4)}, {1, 3, unit(6, 5)}, {2, 3, unit(6, 6)}});
  c.flag = permutation_flag({4, 5, 6, 1, 2, 3});
  return c;
}

CatalogAlgebra axb() {
  // [A, Y] = Y; flag (Y, A)
  CatalogAlgebra c;
  c.name = "axb";
  c.algebra = make_algebra({"A", "Y"}, {{1, 2, unit(2, 2)}});
  c.flag = permutation_flag({2, 1});
  return c;
}

CatalogAlgebra diag3(const Rational& lambda) {
  // [A, X] = X, [A, Y] = lambda * Y; flag (X, Y, A)
  CatalogAlgebra c;
  c.name = "diag3";
  std::vector<Rational> ly(3, Rational(0));
  ly[2] = lambda;
  c.algebra = make_algebra({"A", "X", "Y"}, {{1, 2, unit(3, 2)}, {1, 3, ly}});
  c.flag = permutation_flag({2, 3, 1});
  return c;
}

CatalogAlgebra nonrational3() {
  // [A, X] = Y, [A, Y] = 2X: the roots on span{X, Y} are ±sqrt(2), so no
  // rational Jordan-Hölder flag exists even though the algebra is completely
  // solvable over the reals.
  CatalogAlgebra c;
  c.name = "nonrational3";
  std::vector<Rational> two_x(3, Rational(0));
  two_x[1] = Rational(2);
  c.algebra = make_algebra({"A", "X", "Y"}, {{1, 2, unit(3, 3)}, {1, 3, two_x}});
  c.flag = std::nullopt;
  return c;
}

}  // namespace

std::optional<CatalogAlgebra> load_catalog(const std::string& name) {
  if (name.rfind("abelian", 0) == 0) {
    std::string rest = name.substr(7);
    if (rest.empty()) return std::nullopt;
    for (char ch : rest)
      if (!isdigit(static_cast<unsigned char>(ch))) return std::nullopt;
    int n = std::stoi(rest);
    if (n < 1 || n > 12) return std::nullopt;
    return abelian(n);
  }
  if (name == "heisenberg3") return heisenberg3();
  if (name == "heisenberg5") return heisenberg5();
  if (name == "filiform4") return filiform4();
  if (name == "free2step3") return free2step3();
  if (name == "axb") return axb();
  if (name == "diag3") return diag3(Rational(2));
  if (name.rfind("diag3:", 0) == 0) {
    Rational lambda = parse_rational(name.substr(6));
    return diag3(lambda);
  }
  if (name == "nonrational3") return nonrational3();
  return std::nullopt;
}

std::vector<std::string> catalog_names() {
  return {"abelian<n>", "heisenberg3", "heisenberg5", "filiform4",
          "free2step3", "axb",         "diag3",       "diag3:<p/q>",
          "nonrational3"};
}

std::vector<std::pair<std::string, FlaggedAlgebra<Rational>>> flagged_catalog() {
  std::vector<std::pair<std::string, FlaggedAlgebra<Rational>>> out;
  for (const char* name : {"abelian3", "heisenberg3", "heisenberg5", "filiform4",
                           "free2step3", "axb", "diag3"}) {
    CatalogAlgebra c = *load_catalog(name);
    out.emplace_back(c.name, validate_jh_flag(c.algebra, *c.flag));
  }
  return out;
}

}  // namespace liestrat
