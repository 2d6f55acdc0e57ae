#ifndef LIESTRAT_CATALOG_HPP
#define LIESTRAT_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "liestrat/flag.hpp"

namespace liestrat {

/// A built-in algebra: defining structure constants plus, when one exists
/// over the rationals, a canonical flag (rows in defining coordinates).
struct CatalogAlgebra {
  std::string name;
  LieAlgebra<Rational> algebra;
  std::optional<Mat<Rational>> flag;
};

/// Resolves a catalog name: abelian<n>, heisenberg3, heisenberg5, filiform4,
/// free2step3, axb, diag3 (optionally diag3:p/q for the second root), and
/// nonrational3 (no rational flag; exercises the NotFound path).
/// Returns nullopt for unknown names.
std::optional<CatalogAlgebra> load_catalog(const std::string& name);

/// Names accepted by load_catalog, for help text and iteration in tests.
std::vector<std::string> catalog_names();

/// The flagged members of the catalog (everything except nonrational3),
/// validated; handy for sweep-style tests.
std::vector<std::pair<std::string, FlaggedAlgebra<Rational>>> flagged_catalog();

}  // namespace liestrat

#endif
