#ifndef LIESTRAT_IO_HPP
#define LIESTRAT_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "liestrat/chain_report.hpp"
#include "liestrat/orbits.hpp"
#include "liestrat/polarize.hpp"

namespace liestrat {

/// Parsed algebra definition file: structure constants plus an optional flag.
struct AlgebraInput {
  std::string name;
  LieAlgebra<Rational> algebra;
  std::optional<Mat<Rational>> flag;  // rows in defining coordinates
};

/// Parses the JSON algebra format:
///   { "name": ..., "dim": m, "basis": [names...],
///     "brackets": [{"i": 1, "j": 2, "coeffs": ["1", "-1/2", 0, ...]}, ...],
///     "flag": [names...] | [indices...] | [[rational rows]...]  (optional) }
/// Unlisted brackets are zero; entries need i < j (antisymmetry is implied).
/// Rationals are strings "p/q" or plain integers.  Throws ValidationError
/// with field diagnostics on malformed input.
AlgebraInput parse_algebra_json(const std::string& text);

/// Loads either "catalog:<name>" or a JSON file from disk.
AlgebraInput load_algebra(const std::string& path);

/// Parses a comma-separated functional "1,0,-3/2" of the expected length.
std::vector<Rational> parse_functional(const std::string& text, int dim);

std::string label_to_json(const UltrafineLabel& label, const FineIndex& fine);
std::string trace_to_json(const PolarizationTrace<Rational>& trace,
                          const PolarizationCheck& check, const PukanszkyReport& puk);
std::string orbit_rep_to_json(const OrbitRepresentative& rep);

/// ReportDocument serialization; rationals travel as strings so the document
/// round-trips exactly.
std::string report_to_json(const ChainReport& report);
ChainReport report_from_json(const std::string& text);

bool operator==(const ChainReport& a, const ChainReport& b);

}  // namespace liestrat

#endif
