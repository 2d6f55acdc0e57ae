// liestrat command-line interface.
//
// Subcommands expose each stage of the pipeline: `check` validates an algebra
// and its flag, `layer` classifies a functional, `polarize` builds the Vergne
// polarization with its descending trace, `orbit-rep` computes the canonical
// orbit representative on nilpotent algebras, and `report` emits the full
// layer chain as JSON.
//
// Exit codes: 0 success, 1 usage, 2 validation failure, 3 internal invariant
// violation, 4 openness violation detected in a report.

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "liestrat/catalog.hpp"
#include "liestrat/io.hpp"

namespace {

using namespace liestrat;

struct FunctionalOptions {
  std::string text;
  bool defining_basis = false;
};

std::vector<Rational> read_functional(const FlaggedAlgebra<Rational>& fa,
                                      const FunctionalOptions& opt) {
  std::vector<Rational> xi = parse_functional(opt.text, fa.dim());
  if (opt.defining_basis) xi = fa.functional_to_flag(xi);
  return xi;
}

FlaggedAlgebra<Rational> require_flag(const AlgebraInput& input, bool verbose) {
  if (input.flag) return validate_jh_flag(input.algebra, *input.flag);
  FlagSearchFailure fail;
  std::optional<FlaggedAlgebra<Rational>> found = find_jh_flag(input.algebra, &fail);
  if (!found)
    throw ValidationError("no-flag", {}, "",
                          "no Jordan-Hölder flag found: " + fail.diagnostic);
  if (verbose) std::cerr << "note: flag found by search\n";
  return *found;
}

int run_check(const std::string& path, bool verbose) {
  AlgebraInput input = load_algebra(path);
  std::cerr << "algebra '" << input.name << "' (dim " << input.algebra.dim()
            << "): structure constants valid\n";
  bool nilpotent = input.algebra.is_nilpotent();
  FlagSearchFailure fail;
  std::optional<FlaggedAlgebra<Rational>> fa;
  if (input.flag) {
    fa = validate_jh_flag(input.algebra, *input.flag);
    std::cerr << "flag: provided, valid\n";
  } else {
    fa = find_jh_flag(input.algebra, &fail);
    std::cerr << (fa ? "flag: found by search\n" : "flag: not found\n");
  }
  if (fa) {
    std::cerr << "classification: "
              << (nilpotent ? "nilpotent" : "completely solvable with given flag") << "\n";
    std::cerr << "roots:\n";
    for (int j = 0; j < fa->dim(); ++j)
      std::cerr << "  lambda_" << (j + 1) << " = " << vec_to_string(fa->roots.row(j)) << "\n";
    if (verbose) {
      std::cerr << "flag rows (defining coordinates):\n";
      for (int i = 0; i < fa->dim(); ++i)
        std::cerr << "  e_" << (i + 1) << " = " << vec_to_string(fa->flag_rows.row(i)) << "\n";
    }
    return 0;
  }
  std::cerr << "classification: flag not found (" << fail.diagnostic << ")\n"
            << "note: this does not certify the algebra is not completely solvable\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"layer structure of coadjoint duals of completely solvable Lie algebras"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string path;
  FunctionalOptions fopt;
  bool verbose = false;
  SamplingConfig sampling;
  PerturbConfig perturb;
  double tolerance = 1e-9;
  std::vector<std::string> probe_texts;

  app.add_flag("--verbose,-v", verbose, "human-readable summary on stderr");

  CLI::App* check = app.add_subcommand("check", "validate an algebra file or catalog entry");
  check->add_option("path", path, "JSON file or catalog:<name>")->required();

  CLI::App* layer = app.add_subcommand("layer", "ultrafine layer label of a functional");
  layer->add_option("path", path)->required();
  layer->add_option("functional", fopt.text, "comma-separated rationals")->required();
  layer->add_flag("--defining-basis", fopt.defining_basis,
                  "functional is given on the defining basis (default: flag basis)");

  CLI::App* polarize = app.add_subcommand("polarize", "Vergne polarization and trace");
  polarize->add_option("path", path)->required();
  polarize->add_option("functional", fopt.text)->required();
  polarize->add_flag("--defining-basis", fopt.defining_basis);
  polarize->add_option("--samples", sampling.samples, "Pukánszky sample count");
  polarize->add_option("--tolerance", tolerance, "numeric tolerance (non-nilpotent checks)");

  CLI::App* orbit = app.add_subcommand("orbit-rep", "canonical orbit representative (nilpotent)");
  orbit->add_option("path", path)->required();
  orbit->add_option("functional", fopt.text)->required();
  orbit->add_flag("--defining-basis", fopt.defining_basis);

  CLI::App* report = app.add_subcommand("report", "full layer chain report as JSON");
  report->add_option("path", path)->required();
  report->add_option("--samples", sampling.samples, "random samples (default 2000)");
  report->add_option("--seed", sampling.seed, "sampling seed (default 0)");
  report->add_option("--height", sampling.height, "coordinate height bound (default 8)");
  report->add_option("--perturb", perturb.depth, "perturbation depth (default 20)");
  report->add_option("--tolerance", tolerance, "numeric tolerance (unused by exact paths)");
  report->add_option("--probe", probe_texts, "extra functional to classify (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (check->parsed()) return run_check(path, verbose);

    AlgebraInput input = load_algebra(path);
    FlaggedAlgebra<Rational> fa = require_flag(input, verbose);

    if (layer->parsed()) {
      std::vector<Rational> xi = read_functional(fa, fopt);
      std::cout << label_to_json(ultrafine_label(fa, xi), fine_index(fa, xi)) << "\n";
      return 0;
    }
    if (polarize->parsed()) {
      std::vector<Rational> xi = read_functional(fa, fopt);
      PolarizationTrace<Rational> tr = descending_sequence(fa, xi);
      PolarizationCheck pc = check_polarization(fa, xi, tr.polarization());
      PukanszkyReport puk = pukanszky_containment_check(fa, xi, tr.polarization(),
                                                        sampling.samples, tolerance);
      std::cout << trace_to_json(tr, pc, puk) << "\n";
      return 0;
    }
    if (orbit->parsed()) {
      std::vector<Rational> xi = read_functional(fa, fopt);
      std::cout << orbit_rep_to_json(nilpotent_cross_section(fa, xi)) << "\n";
      return 0;
    }
    if (report->parsed()) {
      for (const std::string& text : probe_texts)
        sampling.probes.push_back(parse_functional(text, fa.dim()));
      perturb.seed = sampling.seed + 1;
      ChainReport rep = solvability_report(fa, input.name, sampling, perturb);
      std::cout << report_to_json(rep) << "\n";
      if (verbose) {
        std::cerr << "algebra " << rep.algebra_name << ": " << rep.chain_length
                  << " layer(s); openness checked " << rep.openness.checked << " points, "
                  << rep.openness.violations.size() << " violation(s)\n";
        for (const ChainLayer& l : rep.layers)
          std::cerr << "  " << l.label.to_string() << "  k=" << l.fine.to_string()
                    << "  orbit_dim=" << l.orbit_dim << (l.is_character ? "  [characters]" : "")
                    << "\n";
      }
      return rep.openness.violations.empty() ? 0 : 4;
    }
  } catch (const InvariantViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DimensionMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
