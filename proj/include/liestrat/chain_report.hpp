#ifndef LIESTRAT_CHAIN_REPORT_HPP
#define LIESTRAT_CHAIN_REPORT_HPP

#include <map>
#include <string>
#include <vector>

#include "liestrat/labels.hpp"
#include "liestrat/rng.hpp"

namespace liestrat {

struct SamplingConfig {
  uint64_t seed = 0;
  int samples = 2000;
  int height = 8;                 // coordinate height bound for random functionals
  long grid_point_limit = 250000; // sign grid falls back to sampling past this
  std::vector<std::vector<Rational>> probes;  // user-supplied functionals
};

/// One observed ultrafine layer with its witnesses.
struct LayerEntry {
  UltrafineLabel label;
  FineIndex fine;
  int orbit_dim = 0;
  bool is_character = false;
  long sample_count = 0;
  std::vector<std::vector<Rational>> witnesses;  // capped, first-seen order
};

/// Map from observed labels to layer data.  Sampling only ever produces a
/// LOWER bound on the true layer set; consumers must treat absence as
/// "not observed", never as "empty".
class LayerCatalog {
public:
  static constexpr int kWitnessCap = 5;

  template <typename FA>
  void insert(const FA& fa, const std::vector<Rational>& xi) {
    UltrafineLabel label = ultrafine_label(fa, xi);
    FineIndex fine = fine_index(fa, xi);
    auto it = layers_.find(label);
    if (it == layers_.end()) {
      LayerEntry e;
      e.label = label;
      e.fine = fine;
      e.orbit_dim = label.orbit_dim();
      e.is_character = label.is_character();
      e.sample_count = 1;
      e.witnesses.push_back(xi);
      layers_.emplace(label, std::move(e));
      return;
    }
    LayerEntry& e = it->second;
    // (e, j) determines the fine index; a mismatch means an implementation bug.
    if (e.fine != fine)
      throw InvariantViolation("fine index " + fine.to_string() + " disagrees with " +
                               e.fine.to_string() + " for label " + label.to_string());
    ++e.sample_count;
    if (int(e.witnesses.size()) < kWitnessCap &&
        std::find(e.witnesses.begin(), e.witnesses.end(), xi) == e.witnesses.end())
      e.witnesses.push_back(xi);
  }

  const std::map<UltrafineLabel, LayerEntry>& layers() const { return layers_; }
  size_t size() const { return layers_.size(); }

private:
  std::map<UltrafineLabel, LayerEntry> layers_;
};

/// Classifies (a) `samples` random bounded-height functionals, (b) the full
/// sign-pattern grid {-1,0,1}^m (so low-height degenerate strata are always
/// hit), and (c) the user probes.  Deterministic given the seed.
inline LayerCatalog enumerate_layers(const FlaggedAlgebra<Rational>& fa,
                                     const SamplingConfig& cfg) {
  int m = fa.dim();
  LayerCatalog catalog;
  SplitMix64 rng(cfg.seed);

  for (int s = 0; s < cfg.samples; ++s)
    catalog.insert(fa, random_functional(rng, m, cfg.height));

  long grid_points = 1;
  bool grid_complete = true;
  for (int i = 0; i < m; ++i) {
    grid_points *= 3;
    if (grid_points > cfg.grid_point_limit) {
      grid_complete = false;
      break;
    }
  }
  if (grid_complete) {
    for (long p = 0; p < grid_points; ++p) {
      std::vector<Rational> xi(m, Rational(0));
      long v = p;
      for (int i = 0; i < m; ++i) {
        xi[i] = Rational(v % 3 - 1);
        v /= 3;
      }
      catalog.insert(fa, xi);
    }
  } else {
    // grid too large to walk: draw 3^10 random sign patterns instead
    SplitMix64 grid_rng(cfg.seed ^ 0x5157ULL);
    for (long p = 0; p < 59049; ++p) {
      std::vector<Rational> xi(m, Rational(0));
      for (int i = 0; i < m; ++i) xi[i] = Rational(long(grid_rng.below(3)) - 1);
      catalog.insert(fa, xi);
    }
  }

  for (const auto& probe : cfg.probes) {
    if (int(probe.size()) != m)
      throw DimensionMismatch("probe functional has wrong length");
    catalog.insert(fa, probe);
  }
  return catalog;
}

/// Total order used to arrange layers into an increasing chain of invariant
/// open sets: descending orbit dimension (= ascending stabilizer dimension),
/// then ascending card(b), then the fine multi-index lexicographically, then
/// the label itself as a deterministic tiebreak.  The character layer, having
/// the maximal stabilizer, always comes last.  Ascending card(b) because the
/// root-kernel equality behind b is a degeneration: the intersection
/// dimension it compares can only jump up on boundary strata (e.g. on
/// R ⋉ h3 with weights ±1, the open stratum has b = {} and its two boundary
/// strata of equal orbit dimension have b = {1}).  The empirical openness
/// check below is the safeguard for this choice of order.
inline std::vector<LayerEntry> order_layers(const LayerCatalog& catalog) {
  std::vector<LayerEntry> out;
  for (const auto& [label, entry] : catalog.layers()) out.push_back(entry);
  std::sort(out.begin(), out.end(), [](const LayerEntry& a, const LayerEntry& b) {
    if (a.orbit_dim != b.orbit_dim) return a.orbit_dim > b.orbit_dim;
    if (a.label.b.size() != b.label.b.size()) return a.label.b.size() < b.label.b.size();
    if (a.fine != b.fine) return a.fine < b.fine;
    return a.label < b.label;
  });
  return out;
}

struct PerturbConfig {
  int directions = 8;  // perturbation directions per witness
  int depth = 20;      // scales 1/2, 1/4, ..., 1/2^depth
  int height = 4;      // height bound of the direction vector
  uint64_t seed = 1;
};

struct OpennessViolation {
  int layer_index = 0;  // 1-based position of the witness layer
  std::vector<Rational> witness;
  std::vector<Rational> delta;  // already scaled
  int scale_log2 = 0;
  UltrafineLabel observed;
  int observed_index = 0;  // 1-based; -1 when the label was never enumerated
};

struct OpennessReport {
  long checked = 0;
  std::vector<OpennessViolation> violations;
};

/// For each witness of layer L_r and perturbation direction delta, the points
/// xi + delta/2^s are classified along the shrinking scales s = 1..depth; the
/// classification at the deepest scale must land in some L_s with s <= r (the
/// union of the first r layers is supposed to be open, and openness is a
/// limit statement — at large scales a perturbation can legitimately cross
/// strata, e.g. by exact cancellation of a coordinate).  Violations are
/// reported, never thrown.
inline OpennessReport verify_openness(const FlaggedAlgebra<Rational>& fa,
                                      const std::vector<LayerEntry>& ordered,
                                      const PerturbConfig& cfg) {
  int m = fa.dim();
  std::map<UltrafineLabel, int> index_of;
  for (size_t r = 0; r < ordered.size(); ++r) index_of[ordered[r].label] = int(r) + 1;

  OpennessReport rep;
  SplitMix64 rng(cfg.seed);
  for (size_t r = 0; r < ordered.size(); ++r) {
    for (const auto& witness : ordered[r].witnesses) {
      for (int dir = 0; dir < cfg.directions; ++dir) {
        std::vector<Rational> delta = random_nonzero_functional(rng, m, cfg.height);
        Rational scale(1);
        for (int s = 1; s <= cfg.depth; ++s) {
          scale /= 2;
          std::vector<Rational> moved = vec_add(witness, vec_scale(scale, delta));
          UltrafineLabel observed = ultrafine_label(fa, moved);
          ++rep.checked;
          auto it = index_of.find(observed);
          int idx = (it == index_of.end()) ? -1 : it->second;
          if (s == cfg.depth && (idx < 0 || idx > int(r) + 1)) {
            OpennessViolation v;
            v.layer_index = int(r) + 1;
            v.witness = witness;
            v.delta = vec_scale(scale, delta);
            v.scale_log2 = s;
            v.observed = observed;
            v.observed_index = idx;
            rep.violations.push_back(std::move(v));
          }
        }
      }
    }
  }
  return rep;
}

/// One layer of the emitted chain, with its predicted subquotient shape.
struct ChainLayer {
  UltrafineLabel label;
  FineIndex fine;
  int orbit_dim = 0;
  bool is_character = false;
  long sample_count = 0;
  std::vector<std::vector<Rational>> witnesses;
  std::string gamma;  // orbit-space descriptor
  std::string fiber;  // "K(H), H infinite-dimensional" or "C (character)"
};

struct ChainReport {
  std::string algebra_name;
  int dim = 0;
  bool nilpotent = false;
  Mat<Rational> flag_rows;
  Mat<Rational> roots;
  std::vector<ChainLayer> layers;
  int chain_length = 0;
  OpennessReport openness;
  std::vector<std::string> disclaimers;
  SamplingConfig sampling;
  PerturbConfig perturb;
};

/// Full pipeline: enumerate, order, verify, describe.  The emitted chain
/// mirrors the predicted composition series of the group C*-algebra, one
/// subquotient C_0(Gamma_r, K(H_r)) per layer; chain_length is an upper bound
/// on the minimal such length and the layer list is a sampled lower bound on
/// the true layer set.
inline ChainReport solvability_report(const FlaggedAlgebra<Rational>& fa,
                                      const std::string& name, const SamplingConfig& sampling,
                                      const PerturbConfig& perturb) {
  LayerCatalog catalog = enumerate_layers(fa, sampling);
  std::vector<LayerEntry> ordered = order_layers(catalog);

  ChainReport rep;
  rep.algebra_name = name;
  rep.dim = fa.dim();
  rep.nilpotent = fa.alg.is_nilpotent();
  rep.flag_rows = fa.flag_rows;
  rep.roots = fa.roots;
  rep.sampling = sampling;
  rep.perturb = perturb;
  rep.chain_length = int(ordered.size());
  for (size_t r = 0; r < ordered.size(); ++r) {
    const LayerEntry& e = ordered[r];
    ChainLayer layer;
    layer.label = e.label;
    layer.fine = e.fine;
    layer.orbit_dim = e.orbit_dim;
    layer.is_character = e.is_character;
    layer.sample_count = e.sample_count;
    layer.witnesses = e.witnesses;
    layer.gamma = "layer_" + std::to_string(r + 1) + "/G";
    layer.fiber = e.is_character ? "C (character)" : "K(H), H infinite-dimensional";
    rep.layers.push_back(std::move(layer));
  }
  rep.openness = verify_openness(fa, ordered, perturb);
  rep.disclaimers = {"chain_length is an upper bound on minimal length",
                     "layer set is a sampled lower bound"};
  return rep;
}

}  // namespace liestrat

#endif
