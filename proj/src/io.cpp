#include "liestrat/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "liestrat/catalog.hpp"

namespace liestrat {

namespace {

using Json = nlohmann::ordered_json;

Rational json_rational(const Json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(long(v.get<int64_t>()));
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw ValidationError("parse", {}, v.dump(),
                        where + ": expected integer or \"p/q\" string");
}

std::vector<Rational> json_rational_row(const Json& v, const std::string& where) {
  if (!v.is_array()) throw ValidationError("parse", {}, v.dump(), where + ": expected array");
  std::vector<Rational> row;
  for (const Json& x : v) row.push_back(json_rational(x, where));
  return row;
}

Json row_to_json(const std::vector<Rational>& row) {
  Json out = Json::array();
  for (const Rational& q : row) out.push_back(to_string(q));
  return out;
}

Json mat_to_json(const Mat<Rational>& m) {
  Json out = Json::array();
  for (int i = 0; i < m.rows(); ++i) out.push_back(row_to_json(m.row(i)));
  return out;
}

Mat<Rational> mat_from_json(const Json& v, const std::string& where) {
  Mat<Rational> m;
  for (const Json& row : v) m.append_row(json_rational_row(row, where));
  return m;
}

Json ints_to_json(const std::vector<int>& v) {
  Json out = Json::array();
  for (int x : v) out.push_back(x);
  return out;
}

std::vector<int> ints_from_json(const Json& v) {
  std::vector<int> out;
  for (const Json& x : v) out.push_back(x.get<int>());
  return out;
}

Json label_json(const UltrafineLabel& label, const FineIndex& fine) {
  Json j;
  j["k"] = ints_to_json(fine.k);
  j["e"] = ints_to_json(label.e);
  Json jm = Json::object();
  for (size_t k = 0; k < label.jmap.size(); ++k)
    jm[std::to_string(k + 1)] = label.jmap[k];
  j["jmap"] = jm;
  j["b"] = ints_to_json(label.b);
  return j;
}

std::pair<UltrafineLabel, FineIndex> label_from_json(const Json& j) {
  std::vector<int> e = ints_from_json(j.at("e"));
  std::vector<int> b = ints_from_json(j.at("b"));
  std::vector<int> jmap(j.at("jmap").size(), 0);
  for (const auto& [key, value] : j.at("jmap").items())
    jmap.at(size_t(std::stoi(key)) - 1) = value.get<int>();
  FineIndex fine(ints_from_json(j.at("k")));
  return {UltrafineLabel(std::move(e), std::move(jmap), std::move(b)), fine};
}

Json witnesses_to_json(const std::vector<std::vector<Rational>>& ws) {
  Json out = Json::array();
  for (const auto& w : ws) out.push_back(row_to_json(w));
  return out;
}

std::vector<std::vector<Rational>> witnesses_from_json(const Json& v) {
  std::vector<std::vector<Rational>> out;
  for (const Json& row : v) out.push_back(json_rational_row(row, "witness"));
  return out;
}

}  // namespace

AlgebraInput parse_algebra_json(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError("parse", {}, "",
                          std::string("JSON parse error: ") + e.what());
  }
  try {
    AlgebraInput input;
    input.name = doc.value("name", std::string("unnamed"));
    if (!doc.contains("dim") || !doc["dim"].is_number_integer())
      throw ValidationError("parse", {}, "", "field 'dim' missing or not an integer");
    int m = doc["dim"].get<int>();
    if (m < 1 || m > 64)
      throw ValidationError("parse", {}, std::to_string(m), "field 'dim' out of range");

    std::vector<std::string> names;
    if (doc.contains("basis")) {
      for (const Json& n : doc["basis"]) names.push_back(n.get<std::string>());
      if (int(names.size()) != m)
        throw ValidationError("parse", {}, "",
                              "field 'basis' must list exactly dim names");
    } else {
      for (int i = 1; i <= m; ++i) names.push_back("e" + std::to_string(i));
    }

    LieAlgebra<Rational>::StructureTable table(
        m, std::vector<std::vector<Rational>>(m, std::vector<Rational>(m, Rational(0))));
    if (doc.contains("brackets")) {
      for (const Json& entry : doc["brackets"]) {
        if (!entry.contains("i") || !entry.contains("j") || !entry.contains("coeffs"))
          throw ValidationError("parse", {}, entry.dump(),
                                "bracket entry needs fields i, j, coeffs");
        int i = entry["i"].get<int>();
        int j = entry["j"].get<int>();
        if (i < 1 || j < 1 || i > m || j > m)
          throw ValidationError("parse", {i, j}, "", "bracket indices out of range");
        if (i >= j)
          throw ValidationError("parse", {i, j}, "",
                                "bracket entries must have i < j (antisymmetry is implied)");
        std::vector<Rational> coeffs = json_rational_row(entry["coeffs"], "bracket coeffs");
        if (int(coeffs.size()) != m)
          throw ValidationError("parse", {i, j}, "",
                                "bracket coeffs must have length dim");
        table[i - 1][j - 1] = coeffs;
        std::vector<Rational> neg(m, Rational(0));
        for (int r = 0; r < m; ++r) neg[r] = -coeffs[r];
        table[j - 1][i - 1] = neg;
      }
    }
    input.algebra = LieAlgebra<Rational>::validated(names, std::move(table));

    if (doc.contains("flag")) {
      const Json& f = doc["flag"];
      if (!f.is_array() || f.empty())
        throw ValidationError("parse", {}, f.dump(), "field 'flag' must be a non-empty array");
      if (f[0].is_array()) {
        Mat<Rational> rows = mat_from_json(f, "flag");
        input.flag = rows;
      } else {
        Mat<Rational> rows(m, m);
        for (int r = 0; r < int(f.size()); ++r) {
          int idx = -1;
          if (f[r].is_number_integer()) {
            idx = f[r].get<int>();
          } else {
            std::string nm = f[r].get<std::string>();
            for (int q = 0; q < m; ++q)
              if (names[q] == nm) idx = q + 1;
            if (idx < 0)
              throw ValidationError("parse", {r + 1}, nm, "flag name not in basis");
          }
          if (idx < 1 || idx > m)
            throw ValidationError("parse", {r + 1}, std::to_string(idx),
                                  "flag index out of range");
          rows(r, idx - 1) = Rational(1);
        }
        if (int(f.size()) != m)
          throw ValidationError("parse", {}, "", "flag permutation must list dim entries");
        input.flag = rows;
      }
    }
    return input;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("parse", {}, "", std::string("malformed field: ") + e.what());
  }
}

AlgebraInput load_algebra(const std::string& path) {
  if (path.rfind("catalog:", 0) == 0) {
    std::string name = path.substr(8);
    std::optional<CatalogAlgebra> c = load_catalog(name);
    if (!c) {
      std::string known;
      for (const std::string& n : catalog_names()) known += " " + n;
      throw ValidationError("catalog", {}, name,
                            "unknown catalog algebra '" + name + "'; known:" + known);
    }
    return AlgebraInput{c->name, c->algebra, c->flag};
  }
  std::ifstream in(path);
  if (!in)
    throw ValidationError("io", {}, path, "cannot open file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_algebra_json(buf.str());
}

std::vector<Rational> parse_functional(const std::string& text, int dim) {
  std::vector<Rational> out;
  std::string cur;
  std::stringstream ss(text);
  while (std::getline(ss, cur, ',')) {
    // trim spaces
    size_t a = cur.find_first_not_of(" \t");
    size_t b = cur.find_last_not_of(" \t");
    if (a == std::string::npos)
      throw ValidationError("parse", {}, text, "empty coordinate in functional");
    out.push_back(parse_rational(cur.substr(a, b - a + 1)));
  }
  if (int(out.size()) != dim)
    throw DimensionMismatch("functional has " + std::to_string(out.size()) +
                            " coordinates, expected " + std::to_string(dim));
  return out;
}

std::string label_to_json(const UltrafineLabel& label, const FineIndex& fine) {
  return label_json(label, fine).dump(2);
}

std::string trace_to_json(const PolarizationTrace<Rational>& trace,
                          const PolarizationCheck& check, const PukanszkyReport& puk) {
  Json j;
  j["d"] = trace.d;
  j["i"] = ints_to_json(trace.i);
  j["j"] = ints_to_json(trace.j);
  Json chain = Json::array();
  for (const auto& sub : trace.chain) chain.push_back(mat_to_json(sub.basis()));
  j["chain"] = chain;
  j["polarization"] = mat_to_json(trace.polarization().basis());
  j["checks"] = {{"is_subalgebra", check.is_subalgebra},
                 {"is_isotropic", check.is_isotropic},
                 {"has_polarization_dimension", check.has_polarization_dimension},
                 {"contains_stabilizer", check.contains_stabilizer}};
  j["pukanszky"] = {{"samples", puk.samples},
                    {"exact_samples", puk.exact_samples},
                    {"max_residual", puk.max_residual},
                    {"containment_ok", puk.containment_ok},
                    {"orbit_dimension_identity", puk.orbit_dimension_identity}};
  return j.dump(2);
}

std::string orbit_rep_to_json(const OrbitRepresentative& rep) {
  Json j;
  j["representative"] = row_to_json(rep.representative);
  Json word = Json::array();
  for (const WordFactor& f : rep.word.factors)
    word.push_back({{"index", f.index}, {"t", to_string(f.t)}});
  j["word"] = word;
  j["zeroed"] = ints_to_json(rep.zeroed);
  return j.dump(2);
}

namespace {

Json openness_to_json(const OpennessReport& rep) {
  Json out;
  out["checked"] = rep.checked;
  Json viols = Json::array();
  for (const OpennessViolation& v : rep.violations) {
    Json jv;
    jv["layer_index"] = v.layer_index;
    jv["witness"] = row_to_json(v.witness);
    jv["delta"] = row_to_json(v.delta);
    jv["scale_log2"] = v.scale_log2;
    Json obs;
    obs["e"] = ints_to_json(v.observed.e);
    obs["jmap"] = ints_to_json(v.observed.jmap);
    obs["b"] = ints_to_json(v.observed.b);
    jv["observed"] = obs;
    jv["observed_index"] = v.observed_index;
    viols.push_back(jv);
  }
  out["violations"] = viols;
  return out;
}

OpennessReport openness_from_json(const Json& j) {
  OpennessReport rep;
  rep.checked = j.at("checked").get<long>();
  for (const Json& jv : j.at("violations")) {
    OpennessViolation v;
    v.layer_index = jv.at("layer_index").get<int>();
    v.witness = json_rational_row(jv.at("witness"), "violation witness");
    v.delta = json_rational_row(jv.at("delta"), "violation delta");
    v.scale_log2 = jv.at("scale_log2").get<int>();
    v.observed = UltrafineLabel(ints_from_json(jv.at("observed").at("e")),
                                ints_from_json(jv.at("observed").at("jmap")),
                                ints_from_json(jv.at("observed").at("b")));
    v.observed_index = jv.at("observed_index").get<int>();
    rep.violations.push_back(std::move(v));
  }
  return rep;
}

}  // namespace

std::string report_to_json(const ChainReport& report) {
  Json j;
  j["algebra"] = {{"name", report.algebra_name},
                  {"dim", report.dim},
                  {"nilpotent", report.nilpotent}};
  j["flag"] = mat_to_json(report.flag_rows);
  j["roots"] = mat_to_json(report.roots);
  Json layers = Json::array();
  for (const ChainLayer& layer : report.layers) {
    Json jl;
    jl["label"] = label_json(layer.label, layer.fine);
    jl["orbit_dim"] = layer.orbit_dim;
    jl["character"] = layer.is_character;
    jl["sample_count"] = layer.sample_count;
    jl["witnesses"] = witnesses_to_json(layer.witnesses);
    jl["subquotient"] = {{"gamma", layer.gamma}, {"fiber", layer.fiber}};
    layers.push_back(jl);
  }
  j["layers"] = layers;
  j["chain_length"] = report.chain_length;
  j["openness"] = openness_to_json(report.openness);
  j["disclaimers"] = report.disclaimers;
  Json probes = Json::array();
  for (const auto& p : report.sampling.probes) probes.push_back(row_to_json(p));
  j["sampling"] = {{"samples", report.sampling.samples},
                   {"seed", std::to_string(report.sampling.seed)},
                   {"height", report.sampling.height},
                   {"grid_point_limit", report.sampling.grid_point_limit},
                   {"probes", probes}};
  j["perturb"] = {{"directions", report.perturb.directions},
                  {"depth", report.perturb.depth},
                  {"height", report.perturb.height},
                  {"seed", std::to_string(report.perturb.seed)}};
  return j.dump(2);
}

ChainReport report_from_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError("parse", {}, "", std::string("JSON parse error: ") + e.what());
  }
  ChainReport rep;
  rep.algebra_name = j.at("algebra").at("name").get<std::string>();
  rep.dim = j.at("algebra").at("dim").get<int>();
  rep.nilpotent = j.at("algebra").at("nilpotent").get<bool>();
  rep.flag_rows = mat_from_json(j.at("flag"), "flag");
  rep.roots = mat_from_json(j.at("roots"), "roots");
  for (const Json& jl : j.at("layers")) {
    ChainLayer layer;
    auto [label, fine] = label_from_json(jl.at("label"));
    layer.label = label;
    layer.fine = fine;
    layer.orbit_dim = jl.at("orbit_dim").get<int>();
    layer.is_character = jl.at("character").get<bool>();
    layer.sample_count = jl.at("sample_count").get<long>();
    layer.witnesses = witnesses_from_json(jl.at("witnesses"));
    layer.gamma = jl.at("subquotient").at("gamma").get<std::string>();
    layer.fiber = jl.at("subquotient").at("fiber").get<std::string>();
    rep.layers.push_back(std::move(layer));
  }
  rep.chain_length = j.at("chain_length").get<int>();
  rep.openness = openness_from_json(j.at("openness"));
  for (const Json& d : j.at("disclaimers")) rep.disclaimers.push_back(d.get<std::string>());
  rep.sampling.samples = j.at("sampling").at("samples").get<int>();
  rep.sampling.seed = std::stoull(j.at("sampling").at("seed").get<std::string>());
  rep.sampling.height = j.at("sampling").at("height").get<int>();
  rep.sampling.grid_point_limit = j.at("sampling").at("grid_point_limit").get<long>();
  for (const Json& p : j.at("sampling").at("probes"))
    rep.sampling.probes.push_back(json_rational_row(p, "probe"));
  rep.perturb.directions = j.at("perturb").at("directions").get<int>();
  rep.perturb.depth = j.at("perturb").at("depth").get<int>();
  rep.perturb.height = j.at("perturb").at("height").get<int>();
  rep.perturb.seed = std::stoull(j.at("perturb").at("seed").get<std::string>());
  return rep;
}

namespace {

bool violation_eq(const OpennessViolation& a, const OpennessViolation& b) {
  return a.layer_index == b.layer_index && a.witness == b.witness && a.delta == b.delta &&
         a.scale_log2 == b.scale_log2 && a.observed == b.observed &&
         a.observed_index == b.observed_index;
}

bool layer_eq(const ChainLayer& a, const ChainLayer& b) {
  return a.label == b.label && a.fine == b.fine && a.orbit_dim == b.orbit_dim &&
         a.is_character == b.is_character && a.sample_count == b.sample_count &&
         a.witnesses == b.witnesses && a.gamma == b.gamma && a.fiber == b.fiber;
}

}  // namespace

bool operator==(const ChainReport& a, const ChainReport& b) {
  if (a.algebra_name != b.algebra_name || a.dim != b.dim || a.nilpotent != b.nilpotent)
    return false;
  if (a.flag_rows != b.flag_rows || a.roots != b.roots) return false;
  if (a.layers.size() != b.layers.size()) return false;
  for (size_t i = 0; i < a.layers.size(); ++i)
    if (!layer_eq(a.layers[i], b.layers[i])) return false;
  if (a.chain_length != b.chain_length) return false;
  if (a.openness.checked != b.openness.checked) return false;
  if (a.openness.violations.size() != b.openness.violations.size()) return false;
  for (size_t i = 0; i < a.openness.violations.size(); ++i)
    if (!violation_eq(a.openness.violations[i], b.openness.violations[i])) return false;
  if (a.disclaimers != b.disclaimers) return false;
  if (a.sampling.samples != b.sampling.samples || a.sampling.seed != b.sampling.seed ||
      a.sampling.height != b.sampling.height ||
      a.sampling.grid_point_limit != b.sampling.grid_point_limit ||
      a.sampling.probes != b.sampling.probes)
    return false;
  if (a.perturb.directions != b.perturb.directions || a.perturb.depth != b.perturb.depth ||
      a.perturb.height != b.perturb.height || a.perturb.seed != b.perturb.seed)
    return false;
  return true;
}

}  // namespace liestrat
