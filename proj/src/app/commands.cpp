#include <chrono>
#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "bellkit/cli.hpp"
#include "bellkit/config.hpp"
#include "bellkit/entropy.hpp"
#include "bellkit/feasibility.hpp"
#include "bellkit/hidden_variables.hpp"
#include "bellkit/logic.hpp"
#include "bellkit/sweep.hpp"

#ifndef BELLKIT_VERSION
#define BELLKIT_VERSION "0.0.0"
#endif

namespace bellkit {

namespace {

constexpr double kSodiumMassAmu = 22.98976928;

struct Flags {
  std::string config;
  std::uint64_t seed = 0;
  double tol = tol::validity;
  std::string base = "e";
  std::string csv;
  bool timing = false;
  std::optional<double> length_m, velocity_mps, energy_ev, mass_amu;
};

struct Outcome {
  Json results;
  bool violated = false;
  std::optional<std::string> csv;
};

LogBase log_base(const Flags& f) { return f.base == "2" ? LogBase::Two : LogBase::E; }

Json angles_json(const Vec3& n) {
  const auto a = angles_from_direction(n);
  return {a[0] + 0.0, a[1] + 0.0};  // -0 prints as 0
}

Json settings_json(const BellScenario::Settings& s) {
  return {{"a", angles_json(s.a)}, {"b", angles_json(s.b)}, {"c", angles_json(s.c)}, {"d", angles_json(s.d)}};
}

Bipartition read_dims(const Json& cfg, std::size_t total) {
  if (!cfg.contains("dims")) {
    if (total != 4) throw ConfigError("/dims", "required unless the state is two-qubit");
    return {2, 2};
  }
  const Json& d = cfg["dims"];
  if (!d.is_array() || d.size() != 2) throw ConfigError("/dims", "expected [M, N]");
  const Bipartition dims{read_count(d[0], "/dims/0"), read_count(d[1], "/dims/1")};
  if (dims.first == 0 || dims.second == 0) throw ConfigError("/dims", "dimensions must be positive");
  if (dims.total() != total)
    throw ConfigError("/dims", "M*N = " + std::to_string(dims.total()) + " does not match dimension " +
                                   std::to_string(total));
  return dims;
}

EntropyKind read_kind(const Json& cfg, bool quantum) {
  if (!cfg.contains("kind")) return quantum ? EntropyKind::VonNeumann : EntropyKind::Shannon;
  const Json& k = cfg["kind"];
  if (!k.is_string()) throw ConfigError("/kind", "expected a string");
  for (const auto kind : {EntropyKind::Shannon, EntropyKind::VonNeumann, EntropyKind::LinearClassical,
                          EntropyKind::LinearQuantum}) {
    if (k.get<std::string>() == to_string(kind)) {
      if (is_quantum(kind) != quantum)
        throw ConfigError("/kind", std::string(to_string(kind)) + " does not apply to a " +
                                       (quantum ? "quantum state" : "classical distribution"));
      return kind;
    }
  }
  throw ConfigError("/kind", "unknown entropy kind " + k.dump() +
                                 " (shannon, von_neumann, linear_classical, linear_quantum)");
}

Outcome cmd_chsh(const Json& cfg, const Flags& f) {
  expect_fields(cfg, "", {"schema", "state", "directions", "observables", "optimize"});
  bool optimize = false;
  if (cfg.contains("optimize")) {
    if (!cfg["optimize"].is_boolean()) throw ConfigError("/optimize", "expected true or false");
    optimize = cfg["optimize"].get<bool>();
  }
  const bool has_scenario = cfg.contains("directions") || cfg.contains("observables");
  if (!has_scenario && !optimize) throw ConfigError("/directions", "give directions, observables, or optimize: true");

  Outcome o;
  const double tsirelson = 2.0 * std::numbers::sqrt2;
  if (has_scenario) {
    const BellScenario s = read_scenario(cfg, "");
    const CorrelationSet c = correlations(s);
    const double b = beta(s);
    o.results["beta"] = b;
    o.results["abs_beta"] = std::abs(b);
    o.results["correlations"] = {{"ab", c.ab}, {"bc", c.bc}, {"cd", c.cd}, {"ad", c.ad}};
    o.results["tsirelson_margin"] = tsirelson - std::abs(b);
    o.results["classical_bound_holds"] = std::abs(b) <= 2.0 + f.tol;
    o.violated = std::abs(b) > 2.0 + f.tol;
  }
  if (optimize) {
    const DensityOperator state = read_state(required_field(cfg, "", "state"), "/state");
    if (state.dim() != 4) throw ConfigError("/state", "optimize needs a two-qubit (4x4) state");
    const ViolationResult v = maximize_violation(state, f.seed);
    o.results["optimizer"] = {{"beta", v.beta},
                              {"beta_max", v.beta_max},
                              {"directions", settings_json(v.directions)},
                              {"tsirelson_margin", tsirelson - v.beta_max}};
    o.violated = o.violated || v.beta_max > 2.0 + f.tol;
  }
  return o;
}

Json verdict_json(const FeasibilityVerdict& v, const MarginalSet& m) {
  Json out{{"feasible", v.feasible},
           {"fine_criterion", v.fine_criterion},
           {"chsh_values", v.chsh_values},
           {"phase1_objective", v.phase1_objective}};
  if (v.witness) {
    out["witness"] = {{"index_bits", {{"A", 8}, {"B", 4}, {"C", 2}, {"D", 1}}}, {"q", v.witness->q}};
    out["witness_residual"] = marginal_residual(*v.witness, m);
  }
  return out;
}

Outcome cmd_feasibility(const Json& cfg, const Flags&) {
  expect_fields(cfg, "", {"schema", "marginals", "state", "directions", "observables"});
  Outcome o;
  if (cfg.contains("marginals")) {
    if (cfg.contains("state")) throw ConfigError("/state", "give either marginals or a scenario, not both");
    const MarginalSet m = read_marginals(cfg["marginals"], "/marginals");
    FeasibilityVerdict v;
    try {
      v = joint_feasible(m);
    } catch (const InconsistentMarginals& e) {
      throw ConfigError("/marginals", e.what());
    }
    o.results = {{"marginals", marginals_to_json(m)}, {"verdict", verdict_json(v, m)}};
    o.violated = !v.feasible;
    return o;
  }
  const BellScenario s = read_scenario(cfg, "");
  const ContextualityReport r = contextuality_demo(s);
  o.results = {{"marginals", marginals_to_json(r.marginals)},
               {"verdict", verdict_json(r.verdict, r.marginals)},
               {"contexts",
                {{"AB", {{"max_error", r.context_ab.check.max_error}, {"linearity_error", r.context_ab.check.linearity_error}}},
                 {"AD", {{"max_error", r.context_ad.check.max_error}, {"linearity_error", r.context_ad.check.linearity_error}}}}},
               {"contextual", r.contextual}};
  o.violated = !r.verdict.feasible;
  return o;
}

std::vector<LabeledOperator> read_labeled(const Json& cfg, const char* key) {
  const std::string path = std::string("/") + key;
  const Json& list = required_field(cfg, "", key);
  if (!list.is_array() || list.empty()) throw ConfigError(path, "expected a nonempty list of {label, matrix}");
  std::vector<LabeledOperator> ops;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string p = path + "/" + std::to_string(i);
    expect_fields(list[i], p, {"label", "matrix"});
    const Json& label = required_field(list[i], p, "label");
    if (!label.is_string() || label.get<std::string>().empty()) throw ConfigError(p + "/label", "expected a nonempty string");
    ops.push_back({label.get<std::string>(), read_matrix(required_field(list[i], p, "matrix"), p + "/matrix")});
  }
  return ops;
}

Outcome cmd_hv(const Json& cfg, const Flags& f) {
  expect_fields(cfg, "", {"schema", "state", "observables"});
  const DensityOperator state = read_state(required_field(cfg, "", "state"), "/state");
  const auto ops = read_labeled(cfg, "observables");
  for (std::size_t i = 0; i < ops.size(); ++i) {
    const std::string p = "/observables/" + std::to_string(i);
    if (ops[i].matrix.rows() != state.dim() || !ops[i].matrix.is_square())
      throw ConfigError(p + "/matrix", "dimension does not match the state");
    if (!is_hermitian(ops[i].matrix)) throw ConfigError(p + "/matrix", "observable is not Hermitian");
  }

  HVModel model;
  try {
    model = build_hv_model(state, ops);
  } catch (const CommutationError& e) {
    throw ConfigError("/observables", "observables " + ops[e.first()].label + " and " + ops[e.second()].label +
                                          " do not commute (||[A,B]||_F = " + std::to_string(e.norm()) + ")");
  } catch (const InvalidInput& e) {
    throw ConfigError("/observables", e.what());
  }
  const ModelCheck check = verify_model(model, state, ops);

  double characteristic_error = 0.0;
  const double grid[] = {-1.0, -0.3, 0.7, 2.0};
  for (std::size_t i = 0; i < ops.size(); ++i)
    for (std::size_t j = i + 1; j < ops.size(); ++j)
      for (const double xi : grid)
        for (const double eta : grid) {
          const Complex q = quantum_characteristic(state, ops[i].matrix, ops[j].matrix, xi, eta);
          const Complex h = hv_characteristic(model, ops[i].label, ops[j].label, xi, eta);
          characteristic_error = std::max(characteristic_error, std::abs(q - h));
        }

  Json atoms = Json::array();
  for (std::size_t k = 0; k < model.atoms.size(); ++k) {
    Json values = Json::array();
    for (std::size_t i = 0; i < model.labels.size(); ++i) values.push_back(model.values[i][k]);
    atoms.push_back({{"atom", model.atoms[k].label()}, {"weight", model.weights[k]}, {"values", values}});
  }
  Outcome o;
  const bool ok = check.max_error < f.tol && check.linearity_error < f.tol && characteristic_error < f.tol;
  o.results = {{"labels", model.labels},
               {"atoms", atoms},
               {"verification",
                {{"max_error", check.max_error},
                 {"linearity_error", check.linearity_error},
                 {"characteristic_error", characteristic_error},
                 {"holds", ok}}}};
  o.violated = !ok;
  o.csv = to_csv(model);
  return o;
}

Json entropy_json(const EntropyReport& r) {
  return {{"S12", r.S12}, {"S1", r.S1}, {"S2", r.S2}, {"kind", to_string(r.kind)}, {"base", to_string(r.base)}};
}

Outcome cmd_entropy(const Json& cfg, const Flags& f) {
  expect_fields(cfg, "", {"schema", "state", "distribution", "dims", "kind", "directions", "observables"});
  const LogBase base = log_base(f);
  Outcome o;

  if (cfg.contains("distribution")) {
    if (cfg.contains("state")) throw ConfigError("/state", "give either state or distribution, not both");
    if (cfg.contains("directions") || cfg.contains("observables"))
      throw ConfigError("/directions", "observables apply to quantum states only");
    const Json& w = cfg["distribution"];
    if (!w.is_array() || w.empty()) throw ConfigError("/distribution", "expected a nonempty list of weights");
    std::vector<double> weights;
    for (std::size_t i = 0; i < w.size(); ++i) weights.push_back(read_number(w[i], "/distribution/" + std::to_string(i)));
    const Bipartition dims = read_dims(cfg, weights.size());
    std::optional<ClassicalDistribution> p;
    try {
      p.emplace(std::move(weights), dims);
    } catch (const Error& e) {
      throw ConfigError("/distribution", e.what());
    }
    const EntropyKind kind = read_kind(cfg, false);
    const double mono = classical_monotonicity(*p, kind, base);
    o.results = {{"entropies", entropy_json(entropy_report(*p, kind, base))},
                 {"subadditivity_slack", check_subadditivity(*p, kind, base)},
                 {"monotonicity_slack", mono}};
    o.violated = mono < -f.tol;
    return o;
  }

  const DensityOperator rho = read_state(required_field(cfg, "", "state"), "/state");
  const Bipartition dims = read_dims(cfg, rho.dim());
  const EntropyKind kind = read_kind(cfg, true);
  const double mono = quantum_monotonicity(rho, dims, kind, base);
  const LinearEntropyVerdict lin = linear_entropy_condition(rho, dims);
  const SubsystemCondition linear_sub = horodecki_check(rho, dims, EntropyKind::LinearQuantum, f.tol);
  o.results = {{"entropies", entropy_json(entropy_report(rho, dims, kind, base))},
               {"subadditivity_slack", check_subadditivity(rho, dims, kind, base)},
               {"monotonicity_slack", mono},
               {"araki_lieb_slack", araki_lieb(rho, dims, base)},
               {"linear_entropy_condition",
                {{"lhs", lin.lhs},
                 {"rhs", lin.rhs},
                 {"holds", lin.holds},
                 {"purity_margin", lin.purity_margin},
                 {"beta_bound_implied", lin.beta_bound_implied}}},
               {"linear_subsystem_condition", linear_sub.condition_holds}};
  if (cfg.contains("directions") || cfg.contains("observables")) {
    const BellScenario s = read_scenario(cfg, "");
    if (s.dims().first != dims.first) throw ConfigError("/dims", "does not match the observables");
    const PurityBoundReport pb = purity_bound_check(s);
    o.results["purity_bound"] = {
        {"lhs", pb.lhs}, {"rhs", pb.rhs}, {"slack", pb.slack}, {"beta", pb.beta}, {"traceless", pb.traceless}};
  }
  o.violated = mono < -f.tol;
  return o;
}

Outcome cmd_sweep(const Json& cfg, const Flags& f) {
  expect_fields(cfg, "", {"schema", "kind", "count", "dims"});
  const Json& k = required_field(cfg, "", "kind");
  if (!k.is_string()) throw ConfigError("/kind", "expected a string");
  const auto kind = parse_sweep_kind(k.get<std::string>());
  if (!kind) {
    std::string names;
    for (const auto s : all_sweep_kinds()) names += (names.empty() ? "" : ", ") + std::string(to_string(s));
    throw ConfigError("/kind", "unknown sweep kind " + k.dump() + " (" + names + ")");
  }
  SweepParams params;
  params.kind = *kind;
  params.seed = f.seed;
  if (cfg.contains("count")) params.count = read_count(cfg["count"], "/count");
  if (params.count == 0) throw ConfigError("/count", "must be positive");
  if (cfg.contains("dims")) {
    const Json& d = cfg["dims"];
    if (!d.is_array() || d.size() != 2) throw ConfigError("/dims", "expected [M, N]");
    params.dims = {read_count(d[0], "/dims/0"), read_count(d[1], "/dims/1")};
    if (params.dims.first < 2 || params.dims.second < 2) throw ConfigError("/dims", "dimensions must be at least 2");
  }

  SweepSummary summary;
  try {
    summary = run_sweep(params);
  } catch (const Error& e) {
    throw ConfigError("/dims", e.what());
  }
  Outcome o;
  o.results = {{"kind", to_string(summary.kind)},
               {"count", summary.count},
               {"dims", {params.dims.first, params.dims.second}},
               {"min_slack", summary.min_slack},
               {"argmin_seed", summary.argmin_seed},
               {"holds", summary.min_slack >= -f.tol}};
  o.violated = summary.min_slack < -f.tol;
  o.csv = to_csv(summary);
  return o;
}

Proposition read_proposition(const Json& j, const std::string& p, std::size_t dim) {
  expect_fields(j, p, {"label", "matrix", "direction", "side"});
  const Json& label = required_field(j, p, "label");
  if (!label.is_string() || label.get<std::string>().empty()) throw ConfigError(p + "/label", "expected a nonempty string");
  const std::string name = label.get<std::string>();
  if (j.contains("matrix") == j.contains("direction"))
    throw ConfigError(p + "/matrix", "give exactly one of matrix or direction");

  ComplexMatrix m;
  if (j.contains("matrix")) {
    m = read_matrix(j["matrix"], p + "/matrix");
    if (!m.is_square() || m.rows() != dim) throw ConfigError(p + "/matrix", "dimension does not match the state");
  } else {
    if (dim != 4) throw ConfigError(p + "/direction", "directions need a two-qubit (4x4) state");
    const ComplexMatrix local = spin_projector(read_direction(j["direction"], p + "/direction")).projector();
    const Json& side = required_field(j, p, "side");
    if (!side.is_number_integer() || (side.get<int>() != 1 && side.get<int>() != 2))
      throw ConfigError(p + "/side", "expected 1 or 2");
    const ComplexMatrix id = ComplexMatrix::identity(2);
    m = side.get<int>() == 1 ? tensor_product(local, id) : tensor_product(id, local);
  }
  try {
    return Proposition(name, m);
  } catch (const Error& e) {
    throw ConfigError(p + "/matrix", e.what());
  }
}

Outcome cmd_logic(const Json& cfg, const Flags& f) {
  expect_fields(cfg, "", {"schema", "state", "propositions"});
  const DensityOperator rho = read_state(required_field(cfg, "", "state"), "/state");
  const Json& list = required_field(cfg, "", "propositions");
  if (!list.is_array() || (list.size() != 3 && list.size() != 4))
    throw ConfigError("/propositions", "expected three propositions (triangle) or four (quad cycle)");
  std::vector<Proposition> props;
  for (std::size_t i = 0; i < list.size(); ++i)
    props.push_back(read_proposition(list[i], "/propositions/" + std::to_string(i), rho.dim()));

  Json distances = Json::array();
  for (std::size_t i = 0; i < props.size(); ++i)
    for (std::size_t j = i + 1; j < props.size(); ++j) {
      Json entry{{"pair", {props[i].label(), props[j].label()}}, {"commute", commutes(props[i], props[j])}};
      if (entry["commute"].get<bool>()) {
        const DistanceReport d = distance(props[i], props[j], rho);
        entry["d"] = d.d;
        entry["p_meet"] = d.p_meet;
        entry["p_join"] = d.p_join;
      }
      distances.push_back(std::move(entry));
    }

  auto require_pair = [&](std::size_t i, std::size_t j) {
    if (!commutes(props[i], props[j]))
      throw ConfigError("/propositions", props[i].label() + " and " + props[j].label() +
                                             " do not commute, so their distance is undefined");
  };
  Outcome o;
  o.results["distances"] = distances;
  if (props.size() == 3) {
    require_pair(0, 1);
    require_pair(0, 2);
    require_pair(1, 2);
    const TriangleReport t = triangle_check(props[0], props[1], props[2], rho, f.tol);
    o.results["triangle"] = {{"holds", t.holds}, {"slack", t.slack}};
    o.violated = !t.holds;
  } else {
    require_pair(0, 1);
    require_pair(1, 2);
    require_pair(2, 3);
    require_pair(0, 3);
    const QuadReport q = quad_check(props[0], props[1], props[2], props[3], rho, f.tol);
    o.results["quad"] = {{"holds", q.holds}, {"slack", q.slack}, {"worst_permutation", q.worst_permutation}};
    o.violated = !q.holds;
  }
  return o;
}

Outcome cmd_epr_distance(const Json& cfg, const Flags& f) {
  std::optional<double> length = f.length_m, velocity = f.velocity_mps, energy = f.energy_ev, mass = f.mass_amu;
  if (!cfg.is_null()) {
    expect_fields(cfg, "", {"schema", "length_m", "velocity_mps", "energy_ev", "mass_amu"});
    auto fill = [&](std::optional<double>& slot, const char* key) {
      if (!slot && cfg.contains(key)) slot = read_number(cfg[key], std::string("/") + key);
    };
    fill(length, "length_m");
    fill(velocity, "velocity_mps");
    fill(energy, "energy_ev");
    fill(mass, "mass_amu");
  }
  if (!length) throw ConfigError("--L", "detector length in metres is required");
  if (velocity && energy) throw ConfigError("--v", "give either a velocity or a kinetic energy, not both");
  if (!velocity && !energy) throw ConfigError("--v", "give a velocity (--v) or a kinetic energy (--energy-ev)");

  Outcome o;
  double v = 0.0;
  if (energy) {
    const double m = mass.value_or(kSodiumMassAmu);
    try {
      v = velocity_from_energy(*energy, m);
    } catch (const Error& e) {
      throw ConfigError("--energy-ev", e.what());
    }
    o.results["energy_ev"] = *energy;
    o.results["mass_amu"] = m;
  } else {
    v = *velocity;
  }
  double separation = 0.0;
  try {
    separation = epr_min_separation(*length, v);
  } catch (const Error& e) {
    throw ConfigError(energy ? "--energy-ev" : "--v", e.what());
  }
  o.results["length_m"] = *length;
  o.results["velocity_mps"] = v;
  o.results["separation_m"] = separation;
  o.results["separation_km"] = separation / 1000.0;
  return o;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(path, "cannot open config file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void add_common_options(CLI::App* sub, Flags& f, bool config_required) {
  auto* cfg = sub->add_option("config", f.config, "JSON config path");
  if (config_required) cfg->required();
  sub->add_option("--seed", f.seed, "base seed for randomized steps");
  sub->add_option("--tol", f.tol, "tolerance for classical-bound decisions")->check(CLI::PositiveNumber);
  sub->add_option("--base", f.base, "logarithm base for entropies")->check(CLI::IsMember({"e", "2"}));
  sub->add_option("--csv", f.csv, "also write CSV output to this path");
  sub->add_flag("--timing", f.timing, "add wall time to the report (breaks byte-identical output)");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bell-inequality, hidden-variable and entropy toolkit", "bellkit"};
  app.require_subcommand(1);
  Flags f;

  using Handler = Outcome (*)(const Json&, const Flags&);
  const std::vector<std::tuple<const char*, const char*, Handler>> commands{
      {"chsh", "Bell operator value, correlations, Tsirelson margin", cmd_chsh},
      {"feasibility", "joint-distribution LP and four-inequality criterion", cmd_feasibility},
      {"hv", "hidden-variable model for commuting observables", cmd_hv},
      {"entropy", "entropies and inequality slacks", cmd_entropy},
      {"sweep", "randomized property sweep", cmd_sweep},
      {"logic", "proposition distances, triangle and quad checks", cmd_logic},
      {"epr-distance", "minimal detector separation for spacelike measurements", cmd_epr_distance},
  };
  for (const auto& [name, help, handler] : commands) {
    auto* sub = app.add_subcommand(name, help);
    const bool is_epr = std::string_view(name) == "epr-distance";
    add_common_options(sub, f, !is_epr);
    if (is_epr) {
      sub->add_option("--L", f.length_m, "detector length (m)");
      sub->add_option("--v", f.velocity_mps, "particle speed (m/s)");
      sub->add_option("--energy-ev", f.energy_ev, "kinetic energy (eV), instead of --v");
      sub->add_option("--mass-amu", f.mass_amu, "particle mass (u), default sodium");
    }
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::satisfied : exit_code::input_error;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  Handler handler = nullptr;
  for (const auto& [name, help, h] : commands)
    if (command == name) handler = h;

  const auto start = std::chrono::steady_clock::now();
  try {
    Json cfg;
    if (!f.config.empty()) {
      cfg = parse_config_text(read_file(f.config));
      require_schema(cfg);
    }
    Outcome outcome = handler(cfg, f);

    Json inputs{{"config", cfg}, {"tol", f.tol}, {"base", f.base}};
    if (command == "epr-distance") {
      for (const auto& [key, value] :
           {std::pair{"L", f.length_m}, {"v", f.velocity_mps}, {"energy_ev", f.energy_ev}, {"mass_amu", f.mass_amu}})
        if (value) inputs["flags"][key] = *value;
    }
    Json report{{"command", command},
                {"version", BELLKIT_VERSION},
                {"seed", f.seed},
                {"inputs", inputs},
                {"results", outcome.results}};
    if (f.timing)
      report["wall_time_s"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    if (!f.csv.empty()) {
      if (!outcome.csv) throw ConfigError("--csv", command + " has no CSV output");
      std::ofstream csv(f.csv, std::ios::binary);
      if (!csv) throw ConfigError("--csv", "cannot write " + f.csv);
      csv << *outcome.csv;
    }
    out << report.dump(2) << "\n";
    return outcome.violated ? exit_code::violated : exit_code::satisfied;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return exit_code::input_error;
}

}  // namespace bellkit
