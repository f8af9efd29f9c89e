#include "ffcs/cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ffcs/bounds.hpp"
#include "ffcs/errors.hpp"
#include "ffcs/field.hpp"
#include "ffcs/monte_carlo.hpp"
#include "ffcs/phase_curve.hpp"
#include "ffcs/serialization.hpp"
#include "ffcs/signal_model.hpp"
#include "ffcs/weight_enumeration.hpp"

namespace ffcs {

using nlohmann::json;

namespace {

struct Common {
  std::string format = "json";
  std::string out_path;
};

struct FieldArgs {
  int q = 2;
};

struct BoundArgs {
  int n = 0, k = 0, m = 0, q = 2;
  std::string gamma = "dense";
  std::string variant = "all";
};

struct NhArgs {
  int n = 0, k = 0, q = 2;
  bool verify = false;
};

struct CurveArgs {
  int n = 1000;
  std::vector<int> qs;
  std::vector<std::string> gammas;
  double target = 1e-2;
  std::string grid = "0.01:0.50:0.01";
  std::string variant = "all";
};

struct SimulateArgs {
  int n = 0, k = 0, m = 0, q = 2;
  std::string gamma = "dense";
  std::string variant = "all";
  std::uint64_t trials = 1000;
  std::uint64_t seed = 1;
  std::string dump_dir;
  std::uint64_t dump_limit = 10;
  unsigned workers = 0;
  std::uint64_t cap = kDefaultEnumerationCap;
};

// "dense", "c=<C>" or a literal probability.
double resolve_gamma(const std::string& spec, int N, int q) {
  if (spec == "dense" || spec.rfind("c=", 0) == 0) return GammaMode::parse(spec).gamma(N, q);
  try {
    std::size_t used = 0;
    const double g = std::stod(spec, &used);
    if (used == spec.size()) {
      if (!(g > 0.0 && g <= 1.0)) throw InvalidGamma("gamma must lie in (0, 1], got " + spec);
      return g;
    }
  } catch (const std::logic_error&) {
  }
  throw InvalidGamma("gamma must be 'dense', 'c=<C>' or a number in (0, 1], got '" + spec + "'");
}

void check_model(int N, int K, int q) {
  if (N < 1) throw InvalidParameter("--n must be >= 1");
  if (K < 0 || K > N) throw InvalidParameter("--k must satisfy 0 <= k <= n");
  make_field(q);
}

std::vector<double> parse_grid(const std::string& spec) {
  std::vector<double> out;
  auto number = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      const double v = std::stod(s, &used);
      if (used == s.size()) return v;
    } catch (const std::logic_error&) {
    }
    throw InvalidParameter("bad grid value '" + s + "'");
  };
  if (spec.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
    if (parts.size() != 3) throw InvalidParameter("grid range must be start:stop:step");
    const double a = number(parts[0]), b = number(parts[1]), step = number(parts[2]);
    if (!(step > 0.0) || b < a) throw InvalidParameter("grid range must have step > 0 and stop >= start");
    const auto count = static_cast<long>(std::floor((b - a) / step + 1e-9)) + 1;
    for (long i = 0; i < count; ++i) out.push_back(std::round((a + i * step) * 1e12) / 1e12);
  } else {
    std::stringstream ss(spec);
    for (std::string p; std::getline(ss, p, ',');) out.push_back(number(p));
  }
  for (double r : out) {
    if (!(r >= 0.0 && r <= 1.0)) throw InvalidParameter("grid ratios must lie in [0, 1]");
  }
  if (out.empty()) throw InvalidParameter("empty grid");
  return out;
}

json meta(const std::string& sub, json params, std::optional<std::string> variant,
          std::optional<std::uint64_t> seed) {
  return {{"tool", kToolName},
          {"version", kToolVersion},
          {"subcommand", sub},
          {"params", std::move(params)},
          {"variant", variant ? json(*variant) : json(nullptr)},
          {"seed", seed ? json(*seed) : json(nullptr)}};
}

// Log values may be -inf, which JSON cannot carry; emit null instead.
json log_json(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

std::string hex64(std::uint64_t v) {
  std::ostringstream os;
  os << "0x" << std::hex << std::setw(16) << std::setfill('0') << v;
  return os.str();
}

std::string poly_text(const std::vector<int>& coeffs) {
  std::string s;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
    if (!coeffs[i]) continue;
    if (!s.empty()) s += "+";
    s += i == 0 ? "1" : i == 1 ? "x" : "x^" + std::to_string(i);
  }
  return s;
}

void emit_json(std::ostream& os, const json& j) { os << j.dump(2) << '\n'; }

json run_field(const FieldArgs& a) {
  const FieldSpec f = make_field(a.q);
  const bool extension = f.degree() > 1;
  return {{"meta", meta("field", {{"q", a.q}}, std::nullopt, std::nullopt)},
          {"q", f.order()},
          {"p", f.characteristic()},
          {"m", f.degree()},
          {"reduction_poly", extension ? json(f.reduction_poly()) : json(nullptr)},
          {"reduction_poly_text", extension ? json(poly_text(f.reduction_poly())) : json(nullptr)},
          {"checksums",
           {{"add", hex64(table_checksum(f.add_table()))},
            {"mul", hex64(table_checksum(f.mul_table()))},
            {"inv", hex64(table_checksum(f.inv_table()))}}},
          {"axioms_ok", !find_axiom_violation(f).has_value()}};
}

json run_bound(const BoundArgs& a) {
  check_model(a.n, a.k, a.q);
  const ModelParams p{a.n, a.k, a.m, a.q, resolve_gamma(a.gamma, a.n, a.q)};
  const NhVariant variant = parse_variant(a.variant);
  const BoundResult r = evaluate_bounds(p, variant);
  json params = {{"n", p.N}, {"k", p.K}, {"m", p.M}, {"q", p.q}, {"gamma", p.gamma},
                 {"gamma_spec", a.gamma}};
  json j = {{"meta", meta("bound", params, to_string(variant), std::nullopt)},
            {"union_bound_log", log_json(r.union_bound.log_value)},
            {"union_bound", r.union_bound.prob()},
            {"union_bound_capped", r.union_bound.capped().prob()},
            {"closed_dense_log", nullptr},
            {"closed_dense", nullptr},
            {"exponent_log", nullptr},
            {"exponent", nullptr},
            {"fano_lower", r.fano_lower},
            {"sufficient_M", r.sufficient_M},
            {"necessary_M", r.necessary_M}};
  if (r.closed_dense) {
    j["closed_dense_log"] = log_json(r.closed_dense->log_value);
    j["closed_dense"] = r.closed_dense->prob();
  }
  if (r.exponent_bound) {
    j["exponent_log"] = log_json(r.exponent_bound->log_value);
    j["exponent"] = r.exponent_bound->prob();
  }
  return j;
}

json counts_json(const WeightEnumeration& w) {
  json t = json::object();
  for (int h = 1; h <= w.max_weight(); ++h) t[std::to_string(h)] = w.counts[h].str();
  return t;
}

void run_nh(const NhArgs& a, const Common& c, std::ostream& os) {
  check_model(a.n, a.k, a.q);
  const auto all = nh_count(a.n, a.k, a.q, NhVariant::AllPairs);
  const auto restricted = nh_count(a.n, a.k, a.q, NhVariant::RestrictedPairs);
  std::optional<bool> verified;
  if (a.verify) {
    const auto oracle = nh_oracle(make_field(a.q), a.n, a.k);
    verified = oracle.all_pairs.counts == all.counts &&
               oracle.restricted_pairs.counts == restricted.counts;
  }
  const BigInt L = signal_set_size(a.n, a.k, a.q).total;
  const json params = {{"n", a.n}, {"k", a.k}, {"q", a.q}, {"verify", a.verify}};
  if (c.format == "csv") {
    os << "# " << kToolName << ' ' << kToolVersion << " nh n=" << a.n << " k=" << a.k
       << " q=" << a.q << " variant=both seed=none\n";
    if (verified) os << "# verified=" << (*verified ? "true" : "false") << '\n';
    os << "h,all_pairs,restricted_pairs\n";
    for (int h = 1; h <= 2 * a.k; ++h) {
      os << h << ',' << all.counts[h].str() << ',' << restricted.counts[h].str() << '\n';
    }
    return;
  }
  emit_json(os, {{"meta", meta("nh", params, "both", std::nullopt)},
                 {"all_pairs", counts_json(all)},
                 {"restricted_pairs", counts_json(restricted)},
                 {"set_size", L.str()},
                 {"all_pairs_total", all.total().str()},
                 {"mass_identity_holds", all.total() == (L - 1) * L},
                 {"verified", verified ? json(*verified) : json(nullptr)}});
}

void run_curve(const CurveArgs& a, const Common& c, std::ostream& os) {
  if (a.n < 1) throw InvalidParameter("--n must be >= 1");
  if (!(a.target > 0.0 && a.target < 1.0)) throw InvalidParameter("--target must lie in (0, 1)");
  std::vector<int> qs = a.qs.empty() ? std::vector<int>{2} : a.qs;
  for (int q : qs) make_field(q);
  std::vector<GammaMode> modes;
  for (const auto& g : a.gammas.empty() ? std::vector<std::string>{"dense"} : a.gammas) {
    modes.push_back(GammaMode::parse(g));
  }
  for (int q : qs) {
    for (const auto& m : modes) validate(ModelParams{a.n, 0, 1, q, m.gamma(a.n, q)});
  }
  const auto grid = parse_grid(a.grid);
  const NhVariant variant = parse_variant(a.variant);
  const auto points = curve_family(a.n, qs, modes, grid, a.target, variant);

  std::vector<std::string> labels;
  for (const auto& m : modes) labels.push_back(m.label());
  if (c.format == "csv") {
    os << "# " << kToolName << ' ' << kToolVersion << " curve n=" << a.n << " q=";
    for (std::size_t i = 0; i < qs.size(); ++i) os << (i ? ";" : "") << qs[i];
    os << " gamma=";
    for (std::size_t i = 0; i < labels.size(); ++i) os << (i ? ";" : "") << labels[i];
    os << " target=" << a.target << " grid=" << a.grid << " variant=" << to_string(variant)
       << " seed=none\n";
    write_curve_csv(os, points);
    return;
  }
  json rows = json::array();
  for (const auto& p : points) {
    rows.push_back({{"q", p.q},
                    {"gamma_mode", p.gamma_mode.label()},
                    {"gamma", p.gamma},
                    {"K", p.K},
                    {"M", p.M},
                    {"sparsity_ratio", p.sparsity_ratio},
                    {"compression_ratio", p.compression_ratio},
                    {"achieved", p.achieved},
                    {"bound_log", log_json(p.bound_at_M.log_value)}});
  }
  const json params = {{"n", a.n}, {"q", qs}, {"gamma", labels},
                       {"target", a.target}, {"grid", a.grid}};
  emit_json(os, {{"meta", meta("curve", params, to_string(variant), std::nullopt)},
                 {"points", rows}});
}

json interval_json(const Interval& i) { return {{"low", i.low}, {"high", i.high}}; }

json run_simulate(const SimulateArgs& a) {
  check_model(a.n, a.k, a.q);
  const ModelParams p{a.n, a.k, a.m, a.q, resolve_gamma(a.gamma, a.n, a.q)};
  validate(p);
  TrialOptions opts;
  opts.variant = parse_variant(a.variant);
  opts.workers = a.workers;
  opts.enumeration_cap = a.cap;
  if (!a.dump_dir.empty()) {
    std::filesystem::create_directories(a.dump_dir);
    const FieldSpec f = make_field(a.q);
    opts.on_trial = [&, f](std::uint64_t t, const SensingMatrix& A, const Signal& x) {
      if (t >= a.dump_limit) return;
      json y = json::array();
      const auto meas = matvec(f, A, x);
      for (Eigen::Index i = 0; i < meas.size(); ++i) y.push_back(static_cast<int>(meas[i]));
      const json doc = {{"trial", t},
                        {"matrix", to_json(A, a.seed)},
                        {"signal", to_json(a.q, x, a.seed)},
                        {"measurement", y}};
      std::ofstream(std::filesystem::path(a.dump_dir) / ("trial_" + std::to_string(t) + ".json"))
          << doc.dump(2) << '\n';
    };
  }
  const TrialReport r = run_trials(p, a.trials, a.seed, opts);
  const json params = {{"n", p.N}, {"k", p.K}, {"m", p.M}, {"q", p.q}, {"gamma", p.gamma},
                       {"gamma_spec", a.gamma}, {"trials", a.trials}};
  return {{"meta", meta("simulate", params, to_string(r.variant), r.seed)},
          {"trials", r.trials},
          {"seed", r.seed},
          {"e0_errors", r.e0_errors},
          {"e_errors", r.e_errors},
          {"e0_rate", r.e0_rate},
          {"e_rate", r.e_rate},
          {"e0_ci", interval_json(r.e0_ci)},
          {"e_ci", interval_json(r.e_ci)},
          {"inclusion_violations", r.inclusion_violations},
          {"union_bound_log", log_json(r.union_bound_value.log_value)},
          {"union_bound_value", r.union_bound_value.prob()},
          {"union_bound_capped", r.union_bound_value.capped().prob()},
          {"fano_value", r.fano_value}};
}

}  // namespace

int parse_and_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Compressed sensing over finite fields: bounds, curves and exhaustive simulation",
               kToolName};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  Common common;
  FieldArgs field_args;
  BoundArgs bound_args;
  NhArgs nh_args;
  CurveArgs curve_args;
  SimulateArgs sim_args;

  auto add_common = [&](CLI::App* sub, bool csv) {
    if (csv) {
      sub->add_option("--format", common.format, "Output format")
          ->check(CLI::IsMember({"json", "csv"}));
    }
    sub->add_option("--out", common.out_path, "Write data to this file instead of stdout");
  };

  auto* field = app.add_subcommand("field", "Show the reduction polynomial and table checksums");
  field->add_option("--q", field_args.q, "Field order")->required();
  add_common(field, false);

  auto* bound = app.add_subcommand("bound", "Evaluate the error-probability bounds");
  bound->add_option("--n", bound_args.n, "Signal length N")->required();
  bound->add_option("--k", bound_args.k, "Maximum sparsity K")->required();
  bound->add_option("--m", bound_args.m, "Number of measurements M")->required();
  bound->add_option("--q", bound_args.q, "Field order")->required();
  bound->add_option("--gamma", bound_args.gamma, "dense | c=<C> | value in (0,1]");
  bound->add_option("--variant", bound_args.variant, "all | restricted");
  add_common(bound, false);

  auto* nh = app.add_subcommand("nh", "Print the exact N_h table");
  nh->add_option("--n", nh_args.n, "Signal length N")->required();
  nh->add_option("--k", nh_args.k, "Maximum sparsity K")->required();
  nh->add_option("--q", nh_args.q, "Field order")->required();
  nh->add_flag("--verify", nh_args.verify, "Cross-check against exhaustive pair enumeration");
  add_common(nh, true);

  auto* curve_cmd = app.add_subcommand("curve", "Minimum measurements versus sparsity ratio");
  curve_cmd->add_option("--n", curve_args.n, "Signal length N");
  curve_cmd->add_option("--q", curve_args.qs, "Field order (repeatable)");
  curve_cmd->add_option("--gamma", curve_args.gammas, "dense | c=<C> (repeatable)");
  curve_cmd->add_option("--target", curve_args.target, "Error-probability target");
  curve_cmd->add_option("--grid", curve_args.grid, "start:stop:step or comma list of K/N");
  curve_cmd->add_option("--variant", curve_args.variant, "all | restricted");
  add_common(curve_cmd, true);

  auto* sim = app.add_subcommand("simulate", "Monte Carlo estimate of the error events");
  sim->add_option("--n", sim_args.n, "Signal length N")->required();
  sim->add_option("--k", sim_args.k, "Maximum sparsity K")->required();
  sim->add_option("--m", sim_args.m, "Number of measurements M")->required();
  sim->add_option("--q", sim_args.q, "Field order")->required();
  sim->add_option("--gamma", sim_args.gamma, "dense | c=<C> | value in (0,1]");
  sim->add_option("--variant", sim_args.variant, "all | restricted (for the reported bound)");
  sim->add_option("--trials", sim_args.trials, "Number of trials");
  sim->add_option("--seed", sim_args.seed, "64-bit master seed");
  sim->add_option("--dump", sim_args.dump_dir, "Directory for per-trial instance JSON");
  sim->add_option("--dump-limit", sim_args.dump_limit, "Dump at most this many trials");
  sim->add_option("--workers", sim_args.workers, "Worker threads (0 = all cores)");
  sim->add_option("--cap", sim_args.cap, "Enumeration cap for the decoder");
  add_common(sim, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    app.exit(e, out, err);
    return 1;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!common.out_path.empty()) {
    file.open(common.out_path);
    if (!file) {
      err << "error: cannot open " << common.out_path << " for writing\n";
      return 2;
    }
    sink = &file;
  }

  try {
    // Build into a buffer so a failure never leaves partial data behind.
    std::ostringstream buffer;
    if (field->parsed()) {
      emit_json(buffer, run_field(field_args));
    } else if (bound->parsed()) {
      emit_json(buffer, run_bound(bound_args));
    } else if (nh->parsed()) {
      run_nh(nh_args, common, buffer);
    } else if (curve_cmd->parsed()) {
      if (common.format == "json" && !curve_cmd->count("--format")) common.format = "csv";
      run_curve(curve_args, common, buffer);
    } else if (sim->parsed()) {
      emit_json(buffer, run_simulate(sim_args));
    }
    *sink << buffer.str();
    sink->flush();
    return 0;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace ffcs
