#include "trotterlab/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "trotterlab/battery.hpp"
#include "trotterlab/cantor.hpp"
#include "trotterlab/errors.hpp"
#include "trotterlab/evolution.hpp"
#include "trotterlab/rates.hpp"
#include "trotterlab/trotter.hpp"

namespace trotterlab {

namespace {

using nlohmann::json;

// Pulls typed values out of the config, substituting defaults, and records
// the value actually used. finish() rejects keys nobody consumed, so a typo
// in a config never silently falls back to a default.
class ConfigReader {
 public:
  explicit ConfigReader(json j) : j_(std::move(j)) {
    if (!j_.is_object())
      throw UsageError("config root must be a JSON object");
  }

  std::string str(const std::string& key, const std::string& def) {
    if (!j_.contains(key)) return use(key, def);
    if (!j_.at(key).is_string())
      throw UsageError("config key '" + key + "' must be a string");
    return use(key, j_.at(key).get<std::string>());
  }

  double number(const std::string& key, double def) {
    if (!j_.contains(key)) return use(key, def);
    if (!j_.at(key).is_number())
      throw UsageError("config key '" + key + "' must be a number");
    return use(key, j_.at(key).get<double>());
  }

  long integer(const std::string& key, long def) {
    if (!j_.contains(key)) return use(key, def);
    if (!j_.at(key).is_number_integer())
      throw UsageError("config key '" + key + "' must be an integer");
    return use(key, j_.at(key).get<long>());
  }

  bool boolean(const std::string& key, bool def) {
    if (!j_.contains(key)) return use(key, def);
    if (!j_.at(key).is_boolean())
      throw UsageError("config key '" + key + "' must be a boolean");
    return use(key, j_.at(key).get<bool>());
  }

  std::uint64_t seed(std::uint64_t def) {
    const std::string key = "seed";
    if (!j_.contains(key)) return use(key, def);
    if (!j_.at(key).is_number_unsigned() && !j_.at(key).is_number_integer())
      throw UsageError("config key 'seed' must be a nonnegative integer");
    return use(key, j_.at(key).get<std::uint64_t>());
  }

  std::vector<long> long_list(const std::string& key,
                              const std::vector<long>& def) {
    if (!j_.contains(key)) return use(key, def);
    const json& v = j_.at(key);
    if (!v.is_array())
      throw UsageError("config key '" + key + "' must be an array of integers");
    std::vector<long> out;
    for (const auto& e : v) {
      if (!e.is_number_integer())
        throw UsageError("config key '" + key +
                         "' must be an array of integers");
      out.push_back(e.get<long>());
    }
    return use(key, out);
  }

  std::vector<double> double_list(const std::string& key,
                                  const std::vector<double>& def) {
    if (!j_.contains(key)) return use(key, def);
    const json& v = j_.at(key);
    if (!v.is_array())
      throw UsageError("config key '" + key + "' must be an array of numbers");
    std::vector<double> out;
    for (const auto& e : v) {
      if (!e.is_number())
        throw UsageError("config key '" + key + "' must be an array of numbers");
      out.push_back(e.get<double>());
    }
    return use(key, out);
  }

  std::vector<std::string> string_list(const std::string& key,
                                       const std::vector<std::string>& def) {
    if (!j_.contains(key)) return use(key, def);
    const json& v = j_.at(key);
    if (!v.is_array())
      throw UsageError("config key '" + key + "' must be an array of strings");
    std::vector<std::string> out;
    for (const auto& e : v) {
      if (!e.is_string())
        throw UsageError("config key '" + key + "' must be an array of strings");
      out.push_back(e.get<std::string>());
    }
    return use(key, out);
  }

  // Raw subtree (for the potential descriptors); the resolved echo must be
  // written back by the caller once defaults are applied.
  std::optional<json> raw(const std::string& key) {
    if (!j_.contains(key)) return std::nullopt;
    seen_.insert(key);
    return j_.at(key);
  }

  void set_resolved(const std::string& key, json value) {
    resolved_[key] = std::move(value);
  }

  void finish(const std::string& experiment) {
    for (const auto& [key, value] : j_.items()) {
      (void)value;
      if (!seen_.count(key))
        throw UsageError("unknown config key '" + key + "' for experiment '" +
                         experiment + "'");
    }
  }

  std::string echo() const { return resolved_.dump(); }

 private:
  template <typename T>
  T use(const std::string& key, T value) {
    seen_.insert(key);
    resolved_[key] = value;
    return value;
  }

  json j_;
  json resolved_ = json::object();
  std::set<std::string> seen_;
};

void require_increasing(const std::vector<long>& ns, const std::string& key) {
  if (ns.empty()) throw UsageError("config key '" + key + "' must be nonempty");
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (ns[i] < 1 || (i > 0 && ns[i] <= ns[i - 1]))
      throw UsageError("config key '" + key +
                       "' must be strictly increasing and positive");
  }
}

const std::vector<std::string> kCheckColumns = {"check_id", "params", "lhs",
                                                "rhs",      "margin", "satisfied"};

std::string joined_params(const BoundCheckReport& r) {
  std::string out;
  for (std::size_t i = 0; i < r.params.size(); ++i) {
    if (i) out += ";";
    out += r.params[i].first + "=" + format_double(r.params[i].second);
  }
  return out;
}

void append_check_rows(RunReport& out, const std::vector<BoundCheckReport>& cs,
                       long& failures) {
  for (const auto& r : cs) {
    if (!r.satisfied) ++failures;
    out.rows.push_back({r.check_id, joined_params(r), format_double(r.lhs),
                        format_double(r.rhs), format_double(r.margin),
                        format_bool(r.satisfied)});
  }
}

// The classification thresholds ride along in every report so verdicts can
// be audited from the artifact alone.
void append_thresholds(RunReport& out) {
  const RateThresholds& th = kRateThresholds;
  out.summary.emplace_back("threshold_o_big_slack",
                           format_double(th.o_big_slack));
  out.summary.emplace_back("threshold_theta_floor",
                           format_double(th.theta_floor));
  out.summary.emplace_back("threshold_omega_growth",
                           format_double(th.omega_growth));
  out.summary.emplace_back("threshold_o_small_drop",
                           format_double(th.o_small_drop));
}

void summarize_constants(RunReport& out, const RateConstants& k) {
  out.summary.emplace_back("alpha", format_double(k.alpha));
  out.summary.emplace_back("eta", format_double(k.eta));
  out.summary.emplace_back("a_prime", format_double(k.a_prime));
  out.summary.emplace_back("d", format_double(k.d));
  out.summary.emplace_back("b_norm", format_double(k.b_norm));
  out.summary.emplace_back("c_a", format_double(k.c_a));
  out.summary.emplace_back("c_b", format_double(k.c_b));
  out.summary.emplace_back("c_h", format_double(k.c_h));
  out.summary.emplace_back("c_a_prime", format_double(k.c_a_prime));
  out.summary.emplace_back("c_h_prime", format_double(k.c_h_prime));
  out.summary.emplace_back("m_alpha", format_double(k.m_alpha));
  out.summary.emplace_back("l1", format_double(k.l1));
  out.summary.emplace_back("l2", format_double(k.l2));
  out.summary.emplace_back("l3", format_double(k.l3));
  out.summary.emplace_back("l3_tilde", format_double(k.l3_tilde));
  out.summary.emplace_back("m1", format_double(k.m1));
  out.summary.emplace_back("m2", format_double(k.m2));
  out.summary.emplace_back("m2_tilde", format_double(k.m2_tilde));
}

Ordering parse_ordering(const std::string& name) {
  if (name == "ba") return Ordering::ba;
  if (name == "ab") return Ordering::ab;
  if (name == "sym") return Ordering::sym;
  throw UsageError("unknown ordering '" + name + "' (want ba, ab or sym)");
}

NormKind parse_norm(const std::string& name) {
  if (name == "p1") return NormKind::p1;
  if (name == "p2") return NormKind::p2;
  if (name == "pinf") return NormKind::pinf;
  throw UsageError("unknown norm '" + name + "' (want p1, p2 or pinf)");
}

// ---- potential descriptors ----------------------------------------------

ScalarPotential potential_from_json(const json& pj, json& resolved) {
  if (!pj.is_object())
    throw UsageError("each potential must be a JSON object with a 'kind'");
  std::set<std::string> seen{"kind"};
  if (!pj.contains("kind") || !pj.at("kind").is_string())
    throw UsageError("each potential needs a string 'kind'");
  std::string kind = pj.at("kind").get<std::string>();
  resolved = json::object();
  resolved["kind"] = kind;
  auto num = [&](const std::string& key, double def) {
    seen.insert(key);
    double v = def;
    if (pj.contains(key)) {
      if (!pj.at(key).is_number())
        throw UsageError("potential key '" + key + "' must be a number");
      v = pj.at(key).get<double>();
    }
    resolved[key] = v;
    return v;
  };
  ScalarPotential q = ScalarPotential::constant(0.0);
  if (kind == "constant") {
    q = ScalarPotential::constant(num("value", 1.0));
  } else if (kind == "linear") {
    q = ScalarPotential::linear(num("slope", 1.0));
  } else if (kind == "holder_kink") {
    q = ScalarPotential::holder_kink(num("beta", 0.5));
  } else if (kind == "weierstrass") {
    q = ScalarPotential::weierstrass(num("beta", 0.5));
  } else if (kind == "cantor") {
    seen.insert("n_max");
    int n_max = 26;
    if (pj.contains("n_max")) {
      if (!pj.at("n_max").is_number_integer())
        throw UsageError("potential key 'n_max' must be an integer");
      n_max = pj.at("n_max").get<int>();
    }
    resolved["n_max"] = n_max;
    q = ScalarPotential::cantor(CantorSpec{n_max});
  } else if (kind == "witness") {
    seen.insert("levels");
    if (!pj.contains("levels") || !pj.at("levels").is_array())
      throw UsageError("witness potential needs an array 'levels'");
    std::vector<WitnessLevel> levels;
    json rl = json::array();
    for (const auto& lv : pj.at("levels")) {
      if (!lv.is_object() || !lv.contains("n") || !lv.contains("delta"))
        throw UsageError("each witness level needs 'n' and 'delta'");
      for (const auto& [k2, v2] : lv.items()) {
        (void)v2;
        if (k2 != "n" && k2 != "delta")
          throw UsageError("unknown witness level key '" + k2 + "'");
      }
      WitnessLevel w{lv.at("n").get<long>(), lv.at("delta").get<double>()};
      levels.push_back(w);
      json r2 = json::object();
      r2["n"] = w.n;
      r2["delta"] = w.delta;
      rl.push_back(r2);
    }
    resolved["levels"] = rl;
    q = ScalarPotential::witness(levels);
  } else {
    throw UsageError("unknown potential kind '" + kind + "'");
  }
  for (const auto& [key, value] : pj.items()) {
    (void)value;
    if (!seen.count(key))
      throw UsageError("unknown potential key '" + key + "' for kind '" +
                       kind + "'");
  }
  return q;
}

json default_potentials_evolution() {
  json a = json::array();
  a.push_back({{"kind", "linear"}, {"slope", 1.0}});
  a.push_back({{"kind", "holder_kink"}, {"beta", 0.5}});
  a.push_back({{"kind", "weierstrass"}, {"beta", 0.25}});
  a.push_back({{"kind", "weierstrass"}, {"beta", 0.5}});
  a.push_back({{"kind", "weierstrass"}, {"beta", 0.75}});
  return a;
}

json default_potentials_bridge() {
  json a = json::array();
  a.push_back({{"kind", "linear"}, {"slope", 1.0}});
  a.push_back({{"kind", "holder_kink"}, {"beta", 0.5}});
  a.push_back({{"kind", "weierstrass"}, {"beta", 0.5}});
  return a;
}

std::vector<ScalarPotential> read_potentials(ConfigReader& cfg,
                                             const json& defaults) {
  json list = defaults;
  if (auto raw = cfg.raw("potentials")) {
    if (!raw->is_array())
      throw UsageError("config key 'potentials' must be an array");
    list = *raw;
  }
  std::vector<ScalarPotential> out;
  json resolved_list = json::array();
  for (const auto& pj : list) {
    json r;
    out.push_back(potential_from_json(pj, r));
    resolved_list.push_back(r);
  }
  if (out.empty()) throw UsageError("config key 'potentials' must be nonempty");
  cfg.set_resolved("potentials", resolved_list);
  return out;
}

// A priori Riemann-gap bound from the Holder pair: each step cell of width
// tau contributes at most L tau^{1+beta}/(1+beta), and t - s <= 1.
double holder_gap_bound(const HolderPair& h, long n) {
  return h.constant / ((1.0 + h.beta) * std::pow(static_cast<double>(n), h.beta));
}

// ---- experiments ---------------------------------------------------------

RunReport run_section1_battery(ConfigReader& cfg) {
  long cases = cfg.integer("cases", 8);
  long dim = cfg.integer("dim", 6);
  bool parallel = cfg.boolean("parallel", true);
  std::uint64_t seed = cfg.seed(kDefaultSeed);
  cfg.finish("section1_battery");
  RunReport out;
  out.experiment = "section1_battery";
  out.columns = kCheckColumns;
  auto checks = inequality_battery(static_cast<int>(cases), dim, seed, parallel);
  long failures = 0;
  append_check_rows(out, checks, failures);
  out.summary.emplace_back("checks", format_long(static_cast<long>(checks.size())));
  out.summary.emplace_back("failures", format_long(failures));
  out.pass = failures == 0;
  out.config_echo = cfg.echo();
  return out;
}

RunReport run_trotter_rates(ConfigReader& cfg) {
  long dim = cfg.integer("dim", 6);
  double t = cfg.number("t", 1.0);
  double alpha = cfg.number("alpha", 0.5);
  auto ns = cfg.long_list("ns", {2, 4, 8, 16, 32, 64, 128, 256, 512, 1024});
  auto ordering_names = cfg.string_list("orderings", {"ba", "ab", "sym"});
  NormKind norm = parse_norm(cfg.str("norm", "p2"));
  bool parallel = cfg.boolean("parallel", true);
  std::uint64_t seed = cfg.seed(kDefaultSeed);
  cfg.finish("trotter_rates");
  require_increasing(ns, "ns");
  if (ns.front() < 2)
    throw UsageError("config key 'ns' must start at 2 or above");

  SplitMix64 rng(seed);
  GeneratorPair pair = random_pair(dim, rng);
  RateConstants k = measure_rate_constants(pair.a, pair.b, alpha);

  RunReport out;
  out.experiment = "trotter_rates";
  out.columns = {"ordering", "n", "error", "envelope", "margin", "satisfied"};
  long failures = 0;
  for (const auto& name : ordering_names) {
    Ordering ord = parse_ordering(name);
    ErrorCurve curve =
        trotter_error_curve(pair.a, pair.b, t, ns, ord, norm, parallel);
    auto envelope = envelope_check(curve, k, t);
    for (std::size_t i = 0; i < curve.ns.size(); ++i) {
      const auto& r = envelope[i];
      if (!r.satisfied) ++failures;
      out.rows.push_back({name, format_long(curve.ns[i]),
                          format_double(curve.errors[i]), format_double(r.rhs),
                          format_double(r.margin), format_bool(r.satisfied)});
    }
    RateFit fit = fit_rate(curve, 1);
    out.summary.emplace_back("gamma_" + name, format_double(fit.gamma));
    double ex = 1.0 - alpha;
    auto reference = [ex](long n) {
      double nn = static_cast<double>(n);
      return std::log(nn) / std::pow(nn, ex);
    };
    out.summary.emplace_back("verdict_" + name,
                             to_string(classify_rate(curve, reference)));
  }
  summarize_constants(out, k);
  out.summary.emplace_back("failures", format_long(failures));
  out.pass = failures == 0;
  out.config_echo = cfg.echo();
  return out;
}

RunReport run_envelope_audit(ConfigReader& cfg) {
  long dim = cfg.integer("dim", 6);
  double t = cfg.number("t", 1.0);
  double alpha = cfg.number("alpha", 0.5);
  auto ns = cfg.long_list("ns", {2, 4, 8, 16, 32, 64, 128, 256, 512, 1024});
  auto taus = cfg.double_list("taus", {0.5, 0.25, 0.125, 0.0625});
  auto ks = cfg.long_list("ks", {1, 2, 4, 8, 16, 32, 64});
  bool parallel = cfg.boolean("parallel", true);
  std::uint64_t seed = cfg.seed(kDefaultSeed);
  cfg.finish("envelope_audit");
  require_increasing(ns, "ns");
  require_increasing(ks, "ks");
  if (ns.front() < 2)
    throw UsageError("config key 'ns' must start at 2 or above");

  SplitMix64 rng(seed);
  GeneratorPair pair = random_pair(dim, rng);
  RateConstants k = measure_rate_constants(pair.a, pair.b, alpha);
  Matrix id = Matrix::Identity(pair.a.dim(), pair.a.dim());
  GeneratorSpec shifted = GeneratorSpec::analyze(pair.a.mat + k.eta * id);

  RunReport out;
  out.experiment = "envelope_audit";
  out.columns = kCheckColumns;
  long failures = 0;
  append_check_rows(out, lemma_bound_checks(shifted, pair.b, k, taus, ks),
                    failures);
  ErrorCurve curve = trotter_error_curve(pair.a, pair.b, t, ns, Ordering::ba,
                                         NormKind::p2, parallel);
  append_check_rows(out, envelope_check(curve, k, t), failures);
  summarize_constants(out, k);
  out.summary.emplace_back("failures", format_long(failures));
  out.pass = failures == 0;
  out.config_echo = cfg.echo();
  return out;
}

RunReport run_evolution_rates(ConfigReader& cfg) {
  auto ns = cfg.long_list("ns", {4, 8, 16, 32, 64, 128, 256});
  long grid = cfg.integer("grid", 64);
  bool parallel = cfg.boolean("parallel", true);
  auto potentials = read_potentials(cfg, default_potentials_evolution());
  (void)cfg.seed(kDefaultSeed);  // accepted for uniformity; nothing is random
  cfg.finish("evolution_rates");
  require_increasing(ns, "ns");

  RunReport out;
  out.experiment = "evolution_rates";
  out.columns = {"kind",       "beta",  "n",         "sup_error",
                 "corner_error", "bound", "satisfied"};
  long failures = 0;
  for (std::size_t pi = 0; pi < potentials.size(); ++pi) {
    const ScalarPotential& q = potentials[pi];
    if (!q.holder())
      throw UsageError("evolution_rates needs potentials with a Holder pair");
    const HolderPair& h = *q.holder();
    ErrorCurve sup_curve, corner_curve;
    for (long n : ns) {
      double sup = sup_riemann_error(q, n, grid, parallel);
      double corner = corner_riemann_error(q, n);
      double bound = holder_gap_bound(h, n);
      bool ok = sup <= bound + kBoundCheckTol * std::max(1.0, bound);
      if (!ok) ++failures;
      out.rows.push_back({to_string(q.kind()), format_double(h.beta),
                          format_long(n), format_double(sup),
                          format_double(corner), format_double(bound),
                          format_bool(ok)});
      sup_curve.ns.push_back(n);
      sup_curve.errors.push_back(sup);
      corner_curve.ns.push_back(n);
      corner_curve.errors.push_back(corner);
    }
    std::string label = std::to_string(pi) + "_" + to_string(q.kind());
    RateFit fit = fit_rate(sup_curve, 0);
    out.summary.emplace_back("gamma_" + label, format_double(fit.gamma));
    double beta = h.beta;
    auto ref_beta = [beta](long n) {
      return std::pow(static_cast<double>(n), -beta);
    };
    auto ref_one = [](long n) { return 1.0 / static_cast<double>(n); };
    out.summary.emplace_back("verdict_beta_" + label,
                             to_string(classify_rate(corner_curve, ref_beta)));
    out.summary.emplace_back("verdict_linear_" + label,
                             to_string(classify_rate(corner_curve, ref_one)));
  }
  out.summary.emplace_back("failures", format_long(failures));
  out.pass = failures == 0;
  out.config_echo = cfg.echo();
  return out;
}

RunReport run_cantor_demo(ConfigReader& cfg) {
  auto m_levels = cfg.long_list("m_levels", {2, 3, 4, 5, 6});
  long n_max = cfg.integer("n_max", 26);
  double classify_c = cfg.number("classify_c", 0.25);
  (void)cfg.seed(kDefaultSeed);
  cfg.finish("cantor_demo");
  require_increasing(m_levels, "m_levels");
  if (!(classify_c > 0.0))
    throw UsageError("config key 'classify_c' must be positive");

  CantorSpec spec{static_cast<int>(n_max)};
  ScalarPotential q = ScalarPotential::cantor(spec);
  RunReport out;
  out.experiment = "cantor_demo";
  out.columns = {"level",    "n",    "s",          "t",
                 "integral", "tail", "sample_sum", "error_lower",
                 "floor",    "floor_ok"};
  ErrorCurve curve;
  long failures = 0;
  for (long m : m_levels) {
    auto w = cantor_window(static_cast<int>(m));
    long n = 1L << m;
    MeasureResult integral = cantor_closed_integral(w.first, w.second, spec);
    double tau = (w.second - w.first) / static_cast<double>(n);
    double sample_sum = 0.0;
    for (long j = 0; j < n; ++j)
      sample_sum += q(w.first + static_cast<double>(j) * tau);
    sample_sum *= tau;
    double lower = std::max(
        0.0, std::abs(integral.value - sample_sum) - integral.uncertainty);
    // Residual mass is at least 1/2 and the window cuts at most 2 eps_m,
    // so the gap can never fall under this line.
    double floor = 0.5 - 2.0 * cantor_eps(static_cast<int>(m));
    bool ok = lower >= floor && lower > 0.49;
    if (!ok) ++failures;
    out.rows.push_back({format_long(m), format_long(n), format_double(w.first),
                        format_double(w.second), format_double(integral.value),
                        format_double(integral.uncertainty),
                        format_double(sample_sum), format_double(lower),
                        format_double(floor), format_bool(ok)});
    curve.ns.push_back(n);
    curve.errors.push_back(lower);
  }
  MeasureResult full = cantor_closed_integral(0.0, 1.0, spec);
  out.summary.emplace_back("residual_measure", format_double(full.value));
  out.summary.emplace_back("residual_tail", format_double(full.uncertainty));
  if (curve.ns.size() >= 6) {
    double c = classify_c;
    auto reference = [c](long n) {
      return std::pow(static_cast<double>(n), -c);
    };
    out.summary.emplace_back("verdict",
                             to_string(classify_rate(curve, reference)));
  } else {
    out.summary.emplace_back("verdict", "not_classified");
  }
  out.summary.emplace_back("failures", format_long(failures));
  out.pass = failures == 0;
  out.config_echo = cfg.echo();
  return out;
}

RunReport run_slow_witness_demo(ConfigReader& cfg) {
  json default_levels = json::array();
  default_levels.push_back({{"kind", "witness"},
                            {"levels", json::array({
                                           json{{"n", 8}, {"delta", 0.2}},
                                           json{{"n", 64}, {"delta", 0.05}},
                                           json{{"n", 512}, {"delta", 0.0125}},
                                       })}});
  auto potentials = read_potentials(cfg, default_levels);
  auto ns = cfg.long_list("ns", {8, 16, 32, 64, 128, 256, 512});
  auto cs = cfg.double_list("classify_c", {0.25, 0.5, 0.75, 1.0});
  (void)cfg.seed(kDefaultSeed);
  cfg.finish("slow_witness_demo");
  require_increasing(ns, "ns");
  if (potentials.size() != 1 ||
      potentials[0].kind() != PotentialKind::witness)
    throw UsageError("slow_witness_demo needs exactly one witness potential");
  const ScalarPotential& q = potentials[0];

  RunReport out;
  out.experiment = "slow_witness_demo";
  out.columns = {"n", "corner_error", "required_floor", "floor_ok"};
  long failures = 0;
  const auto& levels = q.witness_levels();
  for (const auto& lv : levels) {
    double err = corner_riemann_error(q, lv.n);
    bool ok = err >= lv.delta;
    if (!ok) ++failures;
    out.rows.push_back({format_long(lv.n), format_double(err),
                        format_double(lv.delta), format_bool(ok)});
  }
  ErrorCurve dense;
  for (long n : ns) {
    double err = corner_riemann_error(q, n);
    dense.ns.push_back(n);
    dense.errors.push_back(err);
    out.rows.push_back(
        {format_long(n), format_double(err), format_double(0.0), "true"});
  }
  for (double c : cs) {
    auto reference = [c](long n) { return std::pow(static_cast<double>(n), -c); };
    out.summary.emplace_back("verdict_c_" + format_double(c),
                             to_string(classify_rate(dense, reference)));
  }
  out.summary.emplace_back("failures", format_long(failures));
  out.pass = failures == 0;
  out.config_echo = cfg.echo();
  return out;
}

RunReport run_bridge_check(ConfigReader& cfg) {
  long m = cfg.integer("m", 256);
  double tau = cfg.number("tau", 0.25);
  long n = cfg.integer("n", 4);
  auto potentials = read_potentials(cfg, default_potentials_bridge());
  (void)cfg.seed(kDefaultSeed);
  cfg.finish("bridge_check");

  RunReport out;
  out.experiment = "bridge_check";
  out.columns = {"kind",         "matrix_error", "scalar_error",
                 "route_gap",    "bound",        "satisfied"};
  long failures = 0;
  for (const auto& q : potentials) {
    BridgeResult br = discretized_bridge(q, m, tau, n);
    double gap = std::abs(br.matrix_error - br.scalar_error);
    double bound = q.holder() ? holder_gap_bound(*q.holder(), n)
                              : std::numeric_limits<double>::infinity();
    bool ok = gap <= 1e-12 && br.scalar_error <= bound + kBoundCheckTol &&
              br.matrix_error <= bound + 1e-12 + kBoundCheckTol;
    if (!ok) ++failures;
    out.rows.push_back({to_string(q.kind()), format_double(br.matrix_error),
                        format_double(br.scalar_error), format_double(gap),
                        format_double(bound), format_bool(ok)});
  }
  out.summary.emplace_back("failures", format_long(failures));
  out.pass = failures == 0;
  out.config_echo = cfg.echo();
  return out;
}

}  // namespace

std::vector<std::string> experiment_names() {
  return {"section1_battery", "trotter_rates",     "envelope_audit",
          "evolution_rates",  "cantor_demo",       "slow_witness_demo",
          "bridge_check"};
}

RunReport run_experiment_text(const std::string& config_text,
                              std::optional<std::uint64_t> seed_override) {
  json j;
  try {
    j = json::parse(config_text);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw UsageError("config root must be a JSON object");
  if (seed_override) j["seed"] = *seed_override;
  ConfigReader cfg(std::move(j));
  std::string name = cfg.str("experiment", "");
  if (name == "section1_battery") return run_section1_battery(cfg);
  if (name == "trotter_rates") return run_trotter_rates(cfg);
  if (name == "envelope_audit") return run_envelope_audit(cfg);
  if (name == "evolution_rates") return run_evolution_rates(cfg);
  if (name == "cantor_demo") return run_cantor_demo(cfg);
  if (name == "slow_witness_demo") return run_slow_witness_demo(cfg);
  if (name == "bridge_check") return run_bridge_check(cfg);
  throw UsageError("unknown experiment '" + name +
                   "'; use --list-experiments to see the registered names");
}

RunReport run_experiment_file(const std::string& config_path,
                              std::optional<std::uint64_t> seed_override) {
  std::ifstream in(config_path, std::ios::binary);
  if (!in) throw UsageError("cannot open config file '" + config_path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return run_experiment_text(ss.str(), seed_override);
}

}  // namespace trotterlab
