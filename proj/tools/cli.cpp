#include "cli.hpp"

#include <cmath>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "cosmo/closed_forms.hpp"
#include "cosmo/exact_geometry.hpp"
#include "cosmo/graph.hpp"
#include "cosmo/malliavin_stein.hpp"
#include "cosmo/rational.hpp"
#include "cosmo/simulation.hpp"
#include "json.hpp"

namespace cosmo::cli {
namespace {

// Usage errors detected after flag parsing (bad values, out-of-range p).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Options {
  unsigned n = 0;
  std::vector<unsigned> n_values;
  std::string p = "0.5";
  std::uint64_t reps = 1000;
  std::uint64_t seed = 1;
  std::string functional = "cosmo_edges";
  unsigned n_max = 4;
  unsigned oracle_n_max = 4;
  std::string format = "csv";
  std::string out;
  unsigned parallelism = std::max(1U, std::thread::hardware_concurrency());
  std::string standardization = "theoretical";
  std::string sampler = "sparse";
  bool atoms = false;
  bool allow_six_nodes = false;
};

Rational exact_probability(const std::string& text) {
  Rational p;
  try {
    p = parse_rational(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string("--p: ") + e.what());
  }
  if (p < 0 || p > 1) throw UsageError("--p must lie in [0, 1], got " + text);
  return p;
}

GraphFunctional graph_functional(const std::string& name) {
  switch (parse_functional(name)) {
    case Functional::cosmo_edges: return cosmo_edge_functional();
    case Functional::tri_edges: return tri_edge_functional();
    case Functional::arcs: return arc_count_functional();
    case Functional::leaves: return leaf_count_functional();
  }
  throw UsageError("unknown functional");
}

Functional checked_functional(const std::string& name) {
  try {
    return parse_functional(name);
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
}

std::optional<Rational> closed_form_mean(Functional f, std::uint64_t n, const Rational& p) {
  switch (f) {
    case Functional::cosmo_edges: return mean_cosmo(n, p);
    case Functional::tri_edges: return mean_tri(n, p);
    case Functional::arcs: return mean_arcs(n, p);
    case Functional::leaves: return mean_leaves(n, p);
  }
  return std::nullopt;
}

ExperimentConfig experiment_config(const Options& o) {
  ExperimentConfig cfg;
  cfg.n = o.n;
  try {
    cfg.p = ProbabilityRule::parse(o.p);
    cfg.standardization = parse_standardization(o.standardization);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  cfg.replications = o.reps;
  cfg.master_seed = o.seed;
  cfg.functional = checked_functional(o.functional);
  cfg.parallelism = o.parallelism;
  if (o.sampler == "sparse") {
    cfg.sampler = SamplerKind::sparse;
  } else if (o.sampler == "dense") {
    cfg.sampler = SamplerKind::dense;
  } else {
    throw UsageError("--sampler must be sparse or dense");
  }
  return cfg;
}

std::int64_t as_cell(std::uint64_t v) { return static_cast<std::int64_t>(v); }

std::string config_json(const std::string& command, const Options& o) {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["n"] = o.n;
  j["n_values"] = o.n_values;
  j["p"] = o.p;
  j["reps"] = o.reps;
  j["seed"] = o.seed;
  j["functional"] = o.functional;
  j["n_max"] = o.n_max;
  j["oracle_n_max"] = o.oracle_n_max;
  j["parallelism"] = o.parallelism;
  j["standardization"] = o.standardization;
  j["sampler"] = o.sampler;
  j["format"] = o.format;
  return j.dump();
}

// --- check ---------------------------------------------------------------

struct Tally {
  std::uint64_t cases = 0;
  bool pass = true;
  std::string first_failure;

  void record(bool ok, const std::string& what) {
    ++cases;
    if (!ok && pass) {
      pass = false;
      first_failure = what;
    }
  }
};

const std::vector<Rational>& check_probabilities() {
  static const std::vector<Rational> ps{Rational(1, 4), Rational(1, 3), Rational(1, 2), Rational(3, 4)};
  return ps;
}

// --- subcommands ---------------------------------------------------------

Table enumerate_table(const Options& o) {
  if (o.n < 1) throw UsageError("--n must be positive");
  const Rational p = exact_probability(o.p);
  const Functional f = checked_functional(o.functional);
  const GraphFunctional gf = graph_functional(o.functional);
  const AtomicDistribution d = exact_distribution(gf, o.n, p);
  Table t;
  if (o.atoms) {
    t.columns = {"n", "p", "functional", "value", "probability"};
    for (const Atom& a : d.atoms) t.add_row({as_cell(o.n), p, o.functional, a.value, a.probability});
    return t;
  }
  t.columns = {"n", "p", "functional", "mean", "variance", "closed_form_mean", "mean_matches", "atoms"};
  const Rational mean = exact_expectation(gf, o.n, p);
  const Rational closed = *closed_form_mean(f, o.n, p);
  t.add_row({as_cell(o.n), p, o.functional, mean, d.variance(), closed, mean == closed,
             static_cast<std::int64_t>(d.atoms.size())});
  return t;
}

Table simulate_table(const Options& o) {
  const ExperimentConfig cfg = experiment_config(o);
  try {
    validate(cfg);
  } catch (const ConfigError& e) {
    throw UsageError(e.what());
  }
  const RunSummary s = run_experiment(cfg);
  Table t;
  t.columns = {"n",       "p_rule",       "p",         "reps",          "seed",          "functional",
               "standardization", "count", "mean",      "variance",      "min",           "max",
               "ks",      "ks_empirical", "std_mean",  "std_sd",        "ref_mean",      "ref_var_lower",
               "ref_var_upper", "ref_var_scale", "clt_rate", "reservoir_sampled", "parallelism", "wall_seconds"};
  t.add_row({as_cell(cfg.n), cfg.p.to_string(), s.p, as_cell(cfg.replications), as_cell(cfg.master_seed),
             std::string(functional_name(cfg.functional)), std::string(standardization_name(cfg.standardization)),
             as_cell(s.count), s.mean, s.variance, s.min, s.max, s.ks_statistic, s.ks_empirical,
             s.standardizing_mean, s.standardizing_sd, s.reference.mean, s.reference.variance_lower,
             s.reference.variance_upper, s.reference.variance_scale, s.reference.clt_rate, s.reservoir_sampled,
             static_cast<std::int64_t>(cfg.parallelism), s.wall_seconds});
  return t;
}

struct BoundOutcome {
  Table table;
  bool holds = false;
};

BoundOutcome bound_table(const Options& o) {
  if (o.n < 2) throw UsageError("--n must be at least 2");
  if (o.n > (o.allow_six_nodes ? 6U : 5U)) {
    throw UsageError("--n above 5 needs --allow-six-nodes (and at most 6)");
  }
  const Rational p = exact_probability(o.p);
  if (p == 0 || p == 1) throw UsageError("--p must lie strictly inside (0, 1)");
  checked_functional(o.functional);
  const GraphFunctional gf = graph_functional(o.functional);
  const BTerms b = b_terms(gf, o.n, p, BTermOptions{o.allow_six_nodes});
  const double bound = kolmogorov_bound(b);
  const AtomicDistribution d = exact_distribution(gf, o.n, p);
  const double dk = exact_kolmogorov_distance(d, d.mean().get_d(), std::sqrt(d.variance().get_d()));
  BoundOutcome out;
  out.holds = dk <= bound;
  out.table.columns = {"n", "p", "functional", "b1", "b2", "b3", "b4", "b5", "bound", "d_k", "holds"};
  out.table.add_row({as_cell(o.n), p, o.functional, b.b1, b.b2, b.b3, b.b4, b.b5, bound, dk, out.holds});
  return out;
}

struct SweepOutcome {
  Table table;
  bool all_ok = true;
};

SweepOutcome sweep_table(const Options& o) {
  if (o.n_values.empty()) throw UsageError("sweep needs --n with a comma-separated list");
  Options first = o;
  first.n = o.n_values.front();
  const ExperimentConfig base = experiment_config(first);
  for (unsigned n : o.n_values) {
    ExperimentConfig c = base;
    c.n = n;
    try {
      validate(c);
    } catch (const ConfigError& e) {
      throw UsageError(e.what());
    }
  }
  std::vector<Node> ns(o.n_values.begin(), o.n_values.end());
  const auto rows = rate_sweep(base, ns);
  SweepOutcome out;
  out.table.columns = {"n", "p", "ks", "clt_rate", "ratio", "functional", "reps", "seed", "error"};
  for (const SweepRow& r : rows) {
    if (!r.error.empty()) out.all_ok = false;
    out.table.add_row({as_cell(r.n), r.p, r.ks, r.clt_rate, r.ratio, o.functional, as_cell(o.reps),
                       as_cell(o.seed), r.error});
  }
  return out;
}

void emit(const Table& t, const Options& o, std::ostream& out) {
  const ReportFormat format = parse_report_format(o.format);
  if (o.out.empty() || o.out == "-") {
    emit_report(t, format, out);
  } else {
    emit_report(t, format, std::filesystem::path(o.out));
  }
}

}  // namespace

CheckResult run_check_suite(unsigned n_max, unsigned oracle_n_max) {
  Tally cosmo_formula, cosmo_oracle, cosmo_mean, tri_formula, tri_mean, dimension, variance;
  for (Node n = 1; n <= n_max; ++n) {
    for (const Graph& g : enumerate_graphs(n)) {
      const GraphStats s = compute_stats(g);
      const std::string label = "n=" + std::to_string(n) + " mask=" + std::to_string(g.mask());
      const EdgeSet cosmo = characterized_cosmo_edges(g);
      cosmo_formula.record(cosmo.size() == cosmo_edge_count(s.m, s.leaves), label);
      if (n <= oracle_n_max && g.arc_count() <= kOracleArcCap) {
        cosmo_oracle.record(oracle_edge_set(g) == cosmo, label);
      }
      tri_formula.record(characterized_tri_edges(g).size() == tri_edge_count(s.m, s.non_isolated), label);
      if (s.m >= 1) {
        dimension.record(polytope_dimension(g) == static_cast<int>(n + s.m - 1 - s.isolated), label);
      }
    }
    if (n >= 2) {
      const FunctionalTable cosmo_values(cosmo_edge_functional(), n);
      const FunctionalTable tri_values(tri_edge_functional(), n);
      for (const Rational& p : check_probabilities()) {
        Rational cosmo_sum(0), tri_sum(0);
        for (const Graph& g : enumerate_graphs(n)) {
          const Rational w = graph_weight(g, p);
          cosmo_sum += w * Rational(cosmo_values.at(g.mask()));
          tri_sum += w * Rational(tri_values.at(g.mask()));
        }
        const std::string label = "n=" + std::to_string(n) + " p=" + p.get_str();
        cosmo_mean.record(cosmo_sum == mean_cosmo(n, p), label);
        tri_mean.record(tri_sum == mean_tri(n, p), label);
      }
    }
    if (n >= 3 && n <= 5) {
      for (const Rational& p : check_probabilities()) {
        Rational e1(0), e2(0), l1(0), l2(0), c1(0), c2(0);
        for (const Graph& g : enumerate_graphs(n)) {
          const Rational w = graph_weight(g, p);
          const GraphStats s = compute_stats(g);
          const Rational pairs(s.m * (s.m - (s.m > 0)) / 2);
          const Rational leaves(s.leaves);
          const Rational core = 9 * pairs + Rational(s.m);
          e1 += w * pairs;
          e2 += w * pairs * pairs;
          l1 += w * leaves;
          l2 += w * leaves * leaves;
          c1 += w * core;
          c2 += w * core * core;
        }
        const std::string label = "n=" + std::to_string(n) + " p=" + p.get_str();
        variance.record(e2 - e1 * e1 == var_pairs_of_arcs(n, p) && l2 - l1 * l1 == var_leaves(n, p) &&
                            c2 - c1 * c1 == var_core_exact(n, p),
                        label);
      }
    }
  }

  CheckResult result;
  result.table.columns = {"check", "n_max", "cases", "pass", "first_failure"};
  auto row = [&](const std::string& name, const Tally& t) {
    result.table.add_row({name, static_cast<std::int64_t>(n_max), static_cast<std::int64_t>(t.cases), t.pass,
                          t.first_failure});
  };
  row("cosmo_edge_formula", cosmo_formula);
  row("cosmo_edge_lp_oracle", cosmo_oracle);
  row("cosmo_mean_exact", cosmo_mean);
  row("tri_edge_formula", tri_formula);
  row("tri_mean_exact", tri_mean);
  row("dimension_formula", dimension);
  row("cosmo_variance_components", variance);
  result.all_passed = cosmo_formula.pass && cosmo_oracle.pass && cosmo_mean.pass && tri_formula.pass &&
                      tri_mean.pass && dimension.pass && variance.pass;
  return result;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Edge counts of cosmological polytopes of random graphs: exact checks, bounds and simulation"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", o.out, "Report destination file (default: standard output)");
  };

  auto* check = app.add_subcommand("check", "Validate edge, mean, variance and dimension formulas exhaustively");
  check->add_option("--n-max", o.n_max, "Largest node count to enumerate")->check(CLI::Range(1U, 6U));
  check->add_option("--oracle-n-max", o.oracle_n_max, "Largest node count for the LP edge oracle")
      ->check(CLI::Range(0U, 5U));
  add_format(check);

  auto* enumerate = app.add_subcommand("enumerate", "Exact law of a functional over all graphs on n nodes");
  enumerate->add_option("--n", o.n, "Node count")->required()->check(CLI::Range(1U, 6U));
  enumerate->add_option("--p", o.p, "Arc probability as a rational or decimal");
  enumerate->add_option("--functional", o.functional, "cosmo_edges, tri_edges, arcs or leaves");
  enumerate->add_flag("--atoms", o.atoms, "Emit the distribution atoms instead of the moments");
  add_format(enumerate);

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo experiment on G(n, p)");
  simulate->add_option("--n", o.n, "Node count")->required();
  simulate->add_option("--p", o.p, "Arc probability or rule c*n^-a");
  simulate->add_option("--reps", o.reps, "Replications");
  simulate->add_option("--seed", o.seed, "Master seed");
  simulate->add_option("--functional", o.functional, "cosmo_edges, tri_edges, arcs or leaves");
  simulate->add_option("--parallelism", o.parallelism, "Worker threads")->check(CLI::PositiveNumber);
  simulate->add_option("--standardization", o.standardization, "theoretical or empirical");
  simulate->add_option("--sampler", o.sampler, "sparse or dense");
  add_format(simulate);

  auto* bound = app.add_subcommand("bound", "B terms, Kolmogorov bound and exact distance by enumeration");
  bound->add_option("--n", o.n, "Node count")->required();
  bound->add_option("--p", o.p, "Arc probability as a rational or decimal");
  bound->add_option("--functional", o.functional, "cosmo_edges, tri_edges, arcs or leaves");
  bound->add_flag("--allow-six-nodes", o.allow_six_nodes, "Permit n = 6 (slow)");
  add_format(bound);

  auto* sweep = app.add_subcommand("sweep", "KS statistic against the CLT rate over several n");
  sweep->add_option("--n", o.n_values, "Comma-separated node counts")->required()->delimiter(',');
  sweep->add_option("--p", o.p, "Arc probability or rule c*n^-a");
  sweep->add_option("--reps", o.reps, "Replications per n");
  sweep->add_option("--seed", o.seed, "Master seed");
  sweep->add_option("--functional", o.functional, "cosmo_edges, tri_edges, arcs or leaves");
  sweep->add_option("--parallelism", o.parallelism, "Worker threads")->check(CLI::PositiveNumber);
  sweep->add_option("--standardization", o.standardization, "theoretical or empirical");
  sweep->add_option("--sampler", o.sampler, "sparse or dense");
  add_format(sweep);

  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.emplace_back("cosmo");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : storage) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    CLI::App* chosen = app.get_subcommands().front();
    const std::string name = chosen->get_name();
    err << "# config " << config_json(name, o) << "\n";
    int status = kExitOk;
    if (name == "check") {
      const CheckResult r = run_check_suite(o.n_max, std::min(o.oracle_n_max, o.n_max));
      emit(r.table, o, out);
      if (!r.all_passed) status = kExitFailure;
    } else if (name == "enumerate") {
      emit(enumerate_table(o), o, out);
    } else if (name == "simulate") {
      emit(simulate_table(o), o, out);
    } else if (name == "bound") {
      const BoundOutcome r = bound_table(o);
      emit(r.table, o, out);
      if (!r.holds) status = kExitFailure;
    } else if (name == "sweep") {
      const SweepOutcome r = sweep_table(o);
      emit(r.table, o, out);
      if (!r.all_ok) status = kExitFailure;
    }
    return status;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace cosmo::cli
