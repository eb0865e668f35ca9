#include "cosmo/simulation.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <thread>

#include "cosmo/closed_forms.hpp"
#include "cosmo/normal.hpp"
#include "cosmo/rng.hpp"

namespace cosmo {
namespace {

constexpr std::uint64_t kBlockSize = 1024;
constexpr std::uint64_t kReservoirTag = 0xffffffffffffff01ULL;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double parse_double(std::string_view text, std::string_view what) {
  std::string s(text);
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw ConfigError("cannot parse " + std::string(what) + " from '" + s + "'");
  }
  if (used != s.size()) throw ConfigError("cannot parse " + std::string(what) + " from '" + s + "'");
  return v;
}

std::string format_g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct Block {
  RunningMoments moments;
  std::vector<double> values;
};

}  // namespace

Functional parse_functional(std::string_view name) {
  if (name == "cosmo_edges") return Functional::cosmo_edges;
  if (name == "tri_edges") return Functional::tri_edges;
  if (name == "arcs") return Functional::arcs;
  if (name == "leaves") return Functional::leaves;
  throw std::domain_error("unknown functional '" + std::string(name) +
                          "' (expected cosmo_edges, tri_edges, arcs or leaves)");
}

std::string_view functional_name(Functional f) {
  switch (f) {
    case Functional::cosmo_edges: return "cosmo_edges";
    case Functional::tri_edges: return "tri_edges";
    case Functional::arcs: return "arcs";
    case Functional::leaves: return "leaves";
  }
  return "unknown";
}

std::uint64_t evaluate_functional(const GraphStats& stats, Functional f) {
  switch (f) {
    case Functional::cosmo_edges: return cosmo_edge_count(stats.m, stats.leaves);
    case Functional::tri_edges: return tri_edge_count(stats.m, stats.non_isolated);
    case Functional::arcs: return stats.m;
    case Functional::leaves: return stats.leaves;
  }
  throw std::domain_error("unknown functional");
}

std::uint64_t evaluate_functional(const GraphStats& stats, std::string_view name) {
  return evaluate_functional(stats, parse_functional(name));
}

ProbabilityRule ProbabilityRule::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (c != ' ' && c != '(' && c != ')') s.push_back(c);
  }
  const auto at = s.find("n^");
  if (at == std::string::npos) return literal(parse_double(s, "probability"));
  ProbabilityRule rule;
  rule.coefficient = 1.0;
  if (at > 0) {
    if (s[at - 1] != '*') throw ConfigError("probability rule must look like c*n^-a, got '" + s + "'");
    rule.coefficient = parse_double(s.substr(0, at - 1), "rule coefficient");
  }
  rule.exponent = -parse_double(s.substr(at + 2), "rule exponent");
  return rule;
}

double ProbabilityRule::at(std::uint64_t n) const {
  if (exponent == 0) return coefficient;
  return coefficient * std::pow(static_cast<double>(n), -exponent);
}

std::string ProbabilityRule::to_string() const {
  if (exponent == 0) return format_g17(coefficient);
  return format_g17(coefficient) + "*n^" + format_g17(-exponent);
}

std::string_view standardization_name(Standardization s) {
  return s == Standardization::theoretical ? "theoretical" : "empirical";
}

Standardization parse_standardization(std::string_view name) {
  if (name == "theoretical") return Standardization::theoretical;
  if (name == "empirical") return Standardization::empirical;
  throw ConfigError("unknown standardization '" + std::string(name) + "'");
}

double validate(const ExperimentConfig& cfg) {
  if (cfg.n < 2) throw ConfigError("experiment needs n >= 2");
  const double p = cfg.p.at(cfg.n);
  if (!(p > 0.0 && p < 1.0)) {
    throw ConfigError("arc probability " + format_g17(p) + " from rule '" + cfg.p.to_string() +
                      "' is outside (0, 1)");
  }
  if (cfg.replications < 2) throw ConfigError("experiment needs at least 2 replications");
  if (cfg.parallelism < 1) throw ConfigError("parallelism must be at least 1");
  if (cfg.reservoir_cap < 2) throw ConfigError("reservoir cap must be at least 2");
  return p;
}

void RunningMoments::push(double x) {
  if (count_ == 0) {
    min_ = max_ = x;
  } else {
    min_ = std::min(min_, x);
    max_ = std::max(max_, x);
  }
  ++count_;
  const double delta = x - mean_;
  mean_ += delta / static_cast<double>(count_);
  m2_ += delta * (x - mean_);
}

void RunningMoments::merge(const RunningMoments& other) {
  if (other.count_ == 0) return;
  if (count_ == 0) {
    *this = other;
    return;
  }
  const double na = static_cast<double>(count_);
  const double nb = static_cast<double>(other.count_);
  const double total = na + nb;
  const double delta = other.mean_ - mean_;
  mean_ += delta * nb / total;
  m2_ += other.m2_ + delta * delta * na * nb / total;
  count_ += other.count_;
  min_ = std::min(min_, other.min_);
  max_ = std::max(max_, other.max_);
}

double RunningMoments::variance() const {
  if (count_ < 2) return kNaN;
  return m2_ / static_cast<double>(count_ - 1);
}

TheoreticalReference theoretical_reference(Functional f, Node n, double p) {
  TheoreticalReference r;
  r.clt_rate = clt_rate(n, p);
  r.variance_scale = tri_var_lower_reference(n, p);
  switch (f) {
    case Functional::cosmo_edges: {
      r.mean = mean_cosmo(n, p);
      const FloatInterval v = variance_interval_cosmo(n, p);
      r.variance_lower = v.lower;
      r.variance_upper = v.upper;
      break;
    }
    case Functional::tri_edges:
      r.mean = mean_tri(n, p);
      // Every covariance among C(E,2), C(N~,2) and N~ E is non-negative.
      r.variance_lower = 256 * var_pairs_of_arcs(n, p);
      r.variance_upper = kNaN;
      break;
    case Functional::arcs:
      r.mean = mean_arcs(n, p);
      r.variance_lower = r.variance_upper = mean_arcs(n, p) * (1 - p);
      break;
    case Functional::leaves:
      r.mean = mean_leaves(n, p);
      r.variance_lower = r.variance_upper = var_leaves(n, p);
      break;
  }
  return r;
}

bool same_results(const RunSummary& a, const RunSummary& b) {
  auto same = [](double x, double y) { return std::bit_cast<std::uint64_t>(x) == std::bit_cast<std::uint64_t>(y); };
  return a.config == b.config && same(a.p, b.p) && a.count == b.count && same(a.mean, b.mean) &&
         same(a.variance, b.variance) && same(a.min, b.min) && same(a.max, b.max) &&
         same(a.ks_statistic, b.ks_statistic) && same(a.ks_empirical, b.ks_empirical) &&
         same(a.standardizing_mean, b.standardizing_mean) && same(a.standardizing_sd, b.standardizing_sd) &&
         a.reservoir_sampled == b.reservoir_sampled && same(a.reference.mean, b.reference.mean) &&
         same(a.reference.variance_lower, b.reference.variance_lower) &&
         same(a.reference.variance_upper, b.reference.variance_upper) &&
         same(a.reference.variance_scale, b.reference.variance_scale) &&
         same(a.reference.clt_rate, b.reference.clt_rate);
}

namespace {

RunSummary run_impl(const ExperimentConfig& cfg, const std::function<double(const GraphStats&)>& evaluate,
                    TheoreticalReference reference) {
  const auto start = std::chrono::steady_clock::now();
  const double p = validate(cfg);

  auto replicate = [&](std::uint64_t index) {
    const CounterRng stream = CounterRng::for_stream(cfg.master_seed, index);
    const Graph g = cfg.sampler == SamplerKind::sparse ? sample_sparse(cfg.n, p, stream)
                                                       : sample_dense(cfg.n, p, stream);
    return evaluate(compute_stats(g));
  };

  const std::uint64_t reps = cfg.replications;
  const std::uint64_t blocks = (reps + kBlockSize - 1) / kBlockSize;
  const std::uint64_t wave = std::max<std::uint64_t>(1, std::uint64_t{cfg.parallelism} * 8);

  RunningMoments total;
  std::vector<double> reservoir;
  reservoir.reserve(std::min<std::uint64_t>(reps, cfg.reservoir_cap));
  RngCursor reservoir_rng(CounterRng::for_stream(cfg.master_seed, kReservoirTag));
  std::uint64_t seen = 0;

  for (std::uint64_t first = 0; first < blocks; first += wave) {
    const std::uint64_t last = std::min(blocks, first + wave);
    std::vector<Block> results(last - first);
    std::atomic<std::uint64_t> next{first};
    auto worker = [&]() {
      for (std::uint64_t b = next++; b < last; b = next++) {
        Block& out = results[b - first];
        const std::uint64_t lo = b * kBlockSize;
        const std::uint64_t hi = std::min(reps, lo + kBlockSize);
        out.values.reserve(hi - lo);
        for (std::uint64_t i = lo; i < hi; ++i) {
          const double v = replicate(i);
          out.moments.push(v);
          out.values.push_back(v);
        }
      }
    };
    const unsigned threads =
        static_cast<unsigned>(std::min<std::uint64_t>(cfg.parallelism, last - first));
    if (threads <= 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      pool.reserve(threads);
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    // Merge in block order so the result does not depend on scheduling.
    for (const Block& block : results) {
      total.merge(block.moments);
      for (double v : block.values) {
        if (reservoir.size() < cfg.reservoir_cap) {
          reservoir.push_back(v);
        } else {
          const std::uint64_t slot = reservoir_rng.next_below(seen + 1);
          if (slot < cfg.reservoir_cap) reservoir[slot] = v;
        }
        ++seen;
      }
    }
  }

  RunSummary s;
  s.config = cfg;
  s.p = p;
  s.count = total.count();
  s.mean = total.mean();
  s.variance = total.variance();
  s.min = total.min();
  s.max = total.max();
  s.reservoir_sampled = reps > cfg.reservoir_cap;
  s.reference = reference;
  const double sd = std::sqrt(s.variance);
  s.standardizing_sd = sd;
  s.standardizing_mean = cfg.standardization == Standardization::theoretical && std::isfinite(reference.mean)
                             ? reference.mean
                             : s.mean;
  if (!(sd > 0)) {
    throw std::domain_error("functional has zero sample variance; cannot standardize");
  }
  s.ks_statistic = empirical_ks(reservoir, s.standardizing_mean, sd);
  s.ks_empirical = empirical_ks(reservoir, s.mean, sd);
  s.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return s;
}

}  // namespace

RunSummary run_experiment(const ExperimentConfig& cfg) {
  const double p = validate(cfg);
  const Functional f = cfg.functional;
  return run_impl(
      cfg, [f](const GraphStats& st) { return static_cast<double>(evaluate_functional(st, f)); },
      theoretical_reference(f, cfg.n, p));
}

RunSummary run_experiment(const ExperimentConfig& cfg, const StatFunction& custom) {
  const double p = validate(cfg);
  TheoreticalReference ref;
  ref.mean = custom.theoretical_mean.value_or(kNaN);
  ref.variance_lower = ref.variance_upper = kNaN;
  ref.variance_scale = tri_var_lower_reference(cfg.n, p);
  ref.clt_rate = clt_rate(cfg.n, p);
  return run_impl(cfg, custom.evaluate, ref);
}

double empirical_ks(std::span<const double> samples, double mean, double sd) {
  if (!(sd > 0)) throw std::domain_error("empirical_ks: sd must be positive");
  if (samples.empty()) throw std::domain_error("empirical_ks: no samples");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const double count = static_cast<double>(sorted.size());
  double sup = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double phi = normal_cdf((sorted[i] - mean) / sd);
    const double above = static_cast<double>(i + 1) / count;
    const double below = static_cast<double>(i) / count;
    sup = std::max({sup, std::abs(above - phi), std::abs(below - phi)});
  }
  return sup;
}

std::vector<SweepRow> rate_sweep(const ExperimentConfig& base, std::span<const Node> n_values,
                                 const StatFunction* custom) {
  std::vector<SweepRow> rows;
  rows.reserve(n_values.size());
  for (Node n : n_values) {
    SweepRow row;
    row.n = n;
    ExperimentConfig cfg = base;
    cfg.n = n;
    row.clt_rate = kNaN;
    try {
      row.p = cfg.p.at(n);
      row.clt_rate = clt_rate(n, row.p);
      const RunSummary s = custom ? run_experiment(cfg, *custom) : run_experiment(cfg);
      row.ks = s.ks_statistic;
      row.ratio = row.ks / row.clt_rate;
    } catch (const std::exception& e) {
      row.ks = row.ratio = kNaN;
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace cosmo
