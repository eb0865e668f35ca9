#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cosmo/graph.hpp"

namespace cosmo {

enum class Functional { cosmo_edges, tri_edges, arcs, leaves };

Functional parse_functional(std::string_view name);
std::string_view functional_name(Functional f);

std::uint64_t evaluate_functional(const GraphStats& stats, Functional f);
std::uint64_t evaluate_functional(const GraphStats& stats, std::string_view name);

// Arc probability p = coefficient * n^(-exponent); a literal p has exponent 0.
struct ProbabilityRule {
  double coefficient = 0;
  double exponent = 0;

  static ProbabilityRule literal(double p) { return {p, 0}; }
  // Accepts "0.05", "c*n^-a", "n^-a", "c*n^a".
  static ProbabilityRule parse(std::string_view text);

  double at(std::uint64_t n) const;
  std::string to_string() const;

  friend bool operator==(const ProbabilityRule&, const ProbabilityRule&) = default;
};

enum class Standardization { theoretical, empirical };
enum class SamplerKind { sparse, dense };

std::string_view standardization_name(Standardization s);
Standardization parse_standardization(std::string_view name);

struct ExperimentConfig {
  Node n = 0;
  ProbabilityRule p;
  std::uint64_t replications = 0;
  std::uint64_t master_seed = 0;
  Functional functional = Functional::cosmo_edges;
  // theoretical: exact mean with the sample sd; empirical: sample mean and sd.
  Standardization standardization = Standardization::theoretical;
  unsigned parallelism = 1;
  std::size_t reservoir_cap = std::size_t{1} << 20;
  SamplerKind sampler = SamplerKind::sparse;

  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Throws ConfigError; returns the resolved arc probability.
double validate(const ExperimentConfig& cfg);

// Count, mean and M2 with Welford updates and Chan's pairwise merge.
class RunningMoments {
 public:
  void push(double x);
  void merge(const RunningMoments& other);

  std::uint64_t count() const { return count_; }
  double mean() const { return mean_; }
  double variance() const;  // unbiased
  double min() const { return min_; }
  double max() const { return max_; }

 private:
  std::uint64_t count_ = 0;
  double mean_ = 0;
  double m2_ = 0;
  double min_ = 0;
  double max_ = 0;
};

// Theoretical quantities at the experiment's (n, p). Missing bounds are NaN.
struct TheoreticalReference {
  double mean = 0;
  double variance_lower = 0;
  double variance_upper = 0;
  double variance_scale = 0;  // order-of-magnitude reference, not a bound
  double clt_rate = 0;
};

TheoreticalReference theoretical_reference(Functional f, Node n, double p);

struct RunSummary {
  ExperimentConfig config;
  double p = 0;
  std::uint64_t count = 0;
  double mean = 0;
  double variance = 0;
  double min = 0;
  double max = 0;
  double ks_statistic = 0;  // under config.standardization
  double ks_empirical = 0;  // sample mean and sd
  double standardizing_mean = 0;
  double standardizing_sd = 0;
  bool reservoir_sampled = false;
  TheoreticalReference reference;
  double wall_seconds = 0;
};

// Everything but the wall-clock field, compared bit for bit.
bool same_results(const RunSummary& a, const RunSummary& b);

// A statistic evaluated from the graph statistics, used in place of the
// built-in functionals.
struct StatFunction {
  std::string label;
  std::function<double(const GraphStats&)> evaluate;
  std::optional<double> theoretical_mean;
};

RunSummary run_experiment(const ExperimentConfig& cfg);
RunSummary run_experiment(const ExperimentConfig& cfg, const StatFunction& custom);

// sup over sorted standardized samples of max(|i/N - Phi(z_i)|, |(i-1)/N - Phi(z_i)|).
double empirical_ks(std::span<const double> samples, double mean, double sd);

struct SweepRow {
  Node n = 0;
  double p = 0;
  double ks = 0;
  double clt_rate = 0;
  double ratio = 0;
  std::string error;  // empty on success
};

std::vector<SweepRow> rate_sweep(const ExperimentConfig& base, std::span<const Node> n_values,
                                 const StatFunction* custom = nullptr);

}  // namespace cosmo
