#ifndef RGCOUNT_ESTIMATE_HPP
#define RGCOUNT_ESTIMATE_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "rgcount/embed.hpp"
#include "rgcount/graph.hpp"
#include "rgcount/scaled_value.hpp"

namespace rgc {

enum class Target { Cliques, IndependentSets, Covers };

enum class SampleMode { FixedCount, MedianOfMeans };

Target parse_target(const std::string& s);           // "cliques" | "independent-sets" | "covers"
std::string target_name(Target t);

struct SampleConfig {
  double epsilon = 0.1;             // relative error target, in (0,1)
  double delta = 0.1;               // failure probability, in (0,1)
  std::optional<double> rho;        // critical-ratio bound; >= 1 when set
  std::optional<BigRat> model_p;    // enables the analytic rho default
  SampleMode mode = SampleMode::FixedCount;
  ValueMode values = ValueMode::Log;

  // Harness override: run exactly this many samples instead of the
  // (epsilon, delta, rho)-derived count. Experiment presets use it.
  std::optional<std::uint64_t> sample_override;
};

struct SamplePlan {
  std::uint64_t total = 0;
  std::uint64_t groups = 1;      // 1 in fixed-count mode
  std::uint64_t group_size = 0;  // == total in fixed-count mode
};

// Fixed count: T = ceil(rho / (epsilon^2 delta)), mean with the Chebyshev
// guarantee. Median of means: ceil(8 ln(1/delta)) groups of
// ceil(8 rho / epsilon^2). Requires cfg.rho.
SamplePlan sample_plan(const SampleConfig& cfg);
std::uint64_t required_samples(const SampleConfig& cfg);

// cfg.rho if set; otherwise 4x the analytic crr for the target at (k, n, p)
// (p taken from cfg.model_p, complemented for independent sets). Throws
// std::invalid_argument when neither is available.
double resolve_rho(const SampleConfig& cfg, Target target, unsigned k, std::size_t n);

struct EstimateReport {
  ScaledValue point;             // mean (fixed-count) or median of group means
  std::uint64_t samples = 0;
  std::uint64_t zero_outputs = 0;
  ScaledValue second_moment;     // empirical mean of squared samples
  double empirical_crr = 0.0;    // mean of squares / square of mean; NaN if mean 0
  ScaledValue ci_low, ci_high;   // Chebyshev interval at level 1-delta around the mean
  double rho_used = 0.0;
  SamplePlan plan;
};

// Runs the estimator plan. Sample i draws from substream (seed, i); zero
// outputs count toward the mean and are never resampled; the reduction runs
// in sample-index order, so a (graph, cfg, seed) triple reproduces its
// report exactly within one build. The independent-set target runs the
// clique estimator on the complement graph, sample-for-sample.
EstimateReport estimate(const Graph& g, unsigned k, Target target, const SampleConfig& cfg,
                        std::uint64_t seed);

}  // namespace rgc

#endif
