#include "rgcount/estimate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "rgcount/analytic.hpp"

namespace rgc {

Target parse_target(const std::string& s) {
  if (s == "cliques") return Target::Cliques;
  if (s == "independent-sets") return Target::IndependentSets;
  if (s == "covers") return Target::Covers;
  throw std::invalid_argument("unknown target '" + s + "'");
}

std::string target_name(Target t) {
  switch (t) {
    case Target::Cliques: return "cliques";
    case Target::IndependentSets: return "independent-sets";
    case Target::Covers: return "covers";
  }
  return "?";
}

namespace {

void validate(const SampleConfig& cfg) {
  if (!(cfg.epsilon > 0.0 && cfg.epsilon < 1.0))
    throw std::invalid_argument("epsilon must be in (0,1)");
  if (!(cfg.delta > 0.0 && cfg.delta < 1.0))
    throw std::invalid_argument("delta must be in (0,1)");
  if (cfg.rho && !(*cfg.rho >= 1.0)) throw std::invalid_argument("rho must be >= 1");
}

}  // namespace

SamplePlan sample_plan(const SampleConfig& cfg) {
  validate(cfg);
  SamplePlan plan;
  if (cfg.sample_override) {
    plan.total = plan.group_size = *cfg.sample_override;
    return plan;
  }
  if (!cfg.rho) throw std::invalid_argument("sample plan needs rho");
  const double rho = *cfg.rho;
  if (cfg.mode == SampleMode::FixedCount) {
    plan.total = plan.group_size =
        static_cast<std::uint64_t>(std::ceil(rho / (cfg.epsilon * cfg.epsilon * cfg.delta)));
  } else {
    plan.groups = static_cast<std::uint64_t>(std::ceil(8.0 * std::log(1.0 / cfg.delta)));
    plan.group_size =
        static_cast<std::uint64_t>(std::ceil(8.0 * rho / (cfg.epsilon * cfg.epsilon)));
    plan.total = plan.groups * plan.group_size;
  }
  return plan;
}

std::uint64_t required_samples(const SampleConfig& cfg) {
  return sample_plan(cfg).total;
}

double resolve_rho(const SampleConfig& cfg, Target target, unsigned k, std::size_t n) {
  if (cfg.rho) return *cfg.rho;
  if (!cfg.model_p)
    throw std::invalid_argument(
        "rho is unset and no model edge probability is available to derive it");
  BigRat p = *cfg.model_p;
  if (target == Target::IndependentSets) p = BigRat(1) - p;
  // 4x safety factor over the analytic critical ratio of averages, absorbing
  // the per-graph vs. averaged gap.
  const BigRat crr = target == Target::Covers
                         ? crr_cover_total(k, n, p)
                         : rgc::crr_clique(k, n, p);
  const double rho = 4.0 * crr.convert_to<double>();
  return rho < 1.0 ? 1.0 : rho;
}

namespace {

struct Aggregate {
  std::vector<double> logs;       // natural logs of nonzero samples, in index order
  std::vector<BigRat> exacts;     // exact values when running in Exact mode
  std::uint64_t zeros = 0;
  std::uint64_t total = 0;
  bool exact = false;
};

double lse(const std::vector<double>& logs, double scale) {
  // logsumexp of scale*logs, max-shifted
  if (logs.empty()) return -std::numeric_limits<double>::infinity();
  double mx = -std::numeric_limits<double>::infinity();
  for (double l : logs) mx = std::max(mx, scale * l);
  double acc = 0.0;
  for (double l : logs) acc += std::exp(scale * l - mx);
  return mx + std::log(acc);
}

// Mean of samples [lo, hi) in one group (zeros included in the denominator).
ScaledValue block_mean(const Aggregate& agg, std::uint64_t lo, std::uint64_t hi,
                       const std::vector<std::uint64_t>& nonzero_prefix) {
  const std::uint64_t count = hi - lo;
  if (agg.exact) {
    BigRat sum = 0;
    for (std::uint64_t i = lo; i < hi; ++i) sum += agg.exacts[i];
    if (sum == 0) return ScaledValue::zero();
    return ScaledValue::from_rational(sum / BigRat(BigInt(count)));
  }
  // Slice of the nonzero logs corresponding to [lo, hi).
  const std::uint64_t a = nonzero_prefix[lo], b = nonzero_prefix[hi];
  if (a == b) return ScaledValue::zero();
  std::vector<double> slice(agg.logs.begin() + static_cast<std::ptrdiff_t>(a),
                            agg.logs.begin() + static_cast<std::ptrdiff_t>(b));
  return ScaledValue::from_log(lse(slice, 1.0) - std::log(static_cast<double>(count)));
}

}  // namespace

EstimateReport estimate(const Graph& g, unsigned k, Target target, const SampleConfig& cfg,
                        std::uint64_t seed) {
  validate(cfg);
  const std::size_t n = g.vertex_count();
  if (target == Target::Covers && (k == 0 || n % k != 0))
    throw std::invalid_argument("covers require k | n");

  Graph complement_graph;
  const Graph* base = &g;
  if (target == Target::IndependentSets) {
    complement_graph = g.complement();
    base = &complement_graph;
  }

  SampleConfig resolved = cfg;
  if (!cfg.sample_override) resolved.rho = resolve_rho(cfg, target, k, n);
  const SamplePlan plan = sample_plan(resolved);

  Aggregate agg;
  agg.exact = cfg.values == ValueMode::Exact;
  agg.total = plan.total;
  agg.logs.reserve(agg.exact ? 0 : plan.total);
  if (agg.exact) agg.exacts.reserve(plan.total);
  std::vector<std::uint64_t> nonzero_prefix(plan.total + 1, 0);

  for (std::uint64_t i = 0; i < plan.total; ++i) {
    Rng rng = Rng::substream(seed, i);
    const EmbedTrace trace = target == Target::Covers
                                 ? embed_cover_once(*base, k, rng, cfg.values)
                                 : embed_clique_once(*base, k, rng, cfg.values);
    const ScaledValue& v = trace.estimate;
    if (v.is_zero()) ++agg.zeros;
    if (agg.exact) {
      agg.exacts.push_back(v.is_zero() ? BigRat(0) : v.exact_value());
    } else if (!v.is_zero()) {
      agg.logs.push_back(v.log_value());
    }
    nonzero_prefix[i + 1] = nonzero_prefix[i] + (v.is_zero() ? 0 : 1);
  }

  EstimateReport report;
  report.samples = plan.total;
  report.zero_outputs = agg.zeros;
  report.rho_used = resolved.rho.value_or(0.0);
  report.plan = plan;

  // Overall mean and second moment (all samples, zeros included).
  ScaledValue mean, m2;
  report.empirical_crr = std::numeric_limits<double>::quiet_NaN();
  if (agg.exact) {
    BigRat sum = 0, sumsq = 0;
    for (const auto& v : agg.exacts) {
      sum += v;
      sumsq += v * v;
    }
    mean = sum == 0 ? ScaledValue::zero()
                    : ScaledValue::from_rational(sum / BigRat(BigInt(plan.total)));
    m2 = sumsq == 0 ? ScaledValue::zero()
                    : ScaledValue::from_rational(sumsq / BigRat(BigInt(plan.total)));
    if (sum != 0)
      report.empirical_crr =
          (sumsq * BigRat(BigInt(plan.total)) / (sum * sum)).convert_to<double>();
  } else {
    const double log_n = std::log(static_cast<double>(plan.total));
    mean = agg.logs.empty() ? ScaledValue::zero()
                            : ScaledValue::from_log(lse(agg.logs, 1.0) - log_n);
    m2 = agg.logs.empty() ? ScaledValue::zero()
                          : ScaledValue::from_log(lse(agg.logs, 2.0) - log_n);
    if (!mean.is_zero())
      // >= 1 by Cauchy-Schwarz; guard the log round-trip
      report.empirical_crr = std::max(1.0, std::exp(m2.log_value() - 2.0 * mean.log_value()));
  }
  report.second_moment = m2;

  if (cfg.mode == SampleMode::MedianOfMeans && !cfg.sample_override) {
    std::vector<ScaledValue> means;
    means.reserve(plan.groups);
    for (std::uint64_t gi = 0; gi < plan.groups; ++gi)
      means.push_back(
          block_mean(agg, gi * plan.group_size, (gi + 1) * plan.group_size, nonzero_prefix));
    std::sort(means.begin(), means.end());
    if (plan.groups % 2 == 1) {
      report.point = means[plan.groups / 2];
    } else {
      const ScaledValue two[] = {means[plan.groups / 2 - 1], means[plan.groups / 2]};
      report.point = ScaledValue::sum(two).divided_by(2);
    }
  } else {
    report.point = mean;
  }

  // Chebyshev interval around the sample mean at level 1-delta.
  if (!mean.is_zero()) {
    const double excess = std::max(0.0, report.empirical_crr - 1.0);
    const double w =
        std::sqrt(excess / (static_cast<double>(plan.total) * cfg.delta));
    report.ci_high = ScaledValue::from_log(mean.log_value() + std::log1p(w));
    report.ci_low = w < 1.0 ? ScaledValue::from_log(mean.log_value() + std::log1p(-w))
                            : ScaledValue::zero();
  }
  return report;
}

}  // namespace rgc
