#ifndef RGCOUNT_EXPERIMENT_HPP
#define RGCOUNT_EXPERIMENT_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rgcount/bignum.hpp"
#include "rgcount/estimate.hpp"

namespace rgc {

// One output record. The schema is fixed: every writer emits the same
// columns (empty when not applicable), and every row carries the seed that
// reproduces it.
struct ResultRow {
  std::string experiment;
  std::string target;
  std::optional<std::uint64_t> n, k, l;
  std::string p;  // exact rational, e.g. "1/2"
  std::optional<std::uint64_t> seed;
  std::optional<double> epsilon, delta;
  std::string mode;
  std::optional<std::uint64_t> samples, zero_outputs;
  std::optional<double> estimate_log10;
  std::string estimate_exact;
  std::string oracle_exact;
  std::optional<double> rel_error;
  std::optional<double> ci_low_log10, ci_high_log10;
  std::optional<double> empirical_crr;
  std::string analytic_crr;
  std::string bound;
  std::string status = "ok";
  double seconds = 0.0;
};

bool row_failed(const ResultRow& row);  // status starts with "error"

std::string csv_header();
std::string csv_row(const ResultRow& row);
std::string json_report(const std::vector<ResultRow>& rows);  // array of objects

// format is "csv" or "json". Returns count of failed rows and prints them
// to err; the report itself goes to out.
std::size_t write_report(const std::vector<ResultRow>& rows, const std::string& format,
                         std::ostream& out, std::ostream& err);

// Flat "key = value" config, one pair per line, '#' starts a comment.
// Axis keys (n, k, p) accept comma-separated lists.
//
// keys: preset, target, n, k, p, l_min, l_max, l_step, seed, epsilon, delta,
//       mode (fixed|median), samples, exact (0|1), jobs, format, out
struct ExperimentSpec {
  std::string preset;  // moment-sweep | unbiasedness | crr-growth | cover-step
  Target target = Target::Cliques;
  std::vector<std::uint64_t> ns, ks;
  std::vector<BigRat> ps;
  std::uint64_t l_min = 50, l_max = 500, l_step = 1;
  std::uint64_t seed = 1;
  double epsilon = 0.1, delta = 0.1;
  SampleMode mode = SampleMode::FixedCount;
  std::optional<std::uint64_t> samples;
  bool exact_values = false;
  unsigned jobs = 1;
  std::string format = "csv";
  std::string out;  // empty -> stdout
};

ExperimentSpec parse_experiment_config(std::istream& in, const std::string& name = "<config>");

// Runs the preset grid; cells execute concurrently up to spec.jobs, rows come
// back in grid order. A cell that throws is recorded as an error row and the
// run continues.
std::vector<ResultRow> run_experiment(const ExperimentSpec& spec);

// Derives the estimator-driver seed from a row seed, keeping it decoupled
// from the graph-generation stream of the same seed.
std::uint64_t driver_seed(std::uint64_t row_seed);

// Oracle gate used by the estimate command and the unbiasedness preset.
bool oracle_feasible(Target target, std::size_t n, unsigned k, double node_budget);

}  // namespace rgc

#endif
