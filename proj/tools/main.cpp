// rgcount: graph generation, exact counting, Monte Carlo estimation and
// closed-form queries for k-cliques, k-independent sets and k-clique covers.

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "rgcount/analytic.hpp"
#include "rgcount/estimate.hpp"
#include "rgcount/experiment.hpp"
#include "rgcount/graph_io.hpp"
#include "rgcount/oracles.hpp"

namespace {

using namespace rgc;

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  return out;
}

void emit_rows(const std::vector<ResultRow>& rows, const std::string& format,
               const std::string& out_path, int& exit_code) {
  std::size_t failed = 0;
  if (out_path.empty()) {
    failed = write_report(rows, format, std::cout, std::cerr);
  } else {
    auto out = open_out(out_path);
    failed = write_report(rows, format, out, std::cerr);
  }
  if (failed > 0) exit_code = 1;
}

struct EstimateArgs {
  std::string graph_path;
  std::uint64_t n = 0;
  std::string p_text;
  std::uint64_t gen_seed = 1;
  std::string target = "cliques";
  unsigned k = 2;
  double epsilon = 0.1;
  double delta = 0.1;
  std::uint64_t seed = 1;
  std::optional<double> rho;
  std::string mode = "fixed";
  bool exact_mode = false;
  double budget = 1e8;
  std::string format = "csv";
  std::string out;
};

int run_estimate(const EstimateArgs& a) {
  const auto t0 = std::chrono::steady_clock::now();
  Graph g;
  std::optional<BigRat> p;
  if (!a.p_text.empty()) p = parse_rational(a.p_text);
  if (!a.graph_path.empty()) {
    g = load_graph(a.graph_path);
  } else {
    if (!p) throw std::invalid_argument("either --graph or --n/--p is required");
    g = generate_gnp({static_cast<std::size_t>(a.n), *p, a.gen_seed});
  }
  const Target target = parse_target(a.target);

  SampleConfig cfg;
  cfg.epsilon = a.epsilon;
  cfg.delta = a.delta;
  cfg.rho = a.rho;
  cfg.model_p = p;
  cfg.mode = a.mode == "median" ? SampleMode::MedianOfMeans : SampleMode::FixedCount;
  cfg.values = a.exact_mode ? ValueMode::Exact : ValueMode::Log;

  const EstimateReport rep = estimate(g, a.k, target, cfg, a.seed);

  ResultRow row;
  row.experiment = "estimate";
  row.target = a.target;
  row.n = g.vertex_count();
  row.k = a.k;
  if (p) row.p = rat_str(*p);
  row.seed = a.seed;
  row.epsilon = a.epsilon;
  row.delta = a.delta;
  row.mode = a.mode;
  row.samples = rep.samples;
  row.zero_outputs = rep.zero_outputs;
  if (!rep.point.is_zero()) {
    row.estimate_log10 = rep.point.log10_value();
    if (rep.point.has_exact()) row.estimate_exact = rat_str(rep.point.exact_value());
  } else {
    row.estimate_exact = "0";
  }
  if (!rep.ci_low.is_zero()) row.ci_low_log10 = rep.ci_low.log10_value();
  if (!rep.ci_high.is_zero()) row.ci_high_log10 = rep.ci_high.log10_value();
  row.empirical_crr = rep.empirical_crr;
  if (p) {
    const BigRat model = target == Target::IndependentSets ? BigRat(1) - *p : *p;
    try {
      row.analytic_crr = rat_str(target == Target::Covers
                                     ? crr_cover_total(a.k, g.vertex_count(), model)
                                     : crr_clique(a.k, g.vertex_count(), model));
    } catch (const std::exception&) {
      // degenerate model (p = 0 or k > n); leave blank
    }
  }

  if (g.vertex_count() <= 20) {
    if (oracle_feasible(target, g.vertex_count(), a.k, a.budget)) {
      BigInt oracle = 0;
      switch (target) {
        case Target::Cliques: oracle = count_cliques_exact(g, a.k); break;
        case Target::IndependentSets: oracle = count_independent_sets_exact(g, a.k); break;
        case Target::Covers: oracle = count_clique_covers_exact(g, a.k); break;
      }
      row.oracle_exact = oracle.str();
      const double ora = oracle.convert_to<double>();
      const double mean = rep.point.is_zero() ? 0.0 : rep.point.to_double();
      if (ora > 0)
        row.rel_error = std::abs(mean / ora - 1.0);
      else
        row.rel_error = mean == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    } else {
      std::cerr << "note: exact oracle skipped, predicted work exceeds --budget\n";
    }
  }
  row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  int code = 0;
  emit_rows({row}, a.format, a.out, code);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monte Carlo and exact counting of cliques, independent sets and clique covers"};
  app.require_subcommand(1);

  int exit_code = 0;

  // ---- gen ------------------------------------------------------------
  std::uint64_t gen_n = 0;
  std::string gen_p = "1/2";
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "generate a G(n,p) graph file (edge-list format)");
  gen->add_option("--n", gen_n, "vertex count")->required();
  gen->add_option("--p", gen_p, "edge probability (rational, e.g. 1/2 or 0.3)");
  gen->add_option("--seed", gen_seed, "generator seed");
  gen->add_option("--out,-o", gen_out, "output path")->required();
  gen->callback([&]() {
    const Graph g = generate_gnp({static_cast<std::size_t>(gen_n), parse_rational(gen_p), gen_seed});
    save_graph(g, gen_out);
  });

  // ---- exact ------------------------------------------------------------
  std::string exact_graph, exact_target = "cliques", exact_format;
  unsigned exact_k = 2;
  double exact_budget = 1e8;
  auto* exact = app.add_subcommand("exact", "brute-force exact count on a graph file");
  exact->add_option("--graph,-g", exact_graph, "edge-list file")->required();
  exact->add_option("--target,-t", exact_target, "cliques | independent-sets | covers");
  exact->add_option("--k", exact_k, "subgraph size")->required();
  exact->add_option("--budget", exact_budget, "work predictor warning threshold");
  exact->add_option("--format", exact_format, "csv | json (default: plain value)");
  exact->callback([&]() {
    const auto t0 = std::chrono::steady_clock::now();
    const Graph g = load_graph(exact_graph);
    const Target target = parse_target(exact_target);
    if (!oracle_feasible(target, g.vertex_count(), exact_k, exact_budget))
      std::cerr << "warning: predicted work exceeds --budget, this may take long\n";
    BigInt count = 0;
    switch (target) {
      case Target::Cliques: count = count_cliques_exact(g, exact_k); break;
      case Target::IndependentSets: count = count_independent_sets_exact(g, exact_k); break;
      case Target::Covers: count = count_clique_covers_exact(g, exact_k); break;
    }
    if (exact_format.empty()) {
      std::cout << count.str() << '\n';
      return;
    }
    ResultRow row;
    row.experiment = "exact";
    row.target = exact_target;
    row.n = g.vertex_count();
    row.k = exact_k;
    row.oracle_exact = count.str();
    row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    emit_rows({row}, exact_format, "", exit_code);
  });

  // ---- estimate -----------------------------------------------------------
  EstimateArgs ea;
  auto* est = app.add_subcommand("estimate", "Monte Carlo estimate with (epsilon, delta) driver");
  est->add_option("--graph,-g", ea.graph_path, "edge-list file (else --n/--p generate)");
  est->add_option("--n", ea.n, "vertex count for generated input");
  est->add_option("--p", ea.p_text, "edge probability (also enables the analytic rho default)");
  est->add_option("--gen-seed", ea.gen_seed, "generation seed");
  est->add_option("--target,-t", ea.target, "cliques | independent-sets | covers");
  est->add_option("--k", ea.k, "subgraph size")->required();
  est->add_option("--epsilon,-e", ea.epsilon, "relative error target");
  est->add_option("--delta,-d", ea.delta, "failure probability");
  est->add_option("--seed", ea.seed, "estimator driver seed");
  est->add_option("--rho", ea.rho, "critical-ratio bound override");
  est->add_option("--mode", ea.mode, "fixed | median");
  est->add_flag("--exact-mode", ea.exact_mode, "carry exact rationals (small n verification)");
  est->add_option("--budget", ea.budget, "oracle work threshold for the n<=20 cross-check");
  est->add_option("--format", ea.format, "csv | json");
  est->add_option("--out,-o", ea.out, "report path (default stdout)");
  est->callback([&]() { exit_code = run_estimate(ea); });

  // ---- analytic -----------------------------------------------------------
  auto* ana = app.add_subcommand("analytic", "closed-form moments, nestings, f-polynomials, crr");
  ana->require_subcommand(1);
  {
    static std::uint64_t n = 0;
    static unsigned k = 2, j = 2, i = 0;
    static std::uint64_t ell = 50;
    static std::string p_text = "1/2";
    static std::string route = "closed";
    static double eps_n = 0.0;
    static std::optional<double> i_real;
    static bool cover = false, total = false, literal = false;

    auto* moment = ana->add_subcommand("moment", "E[X^k] for X ~ Binomial(n,p)");
    moment->add_option("--n", n)->required();
    moment->add_option("--k", k)->required();
    moment->add_option("--p", p_text)->required();
    moment->add_option("--route", route, "closed | brute");
    moment->callback([&]() {
      const BigRat p = parse_rational(p_text);
      std::cout << rat_str(route == "brute" ? binomial_moment_bruteforce(n, k, p)
                                            : binomial_moment_closed(n, k, p))
                << '\n';
    });

    auto* nest = ana->add_subcommand("nesting", "k-nesting N(k,n,p)");
    nest->add_option("--k", k)->required();
    nest->add_option("--n", n)->required();
    nest->add_option("--p", p_text)->required();
    nest->add_option("--route", route, "closed | brute");
    nest->callback([&]() {
      const BigRat p = parse_rational(p_text);
      std::cout << rat_str(route == "brute" ? nesting_bruteforce(k, n, p)
                                            : nesting_closed(k, n, p))
                << '\n';
    });

    auto* fp = ana->add_subcommand("fpoly", "f_{k,j} as 'exp:coeff' pairs, descending");
    fp->add_option("--k", k)->required();
    fp->add_option("--j", j)->required();
    fp->callback([&]() {
      const PPolynomial poly = f_polynomial(k, j);
      if (poly.is_zero()) std::cerr << "note: (k,j) outside the band k <= j <= 2k-1\n";
      std::cout << poly.to_string() << '\n';
    });

    auto* st = ana->add_subcommand("stirling", "moment coefficient lambda_{k,j}");
    st->add_option("--k", k)->required();
    st->add_option("--j", j)->required();
    st->callback([&]() { std::cout << stirling_closed(k, j).str() << '\n'; });

    auto* crr = ana->add_subcommand("crr", "critical ratio of averages");
    crr->add_option("--k", k)->required();
    crr->add_option("--n", n, "graph size (clique / cover total)");
    crr->add_option("--l", ell, "residual size (cover step)");
    crr->add_option("--p", p_text)->required();
    crr->add_option("--i", i, "step index (literal cover indexing)");
    crr->add_flag("--cover", cover, "per-step cover ratio at --l");
    crr->add_flag("--total", total, "cover-total product over all steps");
    crr->add_flag("--literal-indexing", literal, "mixed-offset step ratio from --n/--i");
    crr->callback([&]() {
      const BigRat p = parse_rational(p_text);
      BigRat v;
      if (literal)
        v = AnalyticContext(k).crr_cover_step_literal(k, n, i, p);
      else if (total)
        v = crr_cover_total(k, n, p);
      else if (cover)
        v = crr_cover_step(k, ell, p);
      else
        v = crr_clique(k, n, p);
      std::cout << rat_str(v) << '\n';
    });

    auto* fc = ana->add_subcommand("fcheck", "f_{k,2k-i-1}(p) <= k^{2i} p^{C(k,2)+C(k-i,2)}");
    fc->add_option("--k", k)->required();
    fc->add_option("--i", i)->required();
    fc->add_option("--p", p_text)->required();
    fc->callback([&]() {
      std::cout << (f_upper_bound_check(k, i, parse_rational(p_text)) ? "true" : "false") << '\n';
    });

    auto* hb = ana->add_subcommand("hbound", "h(i) envelope value");
    hb->add_option("--k", k)->required();
    hb->add_option("--i", i)->required();
    hb->add_option("--l", ell)->required();
    hb->add_option("--p", p_text)->required();
    hb->callback([&]() {
      std::cout << h_bound(k, i, ell, parse_rational(p_text).convert_to<double>()) << '\n';
    });

    auto* ge = ana->add_subcommand("gexp", "exponent g(i); scans i when --i is omitted");
    ge->add_option("--n", n)->required();
    ge->add_option("--eps-n", eps_n);
    ge->add_option("--p", p_text)->required();
    ge->add_option("--i", i_real, "evaluate at one i");
    ge->callback([&]() {
      const double p = parse_rational(p_text).convert_to<double>();
      const double nd = static_cast<double>(n);
      if (i_real) {
        std::cout << g_exponent(nd, *i_real, eps_n, p) << '\n';
        return;
      }
      const double kd = (1.0 + eps_n) * std::log(nd) / std::log(1.0 / p);
      double best = 0.0;
      long best_i = 0;
      for (long ii = 0; ii < static_cast<long>(kd); ++ii) {
        const double gi = g_exponent(nd, static_cast<double>(ii), eps_n, p);
        std::cout << ii << ' ' << gi << '\n';
        if (gi > best) {
          best = gi;
          best_i = ii;
        }
      }
      std::cout << "argmax " << best_i << ' ' << best << '\n';
    });
  }

  // ---- experiment -----------------------------------------------------------
  std::string exp_spec_path, exp_out, exp_format;
  std::optional<unsigned> exp_jobs;
  auto* exp = app.add_subcommand("experiment", "run a preset parameter grid from a config file");
  exp->add_option("--spec,-s", exp_spec_path, "flat key=value config file")->required();
  exp->add_option("--jobs,-j", exp_jobs, "concurrent grid cells (overrides config)");
  exp->add_option("--out,-o", exp_out, "report path (overrides config)");
  exp->add_option("--format", exp_format, "csv | json (overrides config)");
  exp->callback([&]() {
    std::ifstream in(exp_spec_path);
    if (!in) throw std::runtime_error(exp_spec_path + ": cannot open");
    ExperimentSpec spec = parse_experiment_config(in, exp_spec_path);
    if (exp_jobs) spec.jobs = *exp_jobs;
    if (!exp_out.empty()) spec.out = exp_out;
    if (!exp_format.empty()) spec.format = exp_format;
    const auto rows = run_experiment(spec);
    emit_rows(rows, spec.format, spec.out, exit_code);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return exit_code;
}
