#include "rgcount/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "rgcount/analytic.hpp"
#include "rgcount/oracles.hpp"
#include "rgcount/rng.hpp"

namespace rgc {

namespace {

std::string fmt_double(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);  // locale-free
  return std::string(buf, res.ptr);
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

template <class T>
std::string opt_str(const std::optional<T>& v) {
  if (!v) return "";
  if constexpr (std::is_floating_point_v<T>)
    return fmt_double(*v);
  else
    return std::to_string(*v);
}

}  // namespace

bool row_failed(const ResultRow& row) { return row.status.rfind("error", 0) == 0; }

std::string csv_header() {
  return "experiment,target,n,k,l,p,seed,epsilon,delta,mode,samples,zero_outputs,"
         "estimate_log10,estimate_exact,oracle_exact,rel_error,ci_low_log10,ci_high_log10,"
         "empirical_crr,analytic_crr,bound,status,seconds";
}

std::string csv_row(const ResultRow& r) {
  std::string out;
  const auto add = [&](const std::string& field) {
    if (!out.empty()) out += ',';
    out += csv_quote(field);
  };
  add(r.experiment);
  add(r.target);
  add(opt_str(r.n));
  add(opt_str(r.k));
  add(opt_str(r.l));
  add(r.p);
  add(opt_str(r.seed));
  add(opt_str(r.epsilon));
  add(opt_str(r.delta));
  add(r.mode);
  add(opt_str(r.samples));
  add(opt_str(r.zero_outputs));
  add(opt_str(r.estimate_log10));
  add(r.estimate_exact);
  add(r.oracle_exact);
  add(opt_str(r.rel_error));
  add(opt_str(r.ci_low_log10));
  add(opt_str(r.ci_high_log10));
  add(opt_str(r.empirical_crr));
  add(r.analytic_crr);
  add(r.bound);
  add(r.status);
  add(fmt_double(r.seconds));
  return out;
}

namespace {

nlohmann::json row_json(const ResultRow& r) {
  nlohmann::json j;
  const auto put_opt = [&](const char* key, const auto& opt) {
    if (opt)
      j[key] = *opt;
    else
      j[key] = nullptr;
  };
  const auto put_str = [&](const char* key, const std::string& s) {
    if (s.empty())
      j[key] = nullptr;
    else
      j[key] = s;
  };
  j["experiment"] = r.experiment;
  j["target"] = r.target;
  put_opt("n", r.n);
  put_opt("k", r.k);
  put_opt("l", r.l);
  put_str("p", r.p);
  put_opt("seed", r.seed);
  put_opt("epsilon", r.epsilon);
  put_opt("delta", r.delta);
  put_str("mode", r.mode);
  put_opt("samples", r.samples);
  put_opt("zero_outputs", r.zero_outputs);
  put_opt("estimate_log10", r.estimate_log10);
  put_str("estimate_exact", r.estimate_exact);
  put_str("oracle_exact", r.oracle_exact);
  put_opt("rel_error", r.rel_error);
  put_opt("ci_low_log10", r.ci_low_log10);
  put_opt("ci_high_log10", r.ci_high_log10);
  put_opt("empirical_crr", r.empirical_crr);
  put_str("analytic_crr", r.analytic_crr);
  put_str("bound", r.bound);
  j["status"] = r.status;
  j["seconds"] = r.seconds;
  return j;
}

}  // namespace

std::string json_report(const std::vector<ResultRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) arr.push_back(row_json(r));
  return arr.dump(2);
}

std::size_t write_report(const std::vector<ResultRow>& rows, const std::string& format,
                         std::ostream& out, std::ostream& err) {
  if (format == "json") {
    out << json_report(rows) << '\n';
  } else if (format == "csv") {
    out << csv_header() << '\n';
    for (const auto& r : rows) out << csv_row(r) << '\n';
  } else {
    throw std::invalid_argument("unknown format '" + format + "' (expected csv or json)");
  }
  std::size_t failed = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (row_failed(rows[i])) {
      ++failed;
      err << "row " << i << " failed: " << rows[i].status << '\n';
    }
  }
  return failed;
}

namespace {

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  for (auto& t : out) {
    t.erase(0, t.find_first_not_of(" \t"));
    const auto last = t.find_last_not_of(" \t");
    t.erase(last == std::string::npos ? 0 : last + 1);
  }
  return out;
}

std::uint64_t parse_u64_or_throw(const std::string& s, const std::string& where) {
  std::uint64_t v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw std::invalid_argument(where + ": expected integer, got '" + s + "'");
  return v;
}

double parse_double_or_throw(const std::string& s, const std::string& where) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("");
    return v;
  } catch (...) {
    throw std::invalid_argument(where + ": expected number, got '" + s + "'");
  }
}

}  // namespace

ExperimentSpec parse_experiment_config(std::istream& in, const std::string& name) {
  ExperimentSpec spec;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto eq = line.find('=');
    const std::string where = name + ":" + std::to_string(lineno);
    if (eq == std::string::npos)
      throw std::invalid_argument(where + ": expected 'key = value', got '" + line + "'");
    auto trim = [](std::string s) {
      s.erase(0, s.find_first_not_of(" \t\r"));
      const auto last = s.find_last_not_of(" \t\r");
      s.erase(last == std::string::npos ? 0 : last + 1);
      return s;
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (value.empty()) throw std::invalid_argument(where + ": empty value for '" + key + "'");

    if (key == "preset") {
      spec.preset = value;
    } else if (key == "target") {
      spec.target = parse_target(value);
    } else if (key == "n") {
      spec.ns.clear();
      for (const auto& t : split_list(value)) spec.ns.push_back(parse_u64_or_throw(t, where));
    } else if (key == "k") {
      spec.ks.clear();
      for (const auto& t : split_list(value)) spec.ks.push_back(parse_u64_or_throw(t, where));
    } else if (key == "p") {
      spec.ps.clear();
      for (const auto& t : split_list(value)) spec.ps.push_back(parse_rational(t));
    } else if (key == "l_min") {
      spec.l_min = parse_u64_or_throw(value, where);
    } else if (key == "l_max") {
      spec.l_max = parse_u64_or_throw(value, where);
    } else if (key == "l_step") {
      spec.l_step = parse_u64_or_throw(value, where);
    } else if (key == "seed") {
      spec.seed = parse_u64_or_throw(value, where);
    } else if (key == "epsilon") {
      spec.epsilon = parse_double_or_throw(value, where);
    } else if (key == "delta") {
      spec.delta = parse_double_or_throw(value, where);
    } else if (key == "mode") {
      if (value == "fixed")
        spec.mode = SampleMode::FixedCount;
      else if (value == "median")
        spec.mode = SampleMode::MedianOfMeans;
      else
        throw std::invalid_argument(where + ": mode must be fixed or median");
    } else if (key == "samples") {
      spec.samples = parse_u64_or_throw(value, where);
    } else if (key == "exact") {
      spec.exact_values = parse_u64_or_throw(value, where) != 0;
    } else if (key == "jobs") {
      spec.jobs = static_cast<unsigned>(parse_u64_or_throw(value, where));
    } else if (key == "format") {
      if (value != "csv" && value != "json")
        throw std::invalid_argument(where + ": format must be csv or json");
      spec.format = value;
    } else if (key == "out") {
      spec.out = value;
    } else {
      throw std::invalid_argument(where + ": unknown key '" + key + "'");
    }
  }
  return spec;
}

std::uint64_t driver_seed(std::uint64_t row_seed) {
  return mix64(row_seed ^ 0x9ccadf3c04a7ae3full);
}

bool oracle_feasible(Target target, std::size_t n, unsigned k, double node_budget) {
  if (target == Target::Covers) return n <= 16;
  return predicted_clique_work(n, k) <= node_budget;
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_s(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

BigInt oracle_count(const Graph& g, Target target, unsigned k) {
  switch (target) {
    case Target::Cliques: return count_cliques_exact(g, k);
    case Target::IndependentSets: return count_independent_sets_exact(g, k);
    case Target::Covers: return count_clique_covers_exact(g, k);
  }
  return 0;
}

void fill_estimate_fields(ResultRow& row, const EstimateReport& rep) {
  row.samples = rep.samples;
  row.zero_outputs = rep.zero_outputs;
  if (!rep.point.is_zero()) {
    row.estimate_log10 = rep.point.log10_value();
    if (rep.point.has_exact()) row.estimate_exact = rat_str(rep.point.exact_value());
  } else {
    row.estimate_log10 = -std::numeric_limits<double>::infinity();
    row.estimate_exact = "0";
  }
  if (!rep.ci_low.is_zero()) row.ci_low_log10 = rep.ci_low.log10_value();
  if (!rep.ci_high.is_zero()) row.ci_high_log10 = rep.ci_high.log10_value();
  row.empirical_crr = rep.empirical_crr;
}

// ---- presets ----------------------------------------------------------

struct Cell {
  std::function<ResultRow()> run;
};

std::vector<Cell> moment_sweep_cells(const ExperimentSpec& spec) {
  ExperimentSpec s = spec;
  if (s.ns.empty())
    for (std::uint64_t n = 0; n <= 30; ++n) s.ns.push_back(n);
  if (s.ks.empty())
    for (std::uint64_t k = 1; k <= 8; ++k) s.ks.push_back(k);
  if (s.ps.empty()) s.ps = {BigRat(1, 3), BigRat(1, 2), BigRat(9, 10)};
  std::vector<Cell> cells;
  for (auto n : s.ns)
    for (auto k : s.ks)
      for (const auto& p : s.ps)
        cells.push_back({[n, k, p]() {
          ResultRow row;
          row.experiment = "moment-sweep";
          row.target = "moment";
          row.n = n;
          row.k = k;
          row.p = rat_str(p);
          const BigRat closed = binomial_moment_closed(n, static_cast<unsigned>(k), p);
          const BigRat brute = binomial_moment_bruteforce(n, static_cast<unsigned>(k), p);
          row.estimate_exact = rat_str(closed);
          row.oracle_exact = rat_str(brute);
          row.rel_error = closed == brute ? 0.0
                                          : std::abs((closed - brute).convert_to<double>() /
                                                     brute.convert_to<double>());
          row.status = closed == brute ? "ok" : "mismatch";
          return row;
        }});
  return cells;
}

std::vector<Cell> unbiasedness_cells(const ExperimentSpec& spec) {
  ExperimentSpec s = spec;
  if (s.ns.empty()) s.ns = {10};
  if (s.ks.empty()) s.ks = {3};
  if (s.ps.empty()) s.ps = {BigRat(1, 2)};
  std::vector<Cell> cells;
  std::uint64_t cell_idx = 0;
  for (auto n : s.ns)
    for (auto k : s.ks)
      for (const auto& p : s.ps) {
        const std::uint64_t row_seed = s.seed + cell_idx++;
        cells.push_back({[n, k, p, row_seed, s]() {
          ResultRow row;
          row.experiment = "unbiasedness";
          row.target = target_name(s.target);
          row.n = n;
          row.k = k;
          row.p = rat_str(p);
          row.seed = row_seed;
          row.epsilon = s.epsilon;
          row.delta = s.delta;
          row.mode = s.mode == SampleMode::FixedCount ? "fixed" : "median";
          const Graph g = generate_gnp({static_cast<std::size_t>(n), p, row_seed});
          SampleConfig cfg;
          cfg.epsilon = s.epsilon;
          cfg.delta = s.delta;
          cfg.model_p = p;
          cfg.mode = s.mode;
          cfg.values = s.exact_values ? ValueMode::Exact : ValueMode::Log;
          cfg.sample_override = s.samples ? s.samples : std::optional<std::uint64_t>(10000);
          const EstimateReport rep =
              estimate(g, static_cast<unsigned>(k), s.target, cfg, driver_seed(row_seed));
          fill_estimate_fields(row, rep);
          row.analytic_crr = rat_str(s.target == Target::Covers
                                         ? crr_cover_total(static_cast<unsigned>(k), n, p)
                                         : crr_clique(static_cast<unsigned>(k), n,
                                                      s.target == Target::IndependentSets
                                                          ? BigRat(1) - p
                                                          : p));
          if (oracle_feasible(s.target, n, static_cast<unsigned>(k), 1e8)) {
            const BigInt oracle = oracle_count(g, s.target, static_cast<unsigned>(k));
            row.oracle_exact = oracle.str();
            // |mean - oracle| <= 3 stderr, stderr = mean sqrt((crr-1)/S)
            const double mean = rep.point.is_zero() ? 0.0 : rep.point.to_double();
            const double ora = oracle.convert_to<double>();
            row.rel_error = ora > 0 ? std::abs(mean / ora - 1.0)
                                    : (mean == 0.0 ? 0.0 : std::numeric_limits<double>::infinity());
            const double crr = rep.empirical_crr;
            const double se = std::isnan(crr) ? 0.0
                                              : mean * std::sqrt(std::max(0.0, crr - 1.0) /
                                                                 static_cast<double>(rep.samples));
            row.status = std::abs(mean - ora) <= 3.0 * se ? "ok" : "outside-3se";
          }
          return row;
        }});
      }
  return cells;
}

std::vector<Cell> crr_growth_cells(const ExperimentSpec& spec) {
  ExperimentSpec s = spec;
  if (s.ns.empty())
    for (std::uint64_t n = 10; n <= 30; n += 2) s.ns.push_back(n);
  if (s.ks.empty()) s.ks = {3};
  if (s.ps.empty()) s.ps = {BigRat(1, 2)};
  std::vector<Cell> cells;
  std::uint64_t cell_idx = 0;
  for (auto n : s.ns)
    for (auto k : s.ks)
      for (const auto& p : s.ps) {
        const std::uint64_t row_seed = s.seed + cell_idx++;
        cells.push_back({[n, k, p, row_seed, s]() {
          ResultRow row;
          row.experiment = "crr-growth";
          row.target = "second-moment";
          row.n = n;
          row.k = k;
          row.p = rat_str(p);
          row.seed = row_seed;
          const std::uint64_t pairs = s.samples.value_or(20000);
          row.samples = pairs;
          double m1 = 0, m2 = 0, m4 = 0;
          std::uint64_t zeros = 0;
          for (std::uint64_t i = 0; i < pairs; ++i) {
            Rng rng = Rng::substream(driver_seed(row_seed), i);
            const Graph g = gnp_from_rng(static_cast<std::size_t>(n), p, rng);
            const EmbedTrace t = embed_clique_once(g, static_cast<unsigned>(k), rng);
            double raw = 0.0;
            if (t.success) {
              raw = 1.0;
              for (auto f : t.factors) raw *= static_cast<double>(f);
            } else {
              ++zeros;
            }
            m1 += raw;
            m2 += raw * raw;
            m4 += raw * raw * raw * raw;
          }
          row.zero_outputs = zeros;
          const double sp = static_cast<double>(pairs);
          m1 /= sp;
          m2 /= sp;
          m4 /= sp;
          const BigRat nest = nesting_closed(static_cast<unsigned>(k), n, p);
          row.oracle_exact = rat_str(nest);
          row.estimate_log10 = m2 > 0 ? std::log10(m2) : -std::numeric_limits<double>::infinity();
          row.empirical_crr = m1 > 0 ? m2 / (m1 * m1) : std::numeric_limits<double>::quiet_NaN();
          row.analytic_crr = rat_str(crr_clique(static_cast<unsigned>(k), n, p));
          const double nd = nest.convert_to<double>();
          row.rel_error = nd > 0 ? std::abs(m2 / nd - 1.0) : 0.0;
          const double se = std::sqrt(std::max(0.0, m4 - m2 * m2) / sp);
          row.status = std::abs(m2 - nd) <= 5.0 * se ? "ok" : "outside-5se";
          return row;
        }});
      }
  return cells;
}

std::vector<Cell> cover_step_cells(const ExperimentSpec& spec) {
  ExperimentSpec s = spec;
  if (s.ks.empty()) s.ks = {2, 3, 4};
  if (s.ps.empty()) s.ps = {BigRat(1, 2), BigRat(3, 4)};
  std::vector<Cell> cells;
  for (auto k : s.ks)
    for (const auto& p : s.ps) {
      const BigRat fitted = fit_cover_step_constant(static_cast<unsigned>(k), p, s.l_min);
      for (std::uint64_t l = s.l_min; l <= s.l_max; l += s.l_step)
        cells.push_back({[k, p, l, fitted]() {
          ResultRow row;
          row.experiment = "cover-step";
          row.target = "crr-cover-step";
          row.k = k;
          row.l = l;
          row.p = rat_str(p);
          const BigRat step = crr_cover_step(static_cast<unsigned>(k), l, p);
          const BigRat bound =
              1 + fitted / BigRat(BigInt(static_cast<std::int64_t>(l) -
                                         static_cast<std::int64_t>(k) + 1));
          row.analytic_crr = rat_str(step);
          row.bound = rat_str(bound);
          row.status = step <= bound ? "ok" : "violated";
          return row;
        }});
    }
  return cells;
}

}  // namespace

std::vector<ResultRow> run_experiment(const ExperimentSpec& spec) {
  std::vector<Cell> cells;
  if (spec.preset == "moment-sweep") {
    cells = moment_sweep_cells(spec);
  } else if (spec.preset == "unbiasedness") {
    cells = unbiasedness_cells(spec);
  } else if (spec.preset == "crr-growth") {
    cells = crr_growth_cells(spec);
  } else if (spec.preset == "cover-step") {
    cells = cover_step_cells(spec);
  } else {
    throw std::invalid_argument("unknown preset '" + spec.preset +
                                "' (moment-sweep, unbiasedness, crr-growth, cover-step)");
  }

  std::vector<ResultRow> rows(cells.size());
  std::atomic<std::size_t> next{0};
  const unsigned jobs = std::max(1u, spec.jobs);
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= cells.size()) return;
      const auto t0 = Clock::now();
      try {
        rows[i] = cells[i].run();
      } catch (const std::exception& e) {
        rows[i].experiment = spec.preset;
        rows[i].status = std::string("error: ") + e.what();
      }
      rows[i].seconds = elapsed_s(t0);
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return rows;
}

}  // namespace rgc
