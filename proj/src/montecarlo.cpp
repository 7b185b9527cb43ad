#include "heavytail/montecarlo.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <ostream>

#include "heavytail/graph_models.hpp"
#include "heavytail/sampling.hpp"

namespace heavytail {

namespace {

constexpr std::array<std::pair<Model, std::string_view>, 7> kModelNames{{
    {Model::linear, "linear"},
    {Model::mixture, "mixture"},
    {Model::cm_raw, "cm-raw"},
    {Model::cm_erased, "cm-erased"},
    {Model::cm_intermediate, "cm-intermediate"},
    {Model::pam, "pam"},
    {Model::bipartite, "bipartite"},
}};

}  // namespace

std::string_view to_string(Model model) {
  for (const auto& [m, name] : kModelNames)
    if (m == model) return name;
  return "unknown";
}

std::string_view to_string(Estimator estimator) {
  return estimator == Estimator::pearson ? "pearson" : "spearman";
}

std::optional<Model> parse_model(std::string_view name) {
  for (const auto& [m, n] : kModelNames)
    if (n == name) return m;
  return std::nullopt;
}

std::optional<Estimator> parse_estimator(std::string_view name) {
  if (name == "pearson") return Estimator::pearson;
  if (name == "spearman") return Estimator::spearman;
  return std::nullopt;
}

double ModelConfig::tail_exponent() const {
  if (gamma) return *gamma;
  switch (model) {
    case Model::linear:
    case Model::mixture:
      return 1.1;
    case Model::cm_raw:
    case Model::cm_erased:
    case Model::cm_intermediate:
      return 2.0;
    case Model::bipartite:
      return 2.8;
    case Model::pam:
      break;
  }
  return 0.0;  // unused by preferential attachment
}

void ModelConfig::validate() const {
  if (n < 2) throw std::invalid_argument("--n: must be at least 2");
  if (reps < 1) throw std::invalid_argument("--reps: must be at least 1");
  if (gamma && !(*gamma > 0.0 && std::isfinite(*gamma)))
    throw std::invalid_argument("--gamma: must be positive");
  if (!(degree_scale >= 1.0)) throw std::invalid_argument("--degree-scale: must be at least 1");
  if (model == Model::linear) {
    if (alpha.size() != beta.size())
      throw std::invalid_argument("--alpha/--beta: must have the same length");
    if (alpha.size() < 1) throw std::invalid_argument("--alpha: must not be empty");
  }
  if (model == Model::bipartite) {
    if (!(bipartite_b > 0.0)) throw std::invalid_argument("--b: must be positive");
    if (!(bipartite_a >= 1.0)) throw std::invalid_argument("--a: must be at least 1");
  }
}

ModelInstance generate_instance(const ModelConfig& config, Rng& rng) {
  const auto n = config.n;
  const double gamma = config.tail_exponent();
  switch (config.model) {
    case Model::linear:
      return sample_linear_pairs(LinearModel(config.alpha, config.beta, ParetoLaw(gamma)),
                                 static_cast<Eigen::Index>(n), rng);
    case Model::mixture:
      return sample_mixture_pairs(ParetoLaw(gamma), static_cast<Eigen::Index>(n), rng);
    case Model::cm_raw:
      return configuration_model(sample_degree_sequence(gamma, n, rng, config.degree_scale), rng);
    case Model::cm_erased:
      return erase_parallel_and_loops(
          configuration_model(sample_degree_sequence(gamma, n, rng, config.degree_scale), rng));
    case Model::cm_intermediate:
      return insert_intermediate_vertices(
          configuration_model(sample_degree_sequence(gamma, n, rng, config.degree_scale), rng));
    case Model::pam:
      return preferential_attachment(n, rng);
    case Model::bipartite: {
      const GeneralizedParetoLaw law(gamma - 1.0, gamma, gamma);
      return bipartite_collection(
          sample_bipartite_pairs(config.bipartite_b, config.bipartite_a, law, n, rng));
    }
  }
  throw std::logic_error("generate_instance: unknown model");
}

Correlation evaluate(const ModelInstance& instance, Estimator estimator, Rng& rng) {
  if (const auto* sample = std::get_if<PairedSample>(&instance))
    return estimator == Estimator::pearson ? pearson(*sample) : spearman(*sample, rng);
  const auto& graph = std::get<Graph>(instance);
  // Erasure can leave a graph too small for an estimator; count it as undefined.
  if (graph.edge_count() < (estimator == Estimator::pearson ? 1U : 2U)) return std::nullopt;
  return estimator == Estimator::pearson ? graph_assortativity(graph)
                                         : graph_spearman(graph, rng);
}

EstimateSummary summarize(std::span<const Correlation> values) {
  EstimateSummary s;
  for (const auto& v : values) {
    if (v)
      s.values.push_back(*v);
    else
      ++s.n_undefined;
  }
  if (s.values.empty())
    throw DegenerateRunError("all " + std::to_string(values.size()) +
                             " replications were undefined (zero-variance degrees)");
  const auto count = static_cast<double>(s.values.size());
  double sum = 0;
  for (const double v : s.values) sum += v;
  s.mean = sum / count;
  if (s.values.size() > 1) {
    double ss = 0;
    for (const double v : s.values) ss += (v - s.mean) * (v - s.mean);
    s.std = std::sqrt(ss / (count - 1.0));
  }
  return s;
}

std::vector<EstimateSummary> replicate(std::size_t reps, std::uint64_t master,
                                       std::size_t estimators, const ReplicationFn& fn,
                                       unsigned jobs) {
  std::vector<std::vector<Correlation>> table(estimators, std::vector<Correlation>(reps));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (std::size_t j = next++; j < reps; j = next++) {
      try {
        Rng rng(Seed{master, j});
        auto row = fn(j, rng);
        if (row.size() != estimators)
          throw std::logic_error("replicate: wrong number of estimator values");
        for (std::size_t e = 0; e < estimators; ++e) table[e][j] = row[e];
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = reps;
      }
    }
  };

  const unsigned threads = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(reps)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<EstimateSummary> out;
  out.reserve(estimators);
  for (const auto& column : table) out.push_back(summarize(column));
  return out;
}

std::vector<EstimateSummary> run_replications(const ModelConfig& config,
                                              std::span<const Estimator> estimators,
                                              unsigned jobs) {
  config.validate();
  if (estimators.empty()) throw std::invalid_argument("run_replications: no estimators");
  std::vector<Estimator> order(estimators.begin(), estimators.end());
  return replicate(
      config.reps, config.seed, order.size(),
      [&config, &order](std::size_t, Rng& rng) {
        const auto instance = generate_instance(config, rng);
        std::vector<Correlation> row;
        row.reserve(order.size());
        for (const auto e : order) row.push_back(evaluate(instance, e, rng));
        return row;
      },
      jobs);
}

EstimateSummary run_replications(const ModelConfig& config, Estimator estimator,
                                 unsigned jobs) {
  const std::array<Estimator, 1> one{estimator};
  return std::move(run_replications(config, one, jobs).front());
}

std::vector<CdfPoint> empirical_cdf(std::span<const double> values,
                                    std::span<const double> grid) {
  if (values.empty()) throw std::invalid_argument("empirical_cdf: no values");
  if (!std::is_sorted(grid.begin(), grid.end()))
    throw std::invalid_argument("empirical_cdf: grid must be ascending");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const auto count = static_cast<double>(sorted.size());
  std::vector<CdfPoint> out;
  out.reserve(grid.size());
  for (const double x : grid) {
    const auto le = std::upper_bound(sorted.begin(), sorted.end(), x) - sorted.begin();
    out.push_back({x, static_cast<double>(le) / count});
  }
  return out;
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t points) {
  if (points < 2) throw std::invalid_argument("uniform_grid: need at least two points");
  if (!(hi > lo)) throw std::invalid_argument("uniform_grid: need lo < hi");
  std::vector<double> grid(points);
  const double step = (hi - lo) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) grid[i] = lo + step * static_cast<double>(i);
  grid.back() = hi;
  return grid;
}

double ks_distance(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("ks_distance: empty sample");
  std::vector<double> sa(a.begin(), a.end());
  std::vector<double> sb(b.begin(), b.end());
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  const auto na = static_cast<double>(sa.size());
  const auto nb = static_cast<double>(sb.size());
  std::size_t i = 0, j = 0;
  double d = 0;
  while (i < sa.size() && j < sb.size()) {
    const double x = std::min(sa[i], sb[j]);
    while (i < sa.size() && sa[i] == x) ++i;
    while (j < sb.size() && sb[j] == x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  return d;
}

std::string format_real(double value) {
  if (value == 0.0) value = 0.0;  // drop the sign of negative zero
  std::array<char, 32> buf{};
  std::snprintf(buf.data(), buf.size(), "%.6g", value);
  return buf.data();
}

void write_results_header(std::ostream& out) {
  out << "model,estimator,n,N,seed,mean,std,n_undefined\n";
}

void write_results_row(std::ostream& out, const ModelConfig& config, Estimator estimator,
                       const EstimateSummary& summary) {
  out << to_string(config.model) << ',' << to_string(estimator) << ',' << config.n << ','
      << config.reps << ',' << config.seed << ',' << format_real(summary.mean) << ','
      << format_real(summary.std) << ',' << summary.n_undefined << '\n';
}

void write_cdf_csv(std::ostream& out, std::span<const CdfPoint> cdf) {
  out << "x,F\n";
  for (const auto& p : cdf) out << format_real(p.x) << ',' << format_real(p.F) << '\n';
}

}  // namespace heavytail
