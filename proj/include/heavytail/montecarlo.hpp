#pragma once

#include <Eigen/Core>

#include <atomic>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <variant>
#include <vector>

#include "heavytail/estimators.hpp"
#include "heavytail/graph.hpp"
#include "heavytail/pair_models.hpp"
#include "heavytail/rng.hpp"

namespace heavytail {

enum class Model { linear, mixture, cm_raw, cm_erased, cm_intermediate, pam, bipartite };
enum class Estimator { pearson, spearman };

std::string_view to_string(Model model);
std::string_view to_string(Estimator estimator);
std::optional<Model> parse_model(std::string_view name);
std::optional<Estimator> parse_estimator(std::string_view name);

/// One experiment: a model, its parameters, and the replication plan.
///
/// `n` is the sample size for the i.i.d. models, the vertex count of the
/// underlying configuration model or preferential-attachment graph, and the
/// number of blocks for the bipartite collection. `gamma` is the tail exponent
/// of the model's base law; when unset the model default is used (1.1 for the
/// pair models, 2 for configuration-model degrees, 2.8 for the bipartite law).
///
/// Configuration-model degrees are floor(degree_scale * U). The default scale
/// of 3 (minimum degree 3, same x^{-2} tail) is the law under which the
/// subdivided configuration model shows its rank correlation of -3/4; with
/// scale 1 degree-1 vertices rank below the degree-2 middle vertices.
struct ModelConfig {
  Model model = Model::linear;
  std::optional<double> gamma;
  Eigen::VectorXd alpha = Eigen::Vector3d(0.5, 0.5, 0.0);
  Eigen::VectorXd beta = Eigen::Vector3d(0.0, 0.5, 0.5);
  double degree_scale = 3.0;
  double bipartite_b = 0.5;
  double bipartite_a = 2.0;
  std::size_t n = 1000;
  std::size_t reps = 100;
  std::uint64_t seed = 1;

  double tail_exponent() const;
  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
};

using ModelInstance = std::variant<PairedSample, Graph>;

ModelInstance generate_instance(const ModelConfig& config, Rng& rng);
Correlation evaluate(const ModelInstance& instance, Estimator estimator, Rng& rng);

/// Mean and (N-1)-normalised standard deviation of the defined replication
/// values, in replication order.
struct EstimateSummary {
  std::vector<double> values;
  double mean = 0;
  double std = 0;
  std::size_t n_undefined = 0;
};

class DegenerateRunError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws DegenerateRunError when every value is undefined.
EstimateSummary summarize(std::span<const Correlation> values);

/// Runs `reps` replications; replication j receives Rng(Seed{master, j}) and
/// returns one value per estimator. Replications may run on `jobs` threads;
/// results are merged by replication index, so the output does not depend on
/// the thread count.
using ReplicationFn = std::function<std::vector<Correlation>(std::size_t, Rng&)>;
std::vector<EstimateSummary> replicate(std::size_t reps, std::uint64_t master,
                                       std::size_t estimators, const ReplicationFn& fn,
                                       unsigned jobs = 1);

/// Each replication generates one model instance and applies every estimator
/// to it, in the order given. Summaries are returned in that order.
std::vector<EstimateSummary> run_replications(const ModelConfig& config,
                                              std::span<const Estimator> estimators,
                                              unsigned jobs = 1);
EstimateSummary run_replications(const ModelConfig& config, Estimator estimator,
                                 unsigned jobs = 1);

struct CdfPoint {
  double x = 0;
  double F = 0;
};

/// Right-continuous empirical CDF F(x) = #{v <= x} / count on an ascending grid.
std::vector<CdfPoint> empirical_cdf(std::span<const double> values, std::span<const double> grid);

/// `points` equally spaced values from lo to hi inclusive; points >= 2.
std::vector<double> uniform_grid(double lo, double hi, std::size_t points);

/// Two-sample Kolmogorov-Smirnov distance sup_x |F_a(x) - F_b(x)|.
double ks_distance(std::span<const double> a, std::span<const double> b);

/// Six significant digits, as in every numeric CLI and CSV output.
std::string format_real(double value);

void write_results_header(std::ostream& out);
void write_results_row(std::ostream& out, const ModelConfig& config, Estimator estimator,
                       const EstimateSummary& summary);
void write_cdf_csv(std::ostream& out, std::span<const CdfPoint> cdf);

}  // namespace heavytail
