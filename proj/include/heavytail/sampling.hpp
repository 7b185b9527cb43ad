#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "heavytail/rng.hpp"

namespace heavytail {

/// Pure Pareto law with P(U > x) = x^{-gamma} on [1, inf).
class ParetoLaw {
 public:
  explicit ParetoLaw(double gamma);

  double gamma() const { return gamma_; }

  /// Inverse of the survival function: the x with P(U > x) = v, for v in (0, 1].
  double inverse_survival(double v) const;
  double survival(double x) const;
  double cdf(double x) const { return 1.0 - survival(x); }

  double draw(Rng& rng) const { return inverse_survival(rng.uniform_open_zero()); }

 private:
  double gamma_;
};

/// Shifted Pareto law P(U > x) = ((shift + x) / scale)^{-gamma} for x > 1.
/// Requires shift + 1 == scale so that the support starts at 1.
class GeneralizedParetoLaw {
 public:
  GeneralizedParetoLaw(double shift, double scale, double gamma);

  /// The law used for the complete-bipartite experiments: (1.8, 2.8, 2.8).
  static GeneralizedParetoLaw bipartite_default() { return {1.8, 2.8, 2.8}; }

  double shift() const { return shift_; }
  double scale() const { return scale_; }
  double gamma() const { return gamma_; }

  double inverse_survival(double v) const;
  double survival(double x) const;
  double cdf(double x) const { return 1.0 - survival(x); }

  double draw(Rng& rng) const { return inverse_survival(rng.uniform_open_zero()); }

 private:
  double shift_;
  double scale_;
  double gamma_;
};

using BaseLaw = std::variant<ParetoLaw, GeneralizedParetoLaw>;

inline double draw(const BaseLaw& law, Rng& rng) {
  return std::visit([&rng](const auto& l) { return l.draw(rng); }, law);
}

Eigen::ArrayXd sample_pareto(const ParetoLaw& law, Eigen::Index n, Rng& rng);
Eigen::ArrayXd sample_pareto(const ParetoLaw& law, Eigen::Index n, Seed seed);
Eigen::ArrayXd sample_generalized_pareto(const GeneralizedParetoLaw& law, Eigen::Index n,
                                         Rng& rng);
Eigen::ArrayXd sample_generalized_pareto(const GeneralizedParetoLaw& law, Eigen::Index n,
                                         Seed seed);

/// Positive integer degrees with an even total.
class DegreeSequence {
 public:
  /// Throws std::invalid_argument if any entry is < 1 or the sum is odd.
  explicit DegreeSequence(std::vector<std::int64_t> degrees);

  const std::vector<std::int64_t>& degrees() const { return degrees_; }
  std::size_t size() const { return degrees_.size(); }
  std::int64_t total() const { return total_; }
  std::int64_t operator[](std::size_t i) const { return degrees_[i]; }

 private:
  std::vector<std::int64_t> degrees_;
  std::int64_t total_ = 0;
};

/// Floors continuous draws (each >= 1) into degrees and, if the total is odd,
/// adds one to a uniformly chosen entry.
DegreeSequence degrees_from_draws(std::span<const double> draws, Rng& rng);

/// i.i.d. degrees D = floor(scale * U), U Pareto with tail exponent gamma_tail.
/// With the default scale of 1, P(D >= k) = k^{-gamma_tail} on the integers;
/// a larger scale keeps the tail exponent and raises the minimum degree to
/// floor(scale). n must be at least 2.
DegreeSequence sample_degree_sequence(double gamma_tail, std::size_t n, Rng& rng,
                                      double scale = 1.0);
DegreeSequence sample_degree_sequence(double gamma_tail, std::size_t n, Seed seed,
                                      double scale = 1.0);

/// a_n = n^{2/gamma}: the scale at which sum_{i<=n} U_i^2 has a stable limit
/// of index gamma/2 for pure Pareto U. gamma must lie in (0, 2).
double stable_norming_constant(double gamma, std::uint64_t n);

}  // namespace heavytail
