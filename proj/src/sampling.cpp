#include "heavytail/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace heavytail {

ParetoLaw::ParetoLaw(double gamma) : gamma_(gamma) {
  if (!(gamma > 0.0) || !std::isfinite(gamma))
    throw std::invalid_argument("ParetoLaw: gamma must be positive and finite");
}

double ParetoLaw::inverse_survival(double v) const { return std::pow(v, -1.0 / gamma_); }

double ParetoLaw::survival(double x) const {
  return x <= 1.0 ? 1.0 : std::pow(x, -gamma_);
}

GeneralizedParetoLaw::GeneralizedParetoLaw(double shift, double scale, double gamma)
    : shift_(shift), scale_(scale), gamma_(gamma) {
  if (!(gamma > 0.0) || !std::isfinite(gamma))
    throw std::invalid_argument("GeneralizedParetoLaw: gamma must be positive and finite");
  if (!(scale > 0.0))
    throw std::invalid_argument("GeneralizedParetoLaw: scale must be positive");
  if (std::abs((shift + 1.0) / scale - 1.0) > 1e-12)
    throw std::invalid_argument("GeneralizedParetoLaw: need shift + 1 == scale");
}

double GeneralizedParetoLaw::inverse_survival(double v) const {
  // max() guards the v == 1 boundary against rounding below the support.
  return std::max(1.0, scale_ * std::pow(v, -1.0 / gamma_) - shift_);
}

double GeneralizedParetoLaw::survival(double x) const {
  return x <= 1.0 ? 1.0 : std::pow((shift_ + x) / scale_, -gamma_);
}

Eigen::ArrayXd sample_pareto(const ParetoLaw& law, Eigen::Index n, Rng& rng) {
  Eigen::ArrayXd out(n);
  for (Eigen::Index i = 0; i < n; ++i) out[i] = law.draw(rng);
  return out;
}

Eigen::ArrayXd sample_pareto(const ParetoLaw& law, Eigen::Index n, Seed seed) {
  Rng rng(seed);
  return sample_pareto(law, n, rng);
}

Eigen::ArrayXd sample_generalized_pareto(const GeneralizedParetoLaw& law, Eigen::Index n,
                                         Rng& rng) {
  Eigen::ArrayXd out(n);
  for (Eigen::Index i = 0; i < n; ++i) out[i] = law.draw(rng);
  return out;
}

Eigen::ArrayXd sample_generalized_pareto(const GeneralizedParetoLaw& law, Eigen::Index n,
                                         Seed seed) {
  Rng rng(seed);
  return sample_generalized_pareto(law, n, rng);
}

DegreeSequence::DegreeSequence(std::vector<std::int64_t> degrees)
    : degrees_(std::move(degrees)) {
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    if (degrees_[i] < 1)
      throw std::invalid_argument("DegreeSequence: degree at index " + std::to_string(i) +
                                  " is below 1");
    total_ += degrees_[i];
  }
  if (total_ % 2 != 0) throw std::invalid_argument("DegreeSequence: odd total degree");
}

DegreeSequence degrees_from_draws(std::span<const double> draws, Rng& rng) {
  if (draws.empty()) throw std::invalid_argument("degrees_from_draws: no draws");
  std::vector<std::int64_t> degrees(draws.size());
  std::int64_t total = 0;
  for (std::size_t i = 0; i < draws.size(); ++i) {
    if (!(draws[i] >= 1.0))
      throw std::invalid_argument("degrees_from_draws: draw below 1");
    // Degrees beyond int64 range cannot occur for any gamma used in practice,
    // but clamp so a pathological draw cannot overflow.
    const double d = std::min(std::floor(draws[i]), 4.0e18);
    degrees[i] = static_cast<std::int64_t>(d);
    total += degrees[i];
  }
  if (total % 2 != 0) ++degrees[rng.below(degrees.size())];
  return DegreeSequence(std::move(degrees));
}

DegreeSequence sample_degree_sequence(double gamma_tail, std::size_t n, Rng& rng,
                                      double scale) {
  if (n < 2) throw std::invalid_argument("sample_degree_sequence: n must be at least 2");
  if (!(scale >= 1.0)) throw std::invalid_argument("sample_degree_sequence: scale must be >= 1");
  const ParetoLaw law(gamma_tail);
  std::vector<double> draws(n);
  for (auto& u : draws) u = scale * law.draw(rng);
  return degrees_from_draws(draws, rng);
}

DegreeSequence sample_degree_sequence(double gamma_tail, std::size_t n, Seed seed,
                                      double scale) {
  Rng rng(seed);
  return sample_degree_sequence(gamma_tail, n, rng, scale);
}

double stable_norming_constant(double gamma, std::uint64_t n) {
  if (!(gamma > 0.0 && gamma < 2.0))
    throw std::invalid_argument("stable_norming_constant: gamma must lie in (0, 2)");
  if (n < 1) throw std::invalid_argument("stable_norming_constant: n must be positive");
  return std::pow(static_cast<double>(n), 2.0 / gamma);
}

}  // namespace heavytail
