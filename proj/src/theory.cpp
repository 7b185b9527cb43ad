#include "heavytail/theory.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace heavytail {

double support_lower_bound(const Eigen::VectorXd& alpha, const Eigen::VectorXd& beta) {
  const Eigen::Index m = alpha.size();
  if (beta.size() != m)
    throw std::invalid_argument("support_lower_bound: alpha and beta differ in length");
  if (m < 2) throw std::invalid_argument("support_lower_bound: need at least two terms");
  if (m > 20) throw std::invalid_argument("support_lower_bound: at most 20 terms");
  if (((alpha.array() * beta.array()) < 0.0).any())
    throw std::invalid_argument(
        "support_lower_bound: mixed-sign products alpha_k * beta_k; support is (-1, 1)");

  const Eigen::ArrayXd ab = alpha.array() * beta.array();
  const Eigen::ArrayXd aa = alpha.array().square();
  const Eigen::ArrayXd bb = beta.array().square();

  double best = std::numeric_limits<double>::infinity();
  const std::uint32_t subsets = std::uint32_t{1} << m;
  for (std::uint32_t s = 0; s < subsets; ++s) {
    if (std::popcount(s) < 2) continue;
    double cross = 0, sa = 0, sb = 0;
    for (Eigen::Index j = 0; j < m; ++j) {
      if ((s >> j) & 1U) {
        cross += ab[j];
        sa += aa[j];
        sb += bb[j];
      }
    }
    if (sa == 0.0 || sb == 0.0) continue;
    best = std::min(best, cross / (std::sqrt(sa) * std::sqrt(sb)));
  }
  if (!std::isfinite(best))
    throw std::invalid_argument("support_lower_bound: every subset has a zero coefficient block");
  return std::clamp(best, 0.0, 1.0);
}

double mixture_rho_limit(double mean_u, double var_u) {
  if (!(var_u >= 0.0) || !std::isfinite(var_u))
    throw std::invalid_argument("mixture_rho_limit: variance must be finite and non-negative");
  if (!(mean_u > 0.0)) throw std::invalid_argument("mixture_rho_limit: mean must be positive");
  const double m2 = mean_u * mean_u;
  return -m2 / (2.0 * var_u + m2);
}

void check_moments(const MomentTriple& m) {
  if (!(m.mu1 > 0 && m.mu2 > 0 && m.mu3 > 0) || !std::isfinite(m.mu3))
    throw std::invalid_argument("moments must be positive and finite");
  constexpr double slack = 1e-12;
  if (m.mu2 < m.mu1 * m.mu1 * (1 - slack))
    throw std::invalid_argument("inconsistent moments: mu2 < mu1^2");
  if (m.mu3 * m.mu1 < m.mu2 * m.mu2 * (1 - slack))
    throw std::invalid_argument("inconsistent moments: mu3 mu1 < mu2^2");
}

std::optional<double> intermediate_cm_rho_limit(const MomentTriple& m) {
  check_moments(m);
  const double r = m.mu2 / m.mu1;
  const double centre = (1.0 + r / 2.0) * (1.0 + r / 2.0);
  const double num = 2.0 * r - centre;
  const double den = (2.0 + m.mu3 / (2.0 * m.mu1)) - centre;
  if (std::abs(den) <= 1e-12 * centre) return std::nullopt;
  return num / den;
}

std::pair<double, double> bipartite_limit_interval(double a) {
  if (!(a >= 1.0)) throw std::invalid_argument("bipartite_limit_interval: a must be at least 1");
  return {2.0 * a / (1.0 + a * a), 1.0};
}

double pareto_moment(double gamma, int p) {
  if (!(gamma > 0.0)) throw std::invalid_argument("pareto_moment: gamma must be positive");
  if (p < 1) throw std::invalid_argument("pareto_moment: p must be at least 1");
  if (gamma <= p) return std::numeric_limits<double>::infinity();
  return gamma / (gamma - p);
}

double integer_pareto_moment(double gamma, int p) {
  if (!(gamma > 0.0)) throw std::invalid_argument("integer_pareto_moment: gamma must be positive");
  if (p < 1) throw std::invalid_argument("integer_pareto_moment: p must be at least 1");
  if (gamma <= p) return std::numeric_limits<double>::infinity();
  // E[D^p] = sum_k (k^p - (k-1)^p) k^{-gamma}; expanding the difference
  // binomially turns each power k^j into a zeta value zeta(gamma - j).
  double total = 0;
  double binom = 1;  // C(p, j)
  for (int j = 0; j < p; ++j) {
    const double sign = ((p - 1 - j) % 2 == 0) ? 1.0 : -1.0;
    total += sign * binom * std::riemann_zeta(gamma - j);
    binom = binom * (p - j) / (j + 1);
  }
  return total;
}

MomentTriple integer_pareto_moments(double gamma) {
  return {integer_pareto_moment(gamma, 1), integer_pareto_moment(gamma, 2),
          integer_pareto_moment(gamma, 3)};
}

}  // namespace heavytail
