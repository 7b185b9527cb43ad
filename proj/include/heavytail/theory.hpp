#pragma once

#include <Eigen/Core>

#include <optional>
#include <utility>

namespace heavytail {

/// Lower end a of the support (a, 1) of the limiting sample correlation in the
/// linear model, for coefficients with alpha_k * beta_k >= 0:
///
///   a = min over S, |S| >= 2, of  <alpha, beta>_S / (|alpha|_S |beta|_S)
///
/// evaluated exactly by enumerating all subsets. Subsets on which alpha or beta
/// vanishes identically are skipped. Throws std::invalid_argument for mixed
/// signs, length mismatch, m < 2 or m > 20.
double support_lower_bound(const Eigen::VectorXd& alpha, const Eigen::VectorXd& beta);

/// Probability limit of the sample correlation in the two-point mixture model
/// when Var(U) < inf: -E[U]^2 / (2 Var(U) + E[U]^2).
double mixture_rho_limit(double mean_u, double var_u);

/// E[D], E[D^2], E[D^3].
struct MomentTriple {
  double mu1 = 0;
  double mu2 = 0;
  double mu3 = 0;
};

/// Throws std::invalid_argument unless mu_i > 0, mu2 >= mu1^2 and mu3 mu1 >= mu2^2
/// (up to relative rounding 1e-12).
void check_moments(const MomentTriple& m);

/// Limit of the assortativity of the configuration model with every edge
/// subdivided by a degree-2 vertex, for a degree law with finite third moment.
/// std::nullopt when the denominator vanishes (all degrees equal to 2).
std::optional<double> intermediate_cm_rho_limit(const MomentTriple& m);

/// (2a / (1 + a^2), 1): support of the limiting assortativity of the
/// complete-bipartite collection. a >= 1.
std::pair<double, double> bipartite_limit_interval(double a);

/// E[U^p] for P(U > x) = x^{-gamma}, x >= 1: gamma / (gamma - p), or +inf when
/// gamma <= p.
double pareto_moment(double gamma, int p);

/// E[D^p] for the integer law P(D >= k) = k^{-gamma}, k >= 1, or +inf when
/// gamma <= p. Summed as a combination of Riemann zeta values, which is exact
/// to double rounding.
double integer_pareto_moment(double gamma, int p);

/// (E[D], E[D^2], E[D^3]) of the integer law above.
MomentTriple integer_pareto_moments(double gamma);

}  // namespace heavytail
