#pragma once

#include <Eigen/Core>

#include "heavytail/rng.hpp"
#include "heavytail/sampling.hpp"

namespace heavytail {

/// n observations (x_i, y_i), stored column-wise.
struct PairedSample {
  Eigen::ArrayXd x;
  Eigen::ArrayXd y;

  PairedSample() = default;
  PairedSample(Eigen::ArrayXd xs, Eigen::ArrayXd ys);

  Eigen::Index size() const { return x.size(); }
};

/// X = sum_j alpha_j U_j, Y = sum_j beta_j U_j with U_1..U_m i.i.d. from base_law.
/// Coefficients of either sign are accepted.
class LinearModel {
 public:
  LinearModel(Eigen::VectorXd alpha, Eigen::VectorXd beta, BaseLaw base_law);

  const Eigen::VectorXd& alpha() const { return alpha_; }
  const Eigen::VectorXd& beta() const { return beta_; }
  const BaseLaw& base_law() const { return law_; }
  Eigen::Index terms() const { return alpha_.size(); }

 private:
  Eigen::VectorXd alpha_;
  Eigen::VectorXd beta_;
  BaseLaw law_;
};

/// Each pair uses a fresh vector (U_1, ..., U_m); draws are consumed pair by pair.
PairedSample sample_linear_pairs(const LinearModel& model, Eigen::Index n, Rng& rng);
PairedSample sample_linear_pairs(const LinearModel& model, Eigen::Index n, Seed seed);

/// (X, Y) = (2U, 0) or (0, 2U), each with probability 1/2. X * Y == 0 on every pair.
PairedSample sample_mixture_pairs(const BaseLaw& law, Eigen::Index n, Rng& rng);
PairedSample sample_mixture_pairs(const BaseLaw& law, Eigen::Index n, Seed seed);

}  // namespace heavytail
