#include "heavytail/pair_models.hpp"

#include <stdexcept>

namespace heavytail {

PairedSample::PairedSample(Eigen::ArrayXd xs, Eigen::ArrayXd ys)
    : x(std::move(xs)), y(std::move(ys)) {
  if (x.size() != y.size())
    throw std::invalid_argument("PairedSample: x and y differ in length");
}

LinearModel::LinearModel(Eigen::VectorXd alpha, Eigen::VectorXd beta, BaseLaw base_law)
    : alpha_(std::move(alpha)), beta_(std::move(beta)), law_(std::move(base_law)) {
  if (alpha_.size() != beta_.size())
    throw std::invalid_argument("LinearModel: alpha and beta differ in length");
  if (alpha_.size() < 1) throw std::invalid_argument("LinearModel: need at least one term");
}

PairedSample sample_linear_pairs(const LinearModel& model, Eigen::Index n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("sample_linear_pairs: n must be positive");
  // Row i holds the U-vector of pair i; filled row by row to fix the draw order.
  Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> u(n, model.terms());
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < model.terms(); ++j) u(i, j) = draw(model.base_law(), rng);
  return {(u * model.alpha()).array(), (u * model.beta()).array()};
}

PairedSample sample_linear_pairs(const LinearModel& model, Eigen::Index n, Seed seed) {
  Rng rng(seed);
  return sample_linear_pairs(model, n, rng);
}

PairedSample sample_mixture_pairs(const BaseLaw& law, Eigen::Index n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("sample_mixture_pairs: n must be positive");
  Eigen::ArrayXd x = Eigen::ArrayXd::Zero(n);
  Eigen::ArrayXd y = Eigen::ArrayXd::Zero(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double u = draw(law, rng);
    if (rng.coin())
      x[i] = 2.0 * u;
    else
      y[i] = 2.0 * u;
  }
  return {std::move(x), std::move(y)};
}

PairedSample sample_mixture_pairs(const BaseLaw& law, Eigen::Index n, Seed seed) {
  Rng rng(seed);
  return sample_mixture_pairs(law, n, rng);
}

}  // namespace heavytail
