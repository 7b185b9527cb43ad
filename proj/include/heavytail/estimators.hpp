#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

#include "heavytail/graph.hpp"
#include "heavytail/pair_models.hpp"
#include "heavytail/rng.hpp"

namespace heavytail {

/// A correlation value in [-1, 1], or std::nullopt when a variance in the
/// denominator vanishes.
using Correlation = std::optional<double>;

/// Sample correlation coefficient with (n-1)-normalised covariance and standard
/// deviations. Undefined when either coordinate is constant.
template <typename DerivedX, typename DerivedY>
Correlation pearson(const Eigen::DenseBase<DerivedX>& xs, const Eigen::DenseBase<DerivedY>& ys) {
  using Scalar = typename DerivedX::Scalar;
  using Column = Eigen::Array<Scalar, Eigen::Dynamic, 1>;
  const Column x = xs.derived().template cast<Scalar>().array();
  const Column y = ys.derived().template cast<Scalar>().array();
  const Eigen::Index n = x.size();
  if (y.size() != n) throw std::invalid_argument("pearson: x and y differ in length");
  if (n < 2) throw std::invalid_argument("pearson: need at least two observations");

  const Scalar mx = x.mean();
  const Scalar my = y.mean();
  const Column dx = x - mx;
  const Column dy = y - my;
  const Scalar denom_n = static_cast<Scalar>(n - 1);
  const Scalar cov = (dx * dy).sum() / denom_n;
  const Scalar sx = std::sqrt(dx.square().sum() / denom_n);
  const Scalar sy = std::sqrt(dy.square().sum() / denom_n);
  if (!(sx > 0) || !(sy > 0) || !std::isfinite(sx * sy)) return std::nullopt;
  return std::clamp(static_cast<double>(cov / (sx * sy)), -1.0, 1.0);
}

inline Correlation pearson(const PairedSample& sample) { return pearson(sample.x, sample.y); }

bool has_ties(const Eigen::ArrayXd& values);

/// Rank 1 goes to the largest value, rank n to the smallest. Throws
/// std::invalid_argument on exact ties.
Eigen::ArrayXd ranks_descending(const Eigen::ArrayXd& values);

/// Descending ranks of the pairs (values[i], keys[i]) in lexicographic order.
/// With keys uniform on [0, 1) and integer values this is exactly the ranking
/// of values[i] + keys[i]. Remaining ties (equal value and key) fall back to
/// index order.
Eigen::ArrayXd ranks_descending(const Eigen::ArrayXd& values, const Eigen::ArrayXd& keys);

/// 1 - 6 sum(l_i^2) / (n^3 - n), l_i = rx_i - ry_i, for two permutations of 1..n.
double spearman_from_ranks(const Eigen::ArrayXd& rx, const Eigen::ArrayXd& ry);

/// Spearman's rho. A coordinate containing ties is ranked with independent
/// Uniform(0,1) tie-break keys, i.e. as if jittered. Tie-free coordinates are
/// ranked directly and consume no randomness.
Correlation spearman(const PairedSample& sample, Rng& rng);
Correlation spearman(const PairedSample& sample, Seed seed);

/// Degree assortativity over directed edges: each undirected edge counts in
/// both orientations and a self-loop gives two directed edges (i, i).
/// Undefined when all non-isolated vertices share one degree.
Correlation graph_assortativity(const Graph& graph);

/// Rank correlation of end-point degrees over undirected edges: one
/// observation per edge with a fair-coin orientation, Uniform(0,1) jitter on
/// every coordinate, then Spearman's rho. Needs at least two edges.
Correlation graph_spearman(const Graph& graph, Rng& rng);
Correlation graph_spearman(const Graph& graph, Seed seed);

/// The assortativity with its cross-product term dropped:
///   -(sum D^2)^2 / |E|  /  (sum D^3 - (sum D^2)^2 / |E|),  |E| directed.
/// Never exceeds graph_assortativity on the same graph.
Correlation assortativity_lower_bound(const Graph& graph);

}  // namespace heavytail
