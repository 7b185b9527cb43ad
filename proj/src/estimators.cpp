#include "heavytail/estimators.hpp"

#include <numeric>
#include <vector>

namespace heavytail {

namespace {

std::vector<Eigen::Index> descending_order(const Eigen::ArrayXd& values,
                                           const Eigen::ArrayXd* keys) {
  std::vector<Eigen::Index> order(static_cast<std::size_t>(values.size()));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    if (values[a] != values[b]) return values[a] > values[b];
    if (keys != nullptr && (*keys)[a] != (*keys)[b]) return (*keys)[a] > (*keys)[b];
    return a < b;
  });
  return order;
}

Eigen::ArrayXd ranks_from_order(const std::vector<Eigen::Index>& order) {
  Eigen::ArrayXd ranks(static_cast<Eigen::Index>(order.size()));
  for (std::size_t pos = 0; pos < order.size(); ++pos)
    ranks[order[pos]] = static_cast<double>(pos + 1);
  return ranks;
}

Eigen::ArrayXd uniform_keys(Eigen::Index n, Rng& rng) {
  Eigen::ArrayXd keys(n);
  for (Eigen::Index i = 0; i < n; ++i) keys[i] = rng.uniform();
  return keys;
}

struct DegreeMoments {
  long double cross = 0;    // sum over directed edges of D_i D_j
  long double squares = 0;  // sum over vertices of D_i^2
  long double cubes = 0;    // sum over vertices of D_i^3
  long double directed_edges = 0;
  bool regular = true;      // all non-isolated vertices share one degree
};

DegreeMoments degree_moments(const Graph& graph) {
  if (graph.edge_count() == 0) throw std::invalid_argument("graph has no edges");
  DegreeMoments m;
  const auto& deg = graph.degrees();
  for (const auto& e : graph.edges())
    m.cross += 2.0L * static_cast<long double>(deg[e.u]) * static_cast<long double>(deg[e.v]);
  std::int64_t common = 0;
  for (const auto d : deg) {
    if (d == 0) continue;
    if (common == 0) common = d;
    if (d != common) m.regular = false;
    const auto ld = static_cast<long double>(d);
    m.squares += ld * ld;
    m.cubes += ld * ld * ld;
  }
  m.directed_edges = 2.0L * static_cast<long double>(graph.edge_count());
  return m;
}

}  // namespace

bool has_ties(const Eigen::ArrayXd& values) {
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
}

Eigen::ArrayXd ranks_descending(const Eigen::ArrayXd& values) {
  const auto order = descending_order(values, nullptr);
  for (std::size_t i = 1; i < order.size(); ++i)
    if (values[order[i]] == values[order[i - 1]])
      throw std::invalid_argument("ranks_descending: tied values; jitter before ranking");
  return ranks_from_order(order);
}

Eigen::ArrayXd ranks_descending(const Eigen::ArrayXd& values, const Eigen::ArrayXd& keys) {
  if (keys.size() != values.size())
    throw std::invalid_argument("ranks_descending: keys and values differ in length");
  return ranks_from_order(descending_order(values, &keys));
}

double spearman_from_ranks(const Eigen::ArrayXd& rx, const Eigen::ArrayXd& ry) {
  const Eigen::Index n = rx.size();
  if (ry.size() != n) throw std::invalid_argument("spearman_from_ranks: length mismatch");
  if (n < 2) throw std::invalid_argument("spearman_from_ranks: need at least two ranks");
  // Rank differences are integers; accumulate them exactly.
  long double sum_sq = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto l = static_cast<long double>(rx[i] - ry[i]);
    sum_sq += l * l;
  }
  const auto nn = static_cast<long double>(n);
  const long double rho = 1.0L - 6.0L * sum_sq / (nn * nn * nn - nn);
  return std::clamp(static_cast<double>(rho), -1.0, 1.0);
}

Correlation spearman(const PairedSample& sample, Rng& rng) {
  const Eigen::Index n = sample.size();
  if (n < 2) throw std::invalid_argument("spearman: need at least two observations");
  auto rank = [&](const Eigen::ArrayXd& v) {
    if (!has_ties(v)) return ranks_descending(v);
    return ranks_descending(v, uniform_keys(n, rng));
  };
  const Eigen::ArrayXd rx = rank(sample.x);
  const Eigen::ArrayXd ry = rank(sample.y);
  return spearman_from_ranks(rx, ry);
}

Correlation spearman(const PairedSample& sample, Seed seed) {
  Rng rng(seed);
  return spearman(sample, rng);
}

Correlation graph_assortativity(const Graph& graph) {
  const auto m = degree_moments(graph);
  if (m.regular) return std::nullopt;
  const long double mean_term = m.squares * m.squares / m.directed_edges;
  const long double denom = m.cubes - mean_term;
  if (!(denom > 0)) return std::nullopt;
  return std::clamp(static_cast<double>((m.cross - mean_term) / denom), -1.0, 1.0);
}

Correlation graph_spearman(const Graph& graph, Rng& rng) {
  const auto m = static_cast<Eigen::Index>(graph.edge_count());
  if (m < 2) throw std::invalid_argument("graph_spearman: need at least two edges");
  const auto& deg = graph.degrees();
  Eigen::ArrayXd x(m);
  Eigen::ArrayXd y(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const auto& e = graph.edges()[static_cast<std::size_t>(i)];
    auto a = static_cast<double>(deg[e.u]);
    auto b = static_cast<double>(deg[e.v]);
    if (rng.coin()) std::swap(a, b);
    x[i] = a;
    y[i] = b;
  }
  // Degrees are integers, so ranking (degree, jitter) lexicographically is the
  // same as ranking degree + jitter, without the rounding of the addition.
  const Eigen::ArrayXd jx = uniform_keys(m, rng);
  const Eigen::ArrayXd jy = uniform_keys(m, rng);
  return spearman_from_ranks(ranks_descending(x, jx), ranks_descending(y, jy));
}

Correlation graph_spearman(const Graph& graph, Seed seed) {
  Rng rng(seed);
  return graph_spearman(graph, rng);
}

Correlation assortativity_lower_bound(const Graph& graph) {
  const auto m = degree_moments(graph);
  if (m.regular) return std::nullopt;
  const long double mean_term = m.squares * m.squares / m.directed_edges;
  const long double denom = m.cubes - mean_term;
  if (!(denom > 0)) return std::nullopt;
  return static_cast<double>(-mean_term / denom);
}

}  // namespace heavytail
