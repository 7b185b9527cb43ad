#include "heavytail/graph_models.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace heavytail {

Graph configuration_model(const DegreeSequence& degrees, Rng& rng) {
  std::vector<Vertex> half_edges;
  half_edges.reserve(static_cast<std::size_t>(degrees.total()));
  for (std::size_t v = 0; v < degrees.size(); ++v)
    half_edges.insert(half_edges.end(), static_cast<std::size_t>(degrees[v]), v);
  shuffle(std::span<Vertex>(half_edges), rng);

  Graph g(degrees.size());
  for (std::size_t i = 0; i + 1 < half_edges.size(); i += 2)
    g.add_edge(half_edges[i], half_edges[i + 1]);
  return g;
}

Graph configuration_model(const DegreeSequence& degrees, Seed seed) {
  Rng rng(seed);
  return configuration_model(degrees, rng);
}

Graph erase_parallel_and_loops(const Graph& graph) {
  std::vector<Edge> edges;
  edges.reserve(graph.edge_count());
  for (const auto& e : graph.edges())
    if (e.u != e.v) edges.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
  std::sort(edges.begin(), edges.end(),
            [](const Edge& a, const Edge& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph(graph.vertex_count(), std::move(edges));
}

Graph insert_intermediate_vertices(const Graph& graph) {
  Graph out(graph.vertex_count() + graph.edge_count());
  Vertex middle = graph.vertex_count();
  for (const auto& e : graph.edges()) {
    out.add_edge(e.u, middle);
    out.add_edge(middle, e.v);
    ++middle;
  }
  return out;
}

Graph preferential_attachment(std::size_t n, Rng& rng) {
  if (n < 2) throw std::invalid_argument("preferential_attachment: n must be at least 2");
  // Every edge end is listed once, so a uniform entry is a degree-biased vertex.
  std::vector<Vertex> ends;
  ends.reserve(2 * (n - 1));
  Graph g(n);
  g.add_edge(0, 1);
  ends.push_back(0);
  ends.push_back(1);
  for (Vertex t = 2; t < n; ++t) {
    const Vertex target = ends[rng.below(ends.size())];
    g.add_edge(t, target);
    ends.push_back(t);
    ends.push_back(target);
  }
  return g;
}

Graph preferential_attachment(std::size_t n, Seed seed) {
  Rng rng(seed);
  return preferential_attachment(n, rng);
}

Graph bipartite_collection(const BipartitePairList& pairs) {
  if (pairs.empty()) throw std::invalid_argument("bipartite_collection: no blocks");
  std::size_t vertices = 0;
  std::size_t edges = 0;
  for (const auto& p : pairs) {
    if (p.x < 1 || p.y < 1)
      throw std::invalid_argument("bipartite_collection: block sizes must be at least 1");
    vertices += static_cast<std::size_t>(p.x + p.y);
    edges += static_cast<std::size_t>(p.x) * static_cast<std::size_t>(p.y);
  }
  std::vector<Edge> list;
  list.reserve(edges);
  Vertex base = 0;
  for (const auto& p : pairs) {
    const auto xs = static_cast<std::size_t>(p.x);
    const auto ys = static_cast<std::size_t>(p.y);
    for (std::size_t i = 0; i < xs; ++i)
      for (std::size_t j = 0; j < ys; ++j) list.push_back({base + i, base + xs + j});
    base += xs + ys;
  }
  return Graph(vertices, std::move(list));
}

BlockSize bipartite_block(double b, double a, double u1, double u2) {
  return {std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(b * (u1 + u2)))),
          std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(b * (u1 + a * u2))))};
}

BipartitePairList sample_bipartite_pairs(double b, double a, const GeneralizedParetoLaw& law,
                                         std::size_t n, Rng& rng) {
  if (!(b > 0.0)) throw std::invalid_argument("sample_bipartite_pairs: b must be positive");
  if (!(a >= 1.0)) throw std::invalid_argument("sample_bipartite_pairs: a must be at least 1");
  if (n < 1) throw std::invalid_argument("sample_bipartite_pairs: n must be positive");
  BipartitePairList pairs(n);
  for (auto& p : pairs) {
    const double u1 = law.draw(rng);
    const double u2 = law.draw(rng);
    p = bipartite_block(b, a, u1, u2);
  }
  return pairs;
}

BipartitePairList sample_bipartite_pairs(double b, double a, const GeneralizedParetoLaw& law,
                                         std::size_t n, Seed seed) {
  Rng rng(seed);
  return sample_bipartite_pairs(b, a, law, n, rng);
}

}  // namespace heavytail
