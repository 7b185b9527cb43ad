#pragma once

#include <cstdint>
#include <vector>

#include "heavytail/graph.hpp"
#include "heavytail/rng.hpp"
#include "heavytail/sampling.hpp"

namespace heavytail {

/// Uniform random perfect matching of the half-edges: the half-edge list is
/// shuffled and paired off consecutively. Self-loops and parallel edges stay,
/// so the degree sequence of the result equals the input.
Graph configuration_model(const DegreeSequence& degrees, Rng& rng);
Graph configuration_model(const DegreeSequence& degrees, Seed seed);

/// Drops self-loops and collapses parallel edges. Vertex set is unchanged.
Graph erase_parallel_and_loops(const Graph& graph);

/// Subdivides every edge {u, v} into {u, m}, {m, v} with a fresh vertex m.
/// Fresh vertices are numbered n, n+1, ... in edge order. A self-loop at i
/// becomes two parallel edges {i, m}.
Graph insert_intermediate_vertices(const Graph& graph);

/// Linear preferential attachment with one edge per arriving vertex. Starts
/// from the single edge {0, 1}; vertex t attaches to an existing vertex chosen
/// with probability proportional to its degree.
Graph preferential_attachment(std::size_t n, Rng& rng);
Graph preferential_attachment(std::size_t n, Seed seed);

struct BlockSize {
  std::int64_t x = 1;
  std::int64_t y = 1;
};

using BipartitePairList = std::vector<BlockSize>;

/// Disjoint union of complete bipartite graphs K_{x_i, y_i}. Block i occupies
/// x_i vertices followed by y_i vertices.
Graph bipartite_collection(const BipartitePairList& pairs);

/// One block from the base draws u1, u2: X = ceil(b (u1 + u2)),
/// Y = ceil(b (u1 + a u2)), each at least 1.
BlockSize bipartite_block(double b, double a, double u1, double u2);

/// n blocks from i.i.d. draws of `law`, see bipartite_block.
BipartitePairList sample_bipartite_pairs(double b, double a, const GeneralizedParetoLaw& law,
                                         std::size_t n, Rng& rng);
BipartitePairList sample_bipartite_pairs(double b, double a, const GeneralizedParetoLaw& law,
                                         std::size_t n, Seed seed);

}  // namespace heavytail
