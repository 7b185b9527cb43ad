#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace heavytail {

using Vertex = std::size_t;

/// One undirected edge. Self-loops have u == v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected multigraph with 0-based vertices. Self-loops and parallel edges
/// are kept; a self-loop adds 2 to the degree of its vertex.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n_vertices) : degrees_(n_vertices, 0) {}
  Graph(std::size_t n_vertices, std::vector<Edge> edges);

  std::size_t vertex_count() const { return degrees_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::int64_t>& degrees() const { return degrees_; }
  std::int64_t degree(Vertex v) const { return degrees_[v]; }

  Vertex add_vertex();
  void add_edge(Vertex u, Vertex v);

 private:
  std::vector<Edge> edges_;
  std::vector<std::int64_t> degrees_;
};

class EdgeListError : public std::runtime_error {
 public:
  EdgeListError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Reads "u v" lines (0-based, whitespace separated). Blank lines and lines
/// whose first non-blank character is '#' are skipped. The vertex count is the
/// largest index plus one. Throws EdgeListError naming the offending line.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

void write_edge_list(std::ostream& out, const Graph& graph);

}  // namespace heavytail
