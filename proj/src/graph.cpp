#include "heavytail/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>

namespace heavytail {

Graph::Graph(std::size_t n_vertices, std::vector<Edge> edges) : degrees_(n_vertices, 0) {
  edges_.reserve(edges.size());
  for (const auto& e : edges) add_edge(e.u, e.v);
}

Vertex Graph::add_vertex() {
  degrees_.push_back(0);
  return degrees_.size() - 1;
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u >= degrees_.size() || v >= degrees_.size())
    throw std::out_of_range("Graph::add_edge: endpoint out of range");
  edges_.push_back({u, v});
  ++degrees_[u];
  ++degrees_[v];
}

namespace {

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::string_view next_token(std::string_view& rest) {
  std::size_t b = 0;
  while (b < rest.size() && is_blank(rest[b])) ++b;
  std::size_t e = b;
  while (e < rest.size() && !is_blank(rest[e])) ++e;
  auto tok = rest.substr(b, e - b);
  rest.remove_prefix(e);
  return tok;
}

Vertex parse_vertex(std::string_view tok, std::size_t line) {
  Vertex v = 0;
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, v);
  if (ec != std::errc() || ptr != end)
    throw EdgeListError(line, "expected a non-negative vertex index, got '" +
                                  std::string(tok) + "'");
  return v;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  Vertex max_vertex = 0;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    std::string_view rest(text);
    auto first = next_token(rest);
    if (first.empty() || first.front() == '#') continue;
    auto second = next_token(rest);
    if (second.empty()) throw EdgeListError(line, "expected two vertex indices");
    if (!next_token(rest).empty()) throw EdgeListError(line, "trailing fields after edge");
    const Edge e{parse_vertex(first, line), parse_vertex(second, line)};
    max_vertex = std::max({max_vertex, e.u, e.v});
    edges.push_back(e);
  }
  const std::size_t n = edges.empty() ? 0 : max_vertex + 1;
  return Graph(n, std::move(edges));
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open edge list '" + path + "'");
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& graph) {
  for (const auto& e : graph.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace heavytail
