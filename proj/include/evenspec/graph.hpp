#pragma once

// Simple undirected graphs on at most 64 vertices, stored as adjacency bit rows.
//
// Vertices are 0-based throughout the library. graph6 strings, JSON records and
// the CLI all use the same 0-based indices.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace evenspec {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr std::size_t kMaxOrder = 64;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t order);
  Graph(std::size_t order, const std::vector<Edge>& edges);

  std::size_t order() const { return rows_.size(); }
  std::size_t edge_count() const;

  bool adjacent(Vertex u, Vertex v) const;
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  std::uint64_t neighbours(Vertex v) const;
  std::size_t degree(Vertex v) const;

  /// Self-loops are kept apart from the edge set. Only the first factor of a
  /// tensor product carries them; they mark nonzero diagonal matrix entries.
  bool has_loop(Vertex v) const;
  void set_loop(Vertex v, bool on = true);
  bool has_loops() const { return loops_ != 0; }

  /// Edges as (i, j) with i < j, in lexicographic order.
  std::vector<Edge> edges() const;

  bool operator==(const Graph& other) const = default;

 private:
  void check_vertex(Vertex v) const;

  std::vector<std::uint64_t> rows_;
  std::uint64_t loops_ = 0;
};

// Named families used across tests, examples and the CLI.
Graph empty_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph star_graph(std::size_t leaves);
Graph complete_bipartite(std::size_t p, std::size_t q);

/// Cycle on k vertices with a path of m vertices glued at cycle vertex 0
/// (one end of the path is identified with that vertex). Order k + m - 1.
Graph cycle_with_tail(std::size_t k, std::size_t m);

Graph complement(const Graph& g);
Graph join(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);

/// Categorical product. Vertex (u, u') maps to u * |h| + u'. Loops of g count
/// as edges of g; loops of h are ignored and the result carries no loops.
Graph tensor_graph(const Graph& g, const Graph& h);

/// Relabels vertex v as perm[v].
Graph permute(const Graph& g, const std::vector<Vertex>& perm);

/// Induced subgraph on the listed vertices, in the listed order.
Graph induced(const Graph& g, const std::vector<Vertex>& keep);

/// BFS distance; nullopt when u and v lie in different components.
std::optional<std::size_t> distance(const Graph& g, Vertex u, Vertex v);

/// True iff exactly one shortest u-v path exists. Throws GraphError when u and
/// v are disconnected or equal.
bool unique_shortest_path(const Graph& g, Vertex u, Vertex v);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

std::string to_string(const Graph& g);

}  // namespace evenspec
