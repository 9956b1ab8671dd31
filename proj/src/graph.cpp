#include "evenspec/graph.hpp"

#include <bit>
#include <deque>
#include <sstream>

namespace evenspec {

namespace {

std::uint64_t bit(Vertex v) { return std::uint64_t{1} << v; }

}  // namespace

Graph::Graph(std::size_t order) : rows_(order, 0) {
  if (order > kMaxOrder) {
    throw GraphError("graph order " + std::to_string(order) + " exceeds " +
                     std::to_string(kMaxOrder));
  }
}

Graph::Graph(std::size_t order, const std::vector<Edge>& edges) : Graph(order) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(Vertex v) const {
  if (v >= order()) {
    throw GraphError("vertex " + std::to_string(v) + " out of range for order " +
                     std::to_string(order()));
  }
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (auto row : rows_) twice += static_cast<std::size_t>(std::popcount(row));
  return twice / 2;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return (rows_[u] & bit(v)) != 0;
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw GraphError("self-loop {" + std::to_string(u) + "," + std::to_string(u) + "} is not an edge");
  rows_[u] |= bit(v);
  rows_[v] |= bit(u);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  rows_[u] &= ~bit(v);
  rows_[v] &= ~bit(u);
}

std::uint64_t Graph::neighbours(Vertex v) const {
  check_vertex(v);
  return rows_[v];
}

std::size_t Graph::degree(Vertex v) const {
  return static_cast<std::size_t>(std::popcount(neighbours(v)));
}

bool Graph::has_loop(Vertex v) const {
  check_vertex(v);
  return (loops_ & bit(v)) != 0;
}

void Graph::set_loop(Vertex v, bool on) {
  check_vertex(v);
  if (on) {
    loops_ |= bit(v);
  } else {
    loops_ &= ~bit(v);
  }
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex i = 0; i < order(); ++i) {
    for (Vertex j = i + 1; j < order(); ++j) {
      if (rows_[i] & bit(j)) out.emplace_back(i, j);
    }
  }
  return out;
}

Graph empty_graph(std::size_t n) { return Graph(n); }

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph path_graph(std::size_t n) {
  Graph g(n);
  for (Vertex i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw GraphError("cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph star_graph(std::size_t leaves) {
  Graph g(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph complete_bipartite(std::size_t p, std::size_t q) {
  Graph g(p + q);
  for (Vertex i = 0; i < p; ++i)
    for (Vertex j = 0; j < q; ++j) g.add_edge(i, p + j);
  return g;
}

Graph cycle_with_tail(std::size_t k, std::size_t m) {
  if (m == 0) throw GraphError("tail path needs at least one vertex");
  Graph g(k + m - 1);
  for (Vertex i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k);
  Vertex prev = 0;
  for (Vertex i = 0; i + 1 < m; ++i) {
    g.add_edge(prev, k + i);
    prev = k + i;
  }
  return g;
}

Graph complement(const Graph& g) {
  if (g.has_loops()) throw GraphError("complement of a graph with loops");
  const std::size_t n = g.order();
  Graph out(n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (!g.adjacent(i, j)) out.add_edge(i, j);
  return out;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  Graph out(g.order() + h.order());
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (auto [u, v] : h.edges()) out.add_edge(g.order() + u, g.order() + v);
  return out;
}

Graph join(const Graph& g, const Graph& h) {
  if (g.has_loops() || h.has_loops()) throw GraphError("join of graphs with loops");
  Graph out = disjoint_union(g, h);
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = 0; v < h.order(); ++v) out.add_edge(u, g.order() + v);
  return out;
}

Graph tensor_graph(const Graph& g, const Graph& h) {
  const std::size_t m = h.order();
  Graph out(g.order() * m);
  auto g_related = [&](Vertex u, Vertex v) {
    return u == v ? g.has_loop(u) : g.adjacent(u, v);
  };
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = 0; v < g.order(); ++v) {
      if (!g_related(u, v)) continue;
      for (auto [a, b] : h.edges()) {
        out.add_edge(u * m + a, v * m + b);
        out.add_edge(u * m + b, v * m + a);
      }
    }
  }
  return out;
}

Graph permute(const Graph& g, const std::vector<Vertex>& perm) {
  if (perm.size() != g.order()) throw GraphError("permutation size mismatch");
  Graph out(g.order());
  for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.has_loop(v)) out.set_loop(perm[v]);
  return out;
}

Graph induced(const Graph& g, const std::vector<Vertex>& keep) {
  Graph out(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (g.adjacent(keep[i], keep[j])) out.add_edge(i, j);
  return out;
}

namespace {

struct BfsLayers {
  std::vector<std::size_t> dist;
  std::vector<unsigned> paths;  // saturates at 2
};

constexpr std::size_t kUnreached = static_cast<std::size_t>(-1);

BfsLayers bfs(const Graph& g, Vertex source) {
  BfsLayers out{std::vector<std::size_t>(g.order(), kUnreached),
                std::vector<unsigned>(g.order(), 0)};
  out.dist[source] = 0;
  out.paths[source] = 1;
  std::deque<Vertex> queue{source};
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    std::uint64_t nb = g.neighbours(x);
    while (nb) {
      Vertex y = static_cast<Vertex>(std::countr_zero(nb));
      nb &= nb - 1;
      if (out.dist[y] == kUnreached) {
        out.dist[y] = out.dist[x] + 1;
        queue.push_back(y);
      }
      if (out.dist[y] == out.dist[x] + 1) {
        out.paths[y] = std::min(2u, out.paths[y] + out.paths[x]);
      }
    }
  }
  return out;
}

}  // namespace

std::optional<std::size_t> distance(const Graph& g, Vertex u, Vertex v) {
  g.adjacent(u, v);  // range check
  auto layers = bfs(g, u);
  if (layers.dist[v] == kUnreached) return std::nullopt;
  return layers.dist[v];
}

bool unique_shortest_path(const Graph& g, Vertex u, Vertex v) {
  g.adjacent(u, v);
  if (u == v) throw GraphError("unique_shortest_path needs distinct vertices");
  auto layers = bfs(g, u);
  if (layers.dist[v] == kUnreached) {
    throw GraphError("vertices " + std::to_string(u) + " and " + std::to_string(v) +
                     " are disconnected");
  }
  return layers.paths[v] == 1;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  auto layers = bfs(g, 0);
  for (auto d : layers.dist)
    if (d == kUnreached) return false;
  return true;
}

bool is_tree(const Graph& g) {
  return g.order() > 0 && is_connected(g) && g.edge_count() + 1 == g.order();
}

std::string to_string(const Graph& g) {
  std::ostringstream os;
  os << "Graph(n=" << g.order() << ", edges={";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    os << (first ? "" : ", ") << u << "-" << v;
    first = false;
  }
  os << "})";
  return os.str();
}

}  // namespace evenspec
