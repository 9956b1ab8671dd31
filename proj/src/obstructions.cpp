#include "evenspec/obstructions.hpp"

#include <algorithm>

namespace evenspec {

namespace {

void require_connected(const Graph& g, const char* what) {
  if (!is_connected(g)) throw GraphError(std::string(what) + " needs a connected graph");
}

bool is_pendant_shape(const Graph& g, Vertex v, Vertex x1, Vertex x2, const std::vector<Vertex>& y) {
  const std::size_t n = g.order();
  if (n < 6 || n % 2 != 0) return false;
  if (v >= n || x1 >= n || x2 >= n || v == x1 || v == x2 || x1 == x2) return false;
  if (y.size() != n - 3) return false;
  std::uint64_t seen = (std::uint64_t{1} << v) | (std::uint64_t{1} << x1) | (std::uint64_t{1} << x2);
  for (Vertex w : y) {
    if (w >= n || (seen >> w) & 1) return false;
    seen |= std::uint64_t{1} << w;
    if (g.neighbours(w) != (std::uint64_t{1} << v)) return false;
  }
  return true;
}

}  // namespace

std::string to_string(ObstructionKind kind) {
  switch (kind) {
    case ObstructionKind::Parity: return "parity";
    case ObstructionKind::Tree: return "tree";
    case ObstructionKind::UniquePath: return "unique_path";
    case ObstructionKind::PendantFamily: return "pendant_family";
  }
  return "?";
}

std::optional<ObstructionKind> parse_obstruction_kind(const std::string& name) {
  for (auto k : {ObstructionKind::Parity, ObstructionKind::Tree, ObstructionKind::UniquePath,
                 ObstructionKind::PendantFamily}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

std::optional<Obstruction> parity_no(const Graph& g) {
  if (g.order() % 2 == 1) return Obstruction{ObstructionKind::Parity, {}};
  return std::nullopt;
}

std::optional<Obstruction> tree_no(const Graph& g) {
  require_connected(g, "tree_no");
  if (is_tree(g)) return Obstruction{ObstructionKind::Tree, {}};
  return std::nullopt;
}

QBound q_lower_bound(const Graph& g) {
  require_connected(g, "q_lower_bound");
  QBound best;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      const std::size_t d = *distance(g, u, v);
      if (d + 1 > best.bound && unique_shortest_path(g, u, v)) {
        best.bound = d + 1;
        best.pair = UniquePathWitness{u, v, d};
      }
    }
  }
  return best;
}

std::optional<Obstruction> unique_path_no(const Graph& g) {
  if (g.order() % 2 != 0) throw GraphError("unique_path_no needs even order");
  const QBound q = q_lower_bound(g);
  if (q.pair && q.bound >= g.order() / 2 + 1) return Obstruction{ObstructionKind::UniquePath, *q.pair};
  return std::nullopt;
}

std::optional<Obstruction> pendant_family_no(const Graph& g) {
  const std::size_t n = g.order();
  if (n % 2 != 0 || n < 6) throw GraphError("pendant_family_no needs even order >= 6");
  require_connected(g, "pendant_family_no");
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex x1 = 0; x1 < n; ++x1) {
      for (Vertex x2 = x1 + 1; x2 < n; ++x2) {
        if (x1 == v || x2 == v) continue;
        std::vector<Vertex> y;
        for (Vertex w = 0; w < n; ++w)
          if (w != v && w != x1 && w != x2) y.push_back(w);
        if (is_pendant_shape(g, v, x1, x2, y)) {
          return Obstruction{ObstructionKind::PendantFamily, PendantWitness{v, {x1, x2}, std::move(y)}};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<Obstruction> first_obstruction(const Graph& g) {
  if (auto o = parity_no(g)) return o;
  if (auto o = tree_no(g)) return o;
  if (auto o = unique_path_no(g)) return o;
  if (g.order() >= 6) return pendant_family_no(g);
  return std::nullopt;
}

bool replay(const Graph& g, const Obstruction& o) {
  switch (o.kind) {
    case ObstructionKind::Parity:
      return g.order() % 2 == 1;
    case ObstructionKind::Tree:
      return is_tree(g);
    case ObstructionKind::UniquePath: {
      const auto* w = std::get_if<UniquePathWitness>(&o.witness);
      if (!w || g.order() % 2 != 0 || w->u == w->v || w->u >= g.order() || w->v >= g.order()) return false;
      if (!is_connected(g)) return false;
      return distance(g, w->u, w->v) == w->distance && unique_shortest_path(g, w->u, w->v) &&
             w->distance >= g.order() / 2;
    }
    case ObstructionKind::PendantFamily: {
      const auto* w = std::get_if<PendantWitness>(&o.witness);
      return w && is_connected(g) && is_pendant_shape(g, w->v, w->x[0], w->x[1], w->y);
    }
  }
  return false;
}

}  // namespace evenspec
