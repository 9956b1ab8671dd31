#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "evenspec/graph.hpp"

namespace evenspec {

enum class ObstructionKind { Parity, Tree, UniquePath, PendantFamily };

std::string to_string(ObstructionKind kind);
std::optional<ObstructionKind> parse_obstruction_kind(const std::string& name);

/// A pair joined by exactly one shortest path.
struct UniquePathWitness {
  Vertex u = 0;
  Vertex v = 0;
  std::size_t distance = 0;
  friend bool operator==(const UniquePathWitness&, const UniquePathWitness&) = default;
};

/// Vertex v, a 2-set x, and the rest y, every y having neighbourhood {v}.
struct PendantWitness {
  Vertex v = 0;
  std::array<Vertex, 2> x{};
  std::vector<Vertex> y;
  friend bool operator==(const PendantWitness&, const PendantWitness&) = default;
};

struct Obstruction {
  ObstructionKind kind = ObstructionKind::Parity;
  std::variant<std::monostate, UniquePathWitness, PendantWitness> witness;
  friend bool operator==(const Obstruction&, const Obstruction&) = default;
};

/// Odd order: the characteristic polynomial has odd degree.
std::optional<Obstruction> parity_no(const Graph& g);

/// Trees. Throws GraphError on disconnected input.
std::optional<Obstruction> tree_no(const Graph& g);

/// Largest d + 1 over pairs at distance d joined by a unique shortest path.
/// A graph without edges has bound 1 and no pair.
struct QBound {
  std::size_t bound = 1;
  std::optional<UniquePathWitness> pair;
};

/// Throws GraphError on disconnected input.
QBound q_lower_bound(const Graph& g);

/// Even order 2n with some unique shortest path of length >= n.
/// Throws GraphError on odd order or disconnected input.
std::optional<Obstruction> unique_path_no(const Graph& g);

/// Even order >= 6 with the pendant shape. Throws GraphError when the order is
/// odd or below 6, or the graph is disconnected.
std::optional<Obstruction> pendant_family_no(const Graph& g);

/// Parity, tree, unique path, pendant family; first hit wins. Connected input.
std::optional<Obstruction> first_obstruction(const Graph& g);

/// Re-checks a witness against the graph from scratch.
bool replay(const Graph& g, const Obstruction& obstruction);

}  // namespace evenspec
