#pragma once

// Hand-transcribed example graphs. Six-vertex drawings put vertex i at angle
// 60*i degrees on a circle.

#include <vector>

#include "evenspec/graph.hpp"

namespace examples {

using evenspec::Edge;
using evenspec::Graph;

inline Graph six(const std::vector<Edge>& edges) { return Graph(6, edges); }

inline const std::vector<Edge> kHexagon = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}};

inline Graph hexagon_plus(std::vector<Edge> extra) {
  extra.insert(extra.end(), kHexagon.begin(), kHexagon.end());
  return six(extra);
}

/// The six 6-vertex patterns of the skew-pair block construction.
inline std::vector<Graph> skew_pair_family() {
  return {
      six(kHexagon),
      hexagon_plus({{0, 2}, {3, 5}}),
      hexagon_plus({{4, 0}, {0, 2}, {1, 3}, {3, 5}}),
      hexagon_plus({{0, 2}, {1, 3}, {2, 4}, {3, 5}, {4, 0}, {5, 1}}),
      six({{1, 2}, {2, 3}, {4, 5}, {5, 0}, {0, 2}, {3, 5}}),
      six({{0, 2}, {2, 4}, {3, 5}, {5, 1}, {1, 2}, {2, 3}, {4, 5}, {5, 0}}),
  };
}

/// The eleven 6-vertex graphs with a rank-2 square realisation.
inline std::vector<Graph> rank2_family() {
  std::vector<Edge> k6_minus;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j)
      if (!(i == 0 && j == 3)) k6_minus.emplace_back(i, j);
  Graph k6(6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j) k6.add_edge(i, j);
  return {
      k6,
      six(k6_minus),
      hexagon_plus({{1, 3}, {1, 4}, {1, 5}, {0, 2}, {2, 4}, {0, 4}, {0, 3}}),
      hexagon_plus({{1, 3}, {1, 4}, {1, 5}, {2, 4}, {0, 4}, {0, 3}, {2, 5}}),
      hexagon_plus({{1, 3}, {1, 4}, {1, 5}, {2, 5}, {3, 5}, {2, 4}}),
      hexagon_plus({{0, 2}, {2, 4}, {0, 4}, {1, 5}, {1, 3}, {0, 3}}),
      six({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 2}, {1, 3}, {2, 4}, {1, 4}, {0, 4}, {0, 3}}),
      hexagon_plus({{0, 2}, {1, 3}, {2, 4}, {1, 4}, {0, 3}}),
      hexagon_plus({{0, 2}, {1, 3}, {3, 5}, {0, 4}, {0, 3}}),
      hexagon_plus({{0, 2}, {1, 3}, {2, 4}, {1, 5}, {0, 3}}),
      six({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 2}, {1, 3}, {3, 5}, {0, 3}}),
  };
}

/// Two 4-cycles glued by the pq-join: twin corners 0 and 4.
inline Graph pq_joined_squares() {
  return Graph(8, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {4, 5}, {5, 6}, {6, 7}, {4, 7}, {1, 4}, {0, 5}, {0, 7},
                   {3, 4}});
}

// Connected 4-vertex graphs.
inline Graph p4() { return Graph(4, {{0, 1}, {1, 2}, {2, 3}}); }
inline Graph claw() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}}); }
inline Graph paw() { return Graph(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}); }
inline Graph c4() { return Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }
inline Graph diamond() { return Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}}); }
inline Graph k4() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

/// Universal vertex 0, edge {1,2}, pendants 3, 4, 5.
inline Graph pendant_six() { return Graph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}}); }

}  // namespace examples
