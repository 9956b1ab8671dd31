#pragma once

// Short-form graph6 encoding (orders 0..62).

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "evenspec/graph.hpp"

namespace evenspec {

class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(const std::string& what, std::size_t offset);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

inline constexpr std::size_t kMaxGraph6Order = 62;

/// Throws Graph6Error naming the offending byte offset.
Graph parse_graph6(std::string_view text);

/// Throws GraphError for graphs with loops or above the short-form bound.
std::string write_graph6(const Graph& g);

}  // namespace evenspec
