#include "evenspec/canonical.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <tuple>

namespace evenspec {

namespace {

// Equitable-ish colour refinement: start from degrees, then repeatedly split by
// the sorted multiset of neighbour colours. Colour order is derived only from
// structure, so it is preserved by isomorphisms.
std::vector<std::size_t> refined_colours(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> colour(n);
  for (Vertex v = 0; v < n; ++v) colour[v] = g.degree(v);

  for (std::size_t round = 0; round < n; ++round) {
    using Signature = std::pair<std::size_t, std::vector<std::size_t>>;
    std::vector<Signature> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      sig[v].first = colour[v];
      for (Vertex w = 0; w < n; ++w)
        if (g.adjacent(v, w)) sig[v].second.push_back(colour[w]);
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    std::vector<Signature> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

    std::vector<std::size_t> next(n);
    for (Vertex v = 0; v < n; ++v) {
      next[v] = static_cast<std::size_t>(
          std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
    }
    const bool stable = std::set<std::size_t>(next.begin(), next.end()).size() ==
                        std::set<std::size_t>(colour.begin(), colour.end()).size();
    colour = std::move(next);
    if (stable) break;
  }
  return colour;
}

class LabelSearch {
 public:
  explicit LabelSearch(const Graph& g)
      : g_(g), n_(g.order()), total_bits_(n_ * (n_ ? n_ - 1 : 0) / 2) {
    colour_ = refined_colours(g);
    slot_colour_ = colour_;
    std::sort(slot_colour_.begin(), slot_colour_.end());
    placed_.assign(n_, 0);
  }

  void run() {
    if (n_ == 0) {
      found_ = true;
      return;
    }
    descend(0, 0, 0);
  }

  std::uint64_t best_bits() const { return best_; }
  const std::vector<Vertex>& best_order() const { return best_order_; }

 private:
  // Bits for columns 1..k-1 (graph6 column order) are fixed once k vertices
  // are placed; that is the first k(k-1)/2 bits of the final string.
  void descend(std::size_t k, std::uint64_t prefix, std::uint64_t used) {
    if (k == n_) {
      if (!found_ || prefix < best_) {
        best_ = prefix;
        best_order_ = placed_;
        found_ = true;
      }
      return;
    }
    for (Vertex v = 0; v < n_; ++v) {
      if ((used >> v) & 1 || colour_[v] != slot_colour_[k]) continue;
      std::uint64_t extended = prefix;
      for (std::size_t i = 0; i < k; ++i) {
        extended = (extended << 1) | (g_.adjacent(placed_[i], v) ? 1u : 0u);
      }
      if (found_) {
        const std::size_t have = (k + 1) * k / 2;
        const std::uint64_t best_prefix = best_ >> (total_bits_ - have);
        if (extended > best_prefix) continue;
      }
      placed_[k] = v;
      descend(k + 1, extended, used | (std::uint64_t{1} << v));
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::size_t total_bits_;
  std::vector<std::size_t> colour_;
  std::vector<std::size_t> slot_colour_;
  std::vector<Vertex> placed_;
  std::vector<Vertex> best_order_;
  std::uint64_t best_ = 0;
  bool found_ = false;
};

void check_order(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) {
    throw GraphError("canonical labelling supports at most " +
                     std::to_string(kMaxCanonicalOrder) + " vertices, got " +
                     std::to_string(g.order()));
  }
  if (g.has_loops()) throw GraphError("canonical labelling of a graph with loops");
}

}  // namespace

std::string canonical_label(const Graph& g) {
  check_order(g);
  LabelSearch search(g);
  search.run();
  const std::size_t n = g.order();
  const std::size_t total = n * (n ? n - 1 : 0) / 2;
  const std::uint64_t bits = search.best_bits();

  std::string label(1, static_cast<char>(n));
  for (std::size_t start = 0; start < total; start += 8) {
    unsigned char byte = 0;
    for (std::size_t b = 0; b < 8; ++b) {
      byte = static_cast<unsigned char>(byte << 1);
      const std::size_t idx = start + b;
      if (idx < total && ((bits >> (total - 1 - idx)) & 1)) byte |= 1;
    }
    label.push_back(static_cast<char>(byte));
  }
  return label;
}

std::vector<Vertex> canonical_permutation(const Graph& g) {
  check_order(g);
  LabelSearch search(g);
  search.run();
  std::vector<Vertex> perm(g.order());
  const auto& order = search.best_order();
  for (std::size_t pos = 0; pos < order.size(); ++pos) perm[order[pos]] = pos;
  return perm;
}

std::vector<Graph> enumerate_connected(std::size_t n) {
  if (n == 0 || n > kMaxEnumerateOrder) {
    throw GraphError("enumerate_connected supports 1 <= n <= " +
                     std::to_string(kMaxEnumerateOrder) + ", got " + std::to_string(n));
  }
  // Every connected graph has a vertex whose removal keeps it connected, so
  // extending each connected graph on n-1 vertices by one vertex with a
  // nonempty neighbourhood reaches every class.
  std::map<std::string, Graph> level{{canonical_label(Graph(1)), Graph(1)}};
  for (std::size_t order = 2; order <= n; ++order) {
    std::map<std::string, Graph> next;
    for (const auto& [label, base] : level) {
      const std::size_t m = base.order();
      for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << m); ++subset) {
        Graph g(order, base.edges());
        for (Vertex v = 0; v < m; ++v)
          if ((subset >> v) & 1) g.add_edge(v, m);
        auto key = canonical_label(g);
        if (!next.contains(key)) next.emplace(std::move(key), permute(g, canonical_permutation(g)));
      }
    }
    level = std::move(next);
  }

  std::vector<std::pair<std::string, Graph>> items(level.begin(), level.end());
  std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    return std::tuple(a.second.edge_count(), a.first) < std::tuple(b.second.edge_count(), b.first);
  });
  std::vector<Graph> out;
  out.reserve(items.size());
  for (auto& item : items) out.push_back(std::move(item.second));
  return out;
}

}  // namespace evenspec
