#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "evenspec/constructions.hpp"
#include "evenspec/graph.hpp"
#include "evenspec/sym_matrix.hpp"

namespace evenspec {

class SearchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SearchConfig {
  int restarts = 20;
  int max_iters = 4000;  // coordinate sweeps per restart
  double accept_cost = 1e-20;
  double entry_lo = -2.0;
  double entry_hi = 2.0;
  std::uint64_t seed = 0;

  /// Throws SearchError on a nonpositive budget, accept_cost or empty range.
  void validate() const;
};

/// Sum over consecutive sorted pairs of (l[2i+1] - l[2i])^2. Even order only.
double pairing_cost(const SymMatrix& a);

/// pairing_cost divided by the squared Frobenius norm of the traceless part,
/// so invariant under A -> alpha A + beta I. Zero for scalar matrices.
double normalized_pairing_cost(const SymMatrix& a);

/// Diagonal and edge entries uniform in [lo, hi), edge entries redrawn while
/// |x| < 0.1; non-edges are exactly zero. Deterministic in the seed.
SymMatrix random_in_pattern(const Graph& g, std::uint64_t seed, double lo = -2.0, double hi = 2.0);

struct SearchResult {
  SymMatrix best;
  double cost = 0.0;      // normalized_pairing_cost(best)
  double raw_cost = 0.0;  // pairing_cost(best)
  int restart = -1;       // restart that produced best
  int restarts_run = 0;
};

/// Seeded coordinate descent on normalized_pairing_cost over the diagonal and
/// edge entries, followed by Gauss-Newton polishing of the eigenvalue pairs.
/// Restart i starts from random_in_pattern(g, seed + i). Edge entries never
/// enter |x| < 1e-4. Stops early once a restart reaches accept_cost.
SearchResult minimize(const Graph& g, const SearchConfig& cfg);

/// minimize, then a numeric-mode certificate when the cost reaches
/// accept_cost, the pattern is g and the pair gaps pass `tol`. Empty
/// otherwise; an empty result says nothing about infeasibility.
std::optional<CertifiedMatrix> numeric_certify(const Graph& g, const SearchConfig& cfg,
                                               double tol = kDefaultSquareTol);

}  // namespace evenspec
