#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "evenspec/certify.hpp"
#include "evenspec/graph.hpp"
#include "evenspec/sym_matrix.hpp"

namespace evenspec {

class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Entries at or below this magnitude count as zero when reading a pattern.
inline constexpr double kPatternTol = 1e-10;

/// A matrix, its pattern and a passing square certificate.
struct CertifiedMatrix {
  SymMatrix matrix;
  Graph graph;
  SpectrumCertificate certificate;
  std::string construction;
  std::string parameters;
};

/// Reads the pattern and certifies; throws ConstructionError when the
/// spectrum does not pair up.
CertifiedMatrix certify_matrix(SymMatrix m, std::string construction, std::string parameters,
                               double tol = kDefaultSquareTol);

/// Pattern and certificate re-checked from the stored matrix alone.
bool verify(const CertifiedMatrix& c, double tol = kDefaultSquareTol);

/// [[A, S], [-S, A]] with S skew; `skew_upper` is the strict upper triangle of
/// S, row-major (n(n-1)/2 entries). The exact overload keeps rationals.
SymMatrix skew_pair(const SymMatrix& a, std::span<const double> skew_upper);
SymMatrix skew_pair(const SymMatrix& a, const std::vector<Rational>& skew_upper);

/// Path adjacency glued by S = E_{n1} - E_{1n}; pattern is the cycle 0-1-...-(2n-1)-0.
CertifiedMatrix cycle_matrix(std::size_t order);

/// Kronecker product; index of (i, k) is i * b.order() + k.
SymMatrix kron(const SymMatrix& a, const SymMatrix& b);

/// Result of gluing b onto the last vertex of a through the eigenpair (mu, u).
///
/// Layout: the first n-1 vertices of a, then the m vertices of b.
struct HsJoin {
  SymMatrix matrix;
  std::size_t a_order = 0;
  std::vector<double> u;

  /// Eigenvector (v, x) of a becomes (v, x u).
  std::vector<double> lift_a(std::span<const double> v) const;
  /// Eigenvector w of b orthogonal to u becomes (0, w).
  std::vector<double> lift_b(std::span<const double> w) const;
};

/// Needs a(n-1, n-1) == mu, |u| == 1 and b u == mu u, each to 1e-10 (the
/// eigenpair residual relative to max(1, |b|_F)).
HsJoin hs_join(const SymMatrix& a, const SymMatrix& b, std::span<const double> u, double mu);

/// Replace vertex v by a clique on 2m+1 vertices. The clique takes positions
/// v..v+2m; later vertices move up by 2m.
CertifiedMatrix clique_blowup(const CertifiedMatrix& c, Vertex v, std::size_t m);

/// Needs a's last diagonal entry 2 and b's 0 (to 1e-12). Layout: the first
/// m-1 vertices of b, the first n-1 vertices of a, then the two corner vertices.
SymMatrix pq_join(const SymMatrix& a, const SymMatrix& b);

/// Shift ca so (v_a, v_a) is 2 and cb so (v_b, v_b) is 0, then pq_join.
/// Scalar inputs are rejected.
CertifiedMatrix graph_pq_join(const CertifiedMatrix& ca, Vertex v_a, const CertifiedMatrix& cb, Vertex v_b);

/// Spectrum for a complete-graph realisation. `support` marks the wanted
/// nonzero positions of the eigenvector for values[0]; empty means all.
struct SpectrumTarget {
  std::vector<double> values;
  std::vector<bool> support;
};

struct CompleteRealization {
  SymMatrix matrix;
  std::vector<double> eigenvector;  // unit, for target.values[0]
};

/// Matrix in S(K_n) with the target spectrum. Needs values[0] != values[1]
/// and at least two support positions. When values[1..] are all equal only
/// full support is possible, and other supports are rejected.
CompleteRealization realize_complete(const SpectrumTarget& target);

/// K_{2m} with eigenvalues pair_values[0], pair_values[1], ... each doubled.
CertifiedMatrix even_complete(std::size_t order, const std::vector<double>& pair_values);

/// Glue a complete block onto the last vertex of a. The block has spectrum
/// (a(n-1,n-1), completion...) and a full-support eigenvector for its first
/// value, so the result has spectrum spec(a) plus completion; the caller picks
/// completion so that this pairs up.
CertifiedMatrix join_complete_block(const SymMatrix& a, const std::vector<double>& completion);

/// G joined with K_{n+1} for g on n-1 vertices, from a random member of
/// S(G v K_1) with the given seed.
CertifiedMatrix join_with_clique(const Graph& g, std::uint64_t seed);

/// Complement shape (K_{p1,q1} u ... u K_{pk,qk}) v K_r.
struct Rank2Decomposition {
  std::vector<std::pair<std::size_t, std::size_t>> parts;  // (p_i, q_i), p_i >= q_i, sorted descending
  std::size_t r = 0;
  bool all_q_positive = false;
  // Vertex classes in the recognised graph, aligned with parts.
  std::vector<std::vector<Vertex>> s_classes;
  std::vector<std::vector<Vertex>> t_classes;
  std::vector<Vertex> universal;
};

std::optional<Rank2Decomposition> recognize_rank2(const Graph& g);

struct Rank2Matrix {
  SymMatrix matrix;
  long a = 0;  // the double nonzero eigenvalue, sum of i^2 + 1
};

/// Gram matrix of the two-dimensional vectors (i,1)/sqrt(p_i) on S_i,
/// (1,-i)/sqrt(q_i) on T_i and 0 on the r universal vertices. Vertices are laid
/// out S_1, T_1, S_2, T_2, ..., then the r zeros. Entries are exact whenever
/// every product p_i p_j, p_i q_j, q_i q_j involved is a perfect square.
Rank2Matrix rank2_realize(const std::vector<std::pair<std::size_t, std::size_t>>& parts, std::size_t r);

/// The same Gram matrix laid out on the vertices of a recognised graph.
Rank2Matrix rank2_realize(const Rank2Decomposition& d, std::size_t order);

/// Two-dimensional tight frame whose Gram matrix has pattern g, found by
/// seeded descent with restarts. Works for any order; the Gram matrix has
/// spectrum {a, a, 0, ..., 0}.
std::optional<SymMatrix> find_tight_frame(const Graph& g, std::uint64_t seed, int restarts = 50,
                                          int steps = 5000);

/// find_tight_frame wrapped as a certificate; empty for odd orders or when no
/// frame is found.
std::optional<CertifiedMatrix> frame_realize(const Graph& g, std::uint64_t seed);

}  // namespace evenspec
