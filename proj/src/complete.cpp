#include <algorithm>
#include <cmath>
#include <random>

#include "evenspec/constructions.hpp"
#include "evenspec/eigen.hpp"

namespace evenspec {

namespace {

struct Built {
  SymMatrix m;
  std::vector<double> x;  // eigenvector for the first value
};

struct Retry {};

// 2x2 member of S(K_2) with spectrum {v0, v1} and diagonal entry d between them.
// Returns the matrix and unit eigenvectors for v0 and v1.
struct Base2 {
  SymMatrix m;
  std::vector<double> for_v0, for_v1;
};

Base2 base2(double v0, double v1, double t) {
  const double d = v1 + t * (v0 - v1);
  const double s = std::sqrt(-(v0 - d) * (v1 - d));
  SymMatrix m = SymMatrix::from_rows({{v0 + v1 - d, s}, {s, d}});
  const double nx = std::hypot(v0 - d, s);
  std::vector<double> x0 = {(v0 - d) / nx, s / nx};
  std::vector<double> x1 = {-x0[1], x0[0]};
  return {std::move(m), std::move(x0), std::move(x1)};
}

std::vector<double> permute_vector(const std::vector<double>& x, const std::vector<std::size_t>& perm) {
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[perm[i]] = x[i];
  return out;
}

// Diagonal position (restricted to nonzero eigenvector entries when asked)
// farthest from `avoid`, or throw Retry on a collision.
std::size_t pick_pivot(const Built& b, double avoid, bool need_nonzero, double gap) {
  std::size_t best = b.m.order();
  double best_dist = gap;
  for (std::size_t p = 0; p < b.m.order(); ++p) {
    if (need_nonzero && b.x[p] == 0.0) continue;
    const double dist = std::abs(b.m(p, p) - avoid);
    if (dist > best_dist) {
      best = p;
      best_dist = dist;
    }
  }
  if (best == b.m.order()) throw Retry{};
  return best;
}

Built build(const std::vector<double>& vals, std::size_t k, double t, double gap) {
  const std::size_t n = vals.size();
  if (n == 1) return {SymMatrix::from_rows({{vals[0]}}), {1.0}};
  if (n == 2) {
    Base2 b = base2(vals[0], vals[1], t);
    return {std::move(b.m), std::move(b.for_v0)};
  }
  if (k >= 3) {
    // Append vals[n-1] to a realisation of the rest with one fewer nonzero.
    Built prev = build(std::vector<double>(vals.begin(), vals.end() - 1), k - 1, t, gap);
    const double next = vals[n - 1];
    const std::size_t p = pick_pivot(prev, next, true, gap);
    const auto perm = move_to_last(n - 1, p);
    SymMatrix mp = prev.m.permuted(perm);
    const double d = mp(n - 2, n - 2);
    Base2 b = base2(d, next, t);
    HsJoin j = hs_join(mp, b.m, b.for_v0, d);
    return {std::move(j.matrix), j.lift_a(permute_vector(prev.x, perm))};
  }
  // k == 2: realise vals[1..] with full support, then attach vals[0] through a
  // 2x2 block; its eigenvector lives on that block alone.
  std::vector<double> rest(vals.begin() + 1, vals.end());
  Built prev = build(rest, rest.size(), t, gap);
  const std::size_t p = pick_pivot(prev, vals[0], false, gap);
  SymMatrix mp = prev.m.permuted(move_to_last(n - 1, p));
  const double d = mp(n - 2, n - 2);
  Base2 b = base2(d, vals[0], t);
  HsJoin j = hs_join(mp, b.m, b.for_v0, d);
  return {std::move(j.matrix), j.lift_b(b.for_v1)};
}

}  // namespace

CompleteRealization realize_complete(const SpectrumTarget& target) {
  const std::size_t n = target.values.size();
  if (n < 2) throw ConstructionError("realize_complete needs at least two eigenvalues");
  const auto [lo, hi] = std::minmax_element(target.values.begin(), target.values.end());
  const double scale = std::max(1.0, *hi - *lo);
  if (std::abs(target.values[0] - target.values[1]) <= 1e-12 * scale) {
    throw ConstructionError("realize_complete: the first two eigenvalues must differ");
  }
  std::vector<bool> support = target.support.empty() ? std::vector<bool>(n, true) : target.support;
  if (support.size() != n) throw ConstructionError("realize_complete: support has the wrong length");
  const auto k = static_cast<std::size_t>(std::count(support.begin(), support.end(), true));
  if (k < 2) throw ConstructionError("realize_complete: support needs at least two nonzero positions");

  std::vector<double> vals = target.values;
  if (k < n) {
    // The full-support sub-realisation starts from vals[1], vals[2]; they must differ.
    auto other = std::find_if(vals.begin() + 2, vals.end(), [&](double x) { return std::abs(x - vals[1]) > 1e-12 * scale; });
    if (std::abs(vals[2] - vals[1]) <= 1e-12 * scale) {
      if (other == vals.end()) {
        throw ConstructionError(
            "realize_complete: with all eigenvalues but the first equal, the eigenvector must have full support");
      }
      std::iter_swap(vals.begin() + 2, other);
    }
  }

  const double gap = 1e-9 * scale;
  for (double t : {0.5, 0.3, 0.7, 0.4, 0.6, 0.2, 0.8, 0.35, 0.65, 0.45, 0.55, 0.25, 0.75}) {
    Built b;
    try {
      b = build(vals, k, t, gap);
    } catch (const Retry&) {
      continue;
    } catch (const ConstructionError&) {
      continue;
    }
    // Send the nonzero eigenvector positions onto the requested support.
    std::vector<std::size_t> perm(n);
    std::size_t next_on = 0, next_off = 0;
    std::vector<std::size_t> on, off;
    for (std::size_t i = 0; i < n; ++i) (support[i] ? on : off).push_back(i);
    for (std::size_t i = 0; i < n; ++i) perm[i] = b.x[i] != 0.0 ? on[next_on++] : off[next_off++];
    SymMatrix m = b.m.permuted(perm);
    std::vector<double> x = permute_vector(b.x, perm);
    double norm = 0;
    for (double xi : x) norm += xi * xi;
    norm = std::sqrt(norm);
    for (double& xi : x) xi /= norm;

    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      for (std::size_t j = i + 1; j < n; ++j)
        if (std::abs(m(i, j)) <= 1e-10) ok = false;
      if (support[i] && std::abs(x[i]) <= 1e-8) ok = false;
    }
    std::vector<double> want = target.values;
    std::sort(want.begin(), want.end());
    const auto got = eigenvalues(m);
    for (std::size_t i = 0; i < n && ok; ++i)
      if (std::abs(got[i] - want[i]) >= 1e-8 * std::max(1.0, std::max(std::abs(*lo), std::abs(*hi)))) ok = false;
    if (ok) return {std::move(m), std::move(x)};
  }
  throw ConstructionError("realize_complete: no admissible diagonal choice found");
}

CertifiedMatrix even_complete(std::size_t order, const std::vector<double>& pair_values) {
  if (order < 4 || order % 2 != 0) {
    throw ConstructionError("even_complete needs an even order >= 4; a 2x2 square matrix is scalar");
  }
  const std::size_t m = order / 2;
  if (pair_values.size() != m) throw ConstructionError("even_complete needs order/2 pair values");
  if (pair_values[0] == pair_values[1]) throw ConstructionError("even_complete: the first two pair values must differ");
  std::vector<double> vals = {pair_values[0], pair_values[1], pair_values[0], pair_values[1]};
  for (std::size_t i = 2; i < m; ++i) vals.insert(vals.end(), 2, pair_values[i]);
  std::string params = "order=" + std::to_string(order) + ";pairs=";
  for (std::size_t i = 0; i < m; ++i) params += (i ? "," : "") + std::to_string(pair_values[i]);
  return certify_matrix(realize_complete({vals, {}}).matrix, "even_complete", params);
}

CertifiedMatrix join_complete_block(const SymMatrix& a, const std::vector<double>& completion) {
  const std::size_t n = a.order();
  if (n == 0) throw ConstructionError("join_complete_block needs a nonempty matrix");
  if (completion.empty()) throw ConstructionError("join_complete_block needs completion values");
  const double mu = a(n - 1, n - 1);
  std::vector<double> vals = completion;
  // Farthest from mu first, so the first two target values differ.
  std::stable_sort(vals.begin(), vals.end(),
                   [mu](double x, double y) { return std::abs(x - mu) > std::abs(y - mu); });
  vals.insert(vals.begin(), mu);
  CompleteRealization block = realize_complete({vals, {}});
  HsJoin j = hs_join(a, block.matrix, block.eigenvector, mu);
  return certify_matrix(std::move(j.matrix), "join_complete_block",
                        "order=" + std::to_string(n) + ";block=" + std::to_string(vals.size()));
}

CertifiedMatrix join_with_clique(const Graph& g, std::uint64_t seed) {
  const std::size_t n = g.order() + 1;
  if (g.order() == 0) throw ConstructionError("join_with_clique needs a graph with at least one vertex");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> entry(-2.0, 2.0);
  auto off_diagonal = [&] {
    double x;
    do x = entry(rng);
    while (std::abs(x) < 0.1);
    return x;
  };
  const Graph want = join(g, complete_graph(n + 1));
  for (int attempt = 0; attempt < 20; ++attempt) {
    SymMatrix a(n);
    for (std::size_t i = 0; i < n; ++i) {
      a.set(i, i, entry(rng));
      for (std::size_t j = i + 1; j < n; ++j) {
        if (j == n - 1 || g.adjacent(i, j)) a.set(i, j, off_diagonal());
      }
    }
    try {
      CertifiedMatrix c = join_complete_block(a, eigenvalues(a));
      if (c.graph != want) continue;
      c.construction = "join_with_clique";
      c.parameters = "n=" + std::to_string(n) + ";seed=" + std::to_string(seed);
      return c;
    } catch (const ConstructionError&) {
      continue;
    }
  }
  throw ConstructionError("join_with_clique: no admissible random draw in 20 attempts");
}

}  // namespace evenspec
