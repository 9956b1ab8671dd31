#include <doctest.h>

#include <cmath>
#include <algorithm>
#include <numeric>
#include <random>

#include "evenspec/canonical.hpp"
#include "evenspec/constructions.hpp"
#include "evenspec/eigen.hpp"
#include "example_graphs.hpp"
#include "golden_examples.hpp"
#include "oracles.hpp"

using namespace evenspec;

namespace {

using Parts = std::vector<std::pair<std::size_t, std::size_t>>;

using golden::kS;
using golden::max_entry_diff;

bool isomorphic(const Graph& a, const Graph& b) { return canonical_label(a) == canonical_label(b); }

SymMatrix random_symmetric(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> d(-2, 2);
  SymMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m.set(i, j, d(rng));
  return m;
}

std::vector<double> concat(std::vector<double> a, const std::vector<double>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

TEST_CASE("skew pair on the 2x2 swap matrix gives a square C4 matrix") {
  auto a = SymMatrix::from_exact_rows({{0, 1}, {1, 0}});
  SymMatrix m = skew_pair(a, std::vector<Rational>{-1});
  CHECK(m.is_exact());
  CHECK(pattern_of(m, kPatternTol) == cycle_graph(4));
  const double r2 = std::sqrt(2.0);
  CHECK(oracle::max_sorted_diff(eigenvalues(m), {-r2, -r2, r2, r2}) < 1e-12);
  CHECK(certify_square(m).is_square);
  CHECK_THROWS_AS(skew_pair(a, std::vector<double>{1, 2}), ConstructionError);
}

TEST_CASE("skew pair with zero skew part doubles the spectrum") {
  std::mt19937_64 rng(71);
  SymMatrix a = random_symmetric(3, rng);
  SymMatrix m = skew_pair(a, std::vector<double>{0, 0, 0});
  auto e = eigenvalues(a);
  CHECK(oracle::max_sorted_diff(eigenvalues(m), concat(e, e)) < 1e-12);
}

TEST_CASE("skew pair of a path with the corner skew entry is a 6-cycle") {
  auto path = SymMatrix::from_exact_rows({{0, 1, 0}, {1, 0, 1}, {0, 1, 0}});
  // S = E_31 - E_13: strict upper entries (0,1), (0,2), (1,2).
  SymMatrix m = skew_pair(path, std::vector<Rational>{0, -1, 0});
  CHECK(pattern_of(m, kPatternTol) == cycle_graph(6));
  CHECK(certify_square(m).is_square);
}

TEST_CASE("skew pair spectrum doubling property") {
  std::mt19937_64 rng(73);
  std::uniform_real_distribution<double> d(-2, 2);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    SymMatrix a = random_symmetric(n, rng);
    std::vector<double> s(n * (n - 1) / 2);
    for (double& x : s) x = d(rng);
    auto e = eigenvalues(skew_pair(a, s));
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(e[2 * i + 1] - e[2 * i]) < 1e-9);
  }
}

TEST_CASE("cycle matrices") {
  auto c4 = cycle_matrix(4);
  const double r2 = std::sqrt(2.0);
  CHECK(c4.graph == cycle_graph(4));
  CHECK(oracle::max_sorted_diff(c4.certificate.eigenvalues, {-r2, -r2, r2, r2}) < 1e-12);
  CHECK(c4.certificate.mode == CertMode::Exact);
  CHECK(c4.certificate.root == RatPoly({-2, 0, 1}));

  for (std::size_t order = 6; order <= 12; order += 2) {
    auto c = cycle_matrix(order);
    CHECK(c.graph == cycle_graph(order));
    CHECK(c.certificate.is_square);
    CHECK(certify_spectrum(c.certificate.eigenvalues, 1e-10).is_square);
    CHECK(verify(c));
  }
  CHECK_THROWS_AS(cycle_matrix(3), ConstructionError);
  CHECK_THROWS_AS(cycle_matrix(2), ConstructionError);
  CHECK_THROWS_AS(cycle_matrix(7), ConstructionError);
}

TEST_CASE("Kronecker products") {
  std::mt19937_64 rng(79);
  SymMatrix b = random_symmetric(3, rng);
  auto e = eigenvalues(b);
  CHECK(oracle::max_sorted_diff(eigenvalues(kron(SymMatrix::identity(2), b)), concat(e, e)) < 1e-12);

  // Pattern [0 *; * *] and the full 2x2 pattern against the 4-cycle matrix.
  auto c = cycle_matrix(4).matrix;
  auto half = SymMatrix::from_exact_rows({{0, 1}, {1, 1}});
  auto full = SymMatrix::from_exact_rows({{2, 1}, {1, 3}});
  Graph half_loop = complete_graph(2);
  half_loop.set_loop(1);
  Graph both_loops = complete_graph(2);
  both_loops.set_loop(0);
  both_loops.set_loop(1);

  SymMatrix first = kron(half, c);
  CHECK(pattern_of(first, kPatternTol) == tensor_graph(half_loop, cycle_graph(4)));
  CHECK(certify_square(first).is_square);
  SymMatrix second = kron(full, c);
  CHECK(pattern_of(second, kPatternTol) == tensor_graph(both_loops, cycle_graph(4)));
  CHECK(certify_square(second).is_square);
  CHECK(first.is_exact());

  // With a zero-diagonal second factor the product is two disjoint 4-cycles.
  SymMatrix swapped = kron(c, SymMatrix::from_exact_rows({{0, 1}, {1, 0}}));
  CHECK(certify_square(swapped).is_square);
  CHECK(isomorphic(pattern_of(swapped, kPatternTol), disjoint_union(cycle_graph(4), cycle_graph(4))));
}

TEST_CASE("Kronecker spectrum is the pairwise product") {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 100; ++trial) {
    SymMatrix a = random_symmetric(1 + rng() % 4, rng);
    SymMatrix b = random_symmetric(1 + rng() % 4, rng);
    std::vector<double> products;
    for (double x : eigenvalues(a))
      for (double y : eigenvalues(b)) products.push_back(x * y);
    CHECK(oracle::max_sorted_diff(eigenvalues(kron(a, b)), products) < 1e-8);
  }
}

TEST_CASE("gluing through an eigenpair: the three worked 6x6 examples") {
  for (const auto& c : golden::golden_cases()) {
    CAPTURE(c.name);
    for (const auto& step : c.steps) CHECK(max_entry_diff(step.got, step.want) < 1e-12);
    CHECK(oracle::max_sorted_diff(eigenvalues(c.steps.back().want), c.spectrum) < 1e-10);
  }
  // The half-integer example's intermediate 4x4 block.
  CHECK(oracle::max_sorted_diff(eigenvalues(golden::golden_cases()[0].steps[0].got), {2, -1, 0.5, 0.5}) < 1e-10);
}

TEST_CASE("gluing a 1x1 block leaves the matrix unchanged") {
  auto a = SymMatrix::from_exact_rows({{1, 2}, {2, 3}});
  auto j = hs_join(a, SymMatrix::from_exact_rows({{3}}), std::vector<double>{1.0}, 3.0);
  CHECK(j.matrix.is_exact());
  CHECK(j.matrix.exact_upper() == a.exact_upper());
}

TEST_CASE("gluing checks its contract") {
  auto a = SymMatrix::from_rows({{1, 1}, {1, 2}});
  auto b = SymMatrix::from_rows({{2, 0}, {0, 5}});
  CHECK_NOTHROW(hs_join(a, b, std::vector<double>{1, 0}, 2.0));
  CHECK_THROWS_AS(hs_join(a, b, std::vector<double>{1, 0}, 5.0), ConstructionError);  // diagonal
  CHECK_THROWS_AS(hs_join(a, b, std::vector<double>{0.5, 0}, 2.0), ConstructionError);  // not unit
  CHECK_THROWS_AS(hs_join(a, b, std::vector<double>{0, 1}, 2.0), ConstructionError);  // not an eigenvector
  CHECK_THROWS_AS(hs_join(a, b, std::vector<double>{1}, 2.0), ConstructionError);
}

TEST_CASE("gluing spectrum and eigenvector property") {
  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 5, m = 1 + rng() % 5;
    SymMatrix b = random_symmetric(m, rng);
    auto bd = eigen_decompose(b);
    const std::size_t pick = rng() % m;
    const double mu = bd.values[pick];
    SymMatrix a = random_symmetric(n, rng);
    a.set(n - 1, n - 1, mu);
    HsJoin j = hs_join(a, b, bd.vectors[pick], mu);

    std::vector<double> want = eigenvalues(a);
    for (std::size_t i = 0; i < m; ++i)
      if (i != pick) want.push_back(bd.values[i]);
    CHECK(oracle::max_sorted_diff(eigenvalues(j.matrix), want) < 1e-8);

    // Lifted eigenvectors stay eigenvectors.
    auto ad = eigen_decompose(a);
    auto check_pair = [&](const std::vector<double>& x, double lambda) {
      auto cx = j.matrix.multiply(x);
      double r = 0;
      for (std::size_t i = 0; i < x.size(); ++i) r = std::max(r, std::abs(cx[i] - lambda * x[i]));
      CHECK(r < 1e-9);
    };
    check_pair(j.lift_a(ad.vectors[0]), ad.values[0]);
    if (m > 1) {
      const std::size_t other = (pick + 1) % m;
      check_pair(j.lift_b(bd.vectors[other]), bd.values[other]);
    }
  }
}

TEST_CASE("clique blow-up") {
  auto c4 = cycle_matrix(4);
  auto same = clique_blowup(c4, 2, 0);
  CHECK(same.graph == cycle_graph(4));
  CHECK(same.matrix(2, 2) == doctest::Approx(1.0));

  auto tripled = clique_blowup(c4, 1, 1);
  // 0 and 2 were the neighbours of 1; the clique sits at 1, 2, 3 and old 2, 3 move to 4, 5.
  Graph want(6, {{1, 2}, {1, 3}, {2, 3}, {0, 1}, {0, 2}, {0, 3}, {4, 1}, {4, 2}, {4, 3}, {4, 5}, {5, 0}});
  CHECK(tripled.graph == want);
  CHECK(tripled.certificate.is_square);

  auto k4 = even_complete(4, {1, 2});
  auto k6 = clique_blowup(k4, 0, 1);
  CHECK(k6.graph == complete_graph(6));
  CHECK(k6.certificate.is_square);

  CHECK_THROWS_AS(clique_blowup(c4, 4, 1), ConstructionError);
  CertifiedMatrix fake = c4;
  fake.certificate.is_square = false;
  CHECK_THROWS_AS(clique_blowup(fake, 0, 1), ConstructionError);
}

TEST_CASE("clique blow-up adds 2m zeros to the shifted spectrum") {
  std::mt19937_64 rng(97);
  std::vector<CertifiedMatrix> inputs = {cycle_matrix(4), cycle_matrix(6), even_complete(4, {1, -2}),
                                         even_complete(6, {0, 1, 3})};
  for (int trial = 0; trial < 100; ++trial) {
    const auto& c = inputs[trial % inputs.size()];
    const Vertex v = rng() % c.matrix.order();
    const std::size_t m = rng() % 3;
    auto out = clique_blowup(c, v, m);
    const double shift = static_cast<double>(2 * m + 1) - c.matrix(v, v);
    std::vector<double> want;
    for (double l : c.certificate.eigenvalues) want.push_back(l + shift);
    want.insert(want.end(), 2 * m, 0.0);
    CHECK(oracle::max_sorted_diff(out.certificate.eigenvalues, want) < 1e-8);
  }
}

TEST_CASE("pq join") {
  SymMatrix c = pq_join(SymMatrix::from_rows({{2}}), SymMatrix::from_rows({{0}}));
  CHECK(max_entry_diff(c, SymMatrix::from_rows({{1, 1}, {1, 1}})) == 0.0);
  CHECK(oracle::max_sorted_diff(eigenvalues(c), {0, 2}) < 1e-12);
  CHECK_THROWS_AS(pq_join(SymMatrix::from_rows({{1}}), SymMatrix::from_rows({{0}})), ConstructionError);
  CHECK_THROWS_AS(pq_join(SymMatrix::from_rows({{2}}), SymMatrix::from_rows({{1}})), ConstructionError);
}

TEST_CASE("pq join spectrum is the multiset union") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 100; ++trial) {
    SymMatrix a = random_symmetric(1 + rng() % 5, rng);
    SymMatrix b = random_symmetric(1 + rng() % 5, rng);
    a.set(a.order() - 1, a.order() - 1, 2.0);
    b.set(b.order() - 1, b.order() - 1, 0.0);
    CHECK(oracle::max_sorted_diff(eigenvalues(pq_join(a, b)), concat(eigenvalues(a), eigenvalues(b))) < 1e-8);
  }
}

TEST_CASE("pq join equals two successive gluings") {
  // D glues a onto the all-ones 2x2 block through eigenvalue 2; C glues D onto
  // b's last vertex through the zero eigenvector of D's corner.
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + rng() % 4, m = 1 + rng() % 4;
    SymMatrix a = random_symmetric(n, rng), b = random_symmetric(m, rng);
    a.set(n - 1, n - 1, 2.0);
    b.set(m - 1, m - 1, 0.0);
    auto ones = SymMatrix::from_rows({{1, 1}, {1, 1}});
    SymMatrix d = hs_join(a, ones, std::vector<double>{kS, kS}, 2.0).matrix;  // A1, c1, c2
    // Zero eigenvector of D: (0, ..., 0, 1/sqrt2, -1/sqrt2).
    std::vector<double> u(n + 1, 0.0);
    u[n - 1] = kS;
    u[n] = -kS;
    SymMatrix c = hs_join(b, d, u, 0.0).matrix;  // B1, A1, c1, c2
    CHECK(max_entry_diff(c, pq_join(a, b)) < 1e-14);
  }
}

TEST_CASE("graph pq join") {
  auto c4 = cycle_matrix(4);
  auto joined = graph_pq_join(c4, 0, c4, 0);
  CHECK(joined.matrix.order() == 8);
  CHECK(isomorphic(joined.graph, examples::pq_joined_squares()));
  CHECK(joined.certificate.is_square);

  auto mixed = graph_pq_join(even_complete(4, {1, 2}), 1, c4, 3);
  CHECK(mixed.graph.order() == 8);
  CHECK(mixed.certificate.is_square);
  CHECK(is_connected(mixed.graph));

  CertifiedMatrix scalar = certify_matrix(SymMatrix::identity(2).affine_exact(3, 0), "scalar", "");
  CHECK_THROWS_AS(graph_pq_join(scalar, 0, c4, 0), ConstructionError);
  CHECK_THROWS_AS(graph_pq_join(c4, 0, scalar, 0), ConstructionError);
}

TEST_CASE("complete-graph realisations") {
  auto base = realize_complete({{3, 1}, {}});
  CHECK(max_entry_diff(base.matrix, SymMatrix::from_rows({{2, 1}, {1, 2}})) < 1e-15);
  CHECK_THROWS_AS(realize_complete({{1, 1}, {}}), ConstructionError);
  CHECK_THROWS_AS(realize_complete({{1}, {}}), ConstructionError);
  CHECK_THROWS_AS(realize_complete({{3, 1, 2}, {true, false, false}}), ConstructionError);

  auto r = realize_complete({{5, 1, 1, 1}, {}});
  CHECK(pattern_of(r.matrix, 1e-10) == complete_graph(4));
  CHECK(oracle::max_sorted_diff(eigenvalues(r.matrix), {1, 1, 1, 5}) < 1e-8);
  for (double x : r.eigenvector) CHECK(std::abs(x) > 1e-8);
  // A - I has rank one, so partial supports are impossible here.
  CHECK_THROWS_AS(realize_complete({{5, 1, 1, 1}, {true, true, false, false}}), ConstructionError);

  // Decreasing first pair is fine too.
  auto flipped = realize_complete({{1, 3, 2}, {false, true, true}});
  CHECK(oracle::max_sorted_diff(eigenvalues(flipped.matrix), {1, 2, 3}) < 1e-8);
  CHECK(flipped.eigenvector[0] == 0.0);
}

TEST_CASE("complete-graph realisations on random targets") {
  std::mt19937_64 rng(107);
  std::uniform_int_distribution<int> value(-4, 4);
  int done = 0;
  while (done < 100) {
    const std::size_t n = 2 + rng() % 5;
    std::vector<double> vals(n);
    for (double& v : vals) v = value(rng) * 0.5;
    if (vals[0] == vals[1]) continue;
    std::vector<bool> support(n, false);
    std::size_t k = 0;
    while (k < 2) {
      k = 0;
      for (std::size_t i = 0; i < n; ++i) {
        support[i] = rng() % 2;
        k += support[i];
      }
    }
    const bool rest_equal = std::all_of(vals.begin() + 1, vals.end(), [&](double x) { return x == vals[1]; });
    if (rest_equal && k < n) {
      CHECK_THROWS_AS(realize_complete({vals, support}), ConstructionError);
      continue;
    }
    auto r = realize_complete({vals, support});
    CHECK(oracle::max_sorted_diff(eigenvalues(r.matrix), vals) < 1e-8);
    CHECK(pattern_of(r.matrix, 1e-10) == complete_graph(n));
    auto ax = r.matrix.multiply(r.eigenvector);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(std::abs(ax[i] - vals[0] * r.eigenvector[i]) < 1e-8);
      if (support[i]) {
        CHECK(std::abs(r.eigenvector[i]) > 1e-8);
      } else {
        CHECK(std::abs(r.eigenvector[i]) < 1e-12);
      }
    }
    ++done;
  }
}

TEST_CASE("even complete graphs") {
  auto k4 = even_complete(4, {1, 2});
  CHECK(k4.graph == complete_graph(4));
  CHECK(oracle::max_sorted_diff(k4.certificate.eigenvalues, {1, 1, 2, 2}) < 1e-10);
  auto k6 = even_complete(6, {0, 1, 3});
  CHECK(k6.graph == complete_graph(6));
  CHECK(k6.certificate.is_square);
  auto k8 = even_complete(8, {-1, 2, 2, 5});
  CHECK(k8.graph == complete_graph(8));
  CHECK(k8.certificate.is_square);
  CHECK_THROWS_AS(even_complete(2, {1}), ConstructionError);
  CHECK_THROWS_AS(even_complete(5, {1, 2}), ConstructionError);
  CHECK_THROWS_AS(even_complete(4, {1, 1}), ConstructionError);
}

TEST_CASE("joining a complete block") {
  // C4 adjacency plus a vertex joined to all, spectrum {1 +- sqrt5, -2, 0, 0}.
  auto a = SymMatrix::from_rows({{0, 1, 0, 1, 1}, {1, 0, 1, 0, 1}, {0, 1, 0, 1, 1}, {1, 0, 1, 0, 1}, {1, 1, 1, 1, 0}});
  const double r5 = std::sqrt(5.0);
  CHECK(oracle::max_sorted_diff(eigenvalues(a), {1 + r5, 1 - r5, -2, 0, 0}) < 1e-10);
  auto c = join_complete_block(a, {1 + r5, 1 - r5, -2});
  CHECK(c.graph == join(cycle_graph(4), complete_graph(4)));
  CHECK(oracle::max_sorted_diff(c.certificate.eigenvalues, {1 + r5, 1 + r5, 1 - r5, 1 - r5, -2, -2, 0, 0}) < 1e-8);

  // Extra pairs ride along.
  auto c2 = join_complete_block(a, {1 + r5, 1 - r5, -2, 7, 7});
  CHECK(c2.graph == join(cycle_graph(4), complete_graph(6)));
  CHECK(c2.certificate.is_square);

  auto k4 = join_with_clique(Graph(1), 5);
  CHECK(k4.graph == complete_graph(4));
  auto p3 = join_with_clique(path_graph(3), 5);
  CHECK(p3.graph == join(path_graph(3), complete_graph(5)));
  CHECK(p3.certificate.is_square);
  auto again = join_with_clique(path_graph(3), 5);
  CHECK(max_entry_diff(again.matrix, p3.matrix) == 0.0);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Graph g = seed % 2 ? cycle_graph(5) : Graph(3, {{0, 1}});
    CHECK(join_with_clique(g, seed).graph == join(g, complete_graph(g.order() + 2)));
  }
}

TEST_CASE("rank-2 realisations") {
  auto c4 = rank2_realize(Parts{{1, 1}, {1, 1}}, 0);
  CHECK(c4.a == 7);
  CHECK(c4.matrix.is_exact());
  CHECK(isomorphic(pattern_of(c4.matrix, kPatternTol), cycle_graph(4)));
  CHECK(charpoly_exact(c4.matrix) == RatPoly::from_roots({0, 0, 7, 7}));

  auto e3 = rank2_realize(Parts{{1, 1}}, 1);
  CHECK(e3.matrix.exact_upper() == SymMatrix::from_exact_rows({{2, 0, 0}, {0, 2, 0}, {0, 0, 0}}).exact_upper());
  CHECK(pattern_of(e3.matrix, kPatternTol) == empty_graph(3));

  auto k2k1 = rank2_realize(Parts{{2, 1}}, 0);
  CHECK(k2k1.matrix.exact_upper() ==
        SymMatrix::from_exact_rows({{1, 1, 0}, {1, 1, 0}, {0, 0, 2}}).exact_upper());
  CHECK(oracle::max_sorted_diff(eigenvalues(k2k1.matrix), {2, 2, 0}) < 1e-12);

  CHECK_THROWS_AS(rank2_realize(Parts{{1, 0}}, 0), ConstructionError);
  CHECK_THROWS_AS(rank2_realize(Parts{}, 2), ConstructionError);
}

TEST_CASE("rank-2 realisation property") {
  std::mt19937_64 rng(109);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::pair<std::size_t, std::size_t>> parts;
    const std::size_t k = 1 + rng() % 3;
    for (std::size_t i = 0; i < k; ++i) parts.emplace_back(1 + rng() % 3, 1 + rng() % 3);
    const std::size_t r = rng() % 2;
    auto got = rank2_realize(parts, r);
    long a = 0;
    for (std::size_t i = 1; i <= k; ++i) a += static_cast<long>(i * i + 1);
    CHECK(got.a == a);
    auto e = eigenvalues(got.matrix);
    const std::size_t n = e.size();
    std::vector<double> mags;
    for (double x : e) mags.push_back(std::abs(x));
    std::sort(mags.begin(), mags.end());
    if (n >= 3) CHECK(mags[n - 3] < 1e-10);
    CHECK(std::abs(e[n - 1] - a) < 1e-10 * a);
    CHECK(std::abs(e[n - 2] - a) < 1e-10 * a);
    if (got.matrix.is_exact()) {
      std::vector<Rational> roots(n - 2, Rational(0));
      roots.push_back(a);
      roots.push_back(a);
      CHECK(charpoly_exact(got.matrix) == RatPoly::from_roots(roots));
    }

    // The pattern is the complement of the disjoint bipartite parts joined with K_r.
    Graph h(n);
    Vertex base = 0;
    for (auto [p, q] : parts) {
      for (Vertex i = 0; i < p; ++i)
        for (Vertex j = 0; j < q; ++j) h.add_edge(base + i, base + p + j);
      base += p + q;
    }
    for (Vertex u = base; u < n; ++u)
      for (Vertex v = 0; v < n; ++v)
        if (u != v && !h.adjacent(u, v)) h.add_edge(u, v);
    CHECK(pattern_of(got.matrix, kPatternTol) == complement(h));
  }
}

TEST_CASE("recognising the rank-2 complement shape") {
  auto c4 = recognize_rank2(cycle_graph(4));
  REQUIRE(c4.has_value());
  CHECK(c4->parts == std::vector<std::pair<std::size_t, std::size_t>>{{1, 1}, {1, 1}});
  CHECK(c4->r == 0);
  CHECK(c4->all_q_positive);

  auto diamond = recognize_rank2(examples::diamond());
  REQUIRE(diamond.has_value());
  CHECK(diamond->parts == std::vector<std::pair<std::size_t, std::size_t>>{{1, 1}, {1, 0}, {1, 0}});
  CHECK_FALSE(diamond->all_q_positive);

  CHECK_FALSE(recognize_rank2(path_graph(4)).has_value());
  CHECK_FALSE(recognize_rank2(cycle_graph(5)).has_value());  // complement is C5

  auto k4 = recognize_rank2(complete_graph(4));
  REQUIRE(k4.has_value());
  CHECK(k4->parts.size() == 4);

  // K2 plus an isolated vertex: the complement is a star, one (2,1) part.
  auto star = recognize_rank2(Graph(3, {{0, 1}}));
  REQUIRE(star.has_value());
  CHECK(star->parts == std::vector<std::pair<std::size_t, std::size_t>>{{2, 1}});
  CHECK(star->r == 0);
  CHECK(star->all_q_positive);

  for (const auto& g : examples::rank2_family()) {
    auto d = recognize_rank2(g);
    REQUIRE(d.has_value());
    if (d->all_q_positive) {
      auto m = rank2_realize(*d, g.order());
      CHECK(pattern_of(m.matrix, kPatternTol) == g);
      CHECK(certify_square(m.matrix).is_square);
    }
  }
}

TEST_CASE("recognised decompositions realise the graph they came from") {
  std::mt19937_64 rng(113);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 7;
    Graph g(n);
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = i + 1; j < n; ++j)
        if (rng() % 10 < 7) g.add_edge(i, j);
    auto d = recognize_rank2(g);
    if (!d || !d->all_q_positive) continue;
    auto m = rank2_realize(*d, n);
    CHECK(pattern_of(m.matrix, kPatternTol) == g);
  }
}

TEST_CASE("tight frames") {
  auto k4 = frame_realize(complete_graph(4), 1);
  REQUIRE(k4.has_value());
  CHECK(k4->graph == complete_graph(4));
  const auto& e = k4->certificate.eigenvalues;
  CHECK(std::abs(e[0]) < 1e-10);
  CHECK(std::abs(e[1]) < 1e-10);
  CHECK(std::abs(e[3] - e[2]) < 1e-10 * e[3]);

  auto diamond = frame_realize(examples::diamond(), 1);
  REQUIRE(diamond.has_value());
  CHECK(diamond->graph == examples::diamond());

  auto k3 = find_tight_frame(complete_graph(3), 1);
  REQUIRE(k3.has_value());
  auto e3 = eigenvalues(*k3);
  CHECK(std::abs(e3[0]) < 1e-10);
  CHECK(std::abs(e3[2] - e3[1]) < 1e-10 * e3[2]);
  CHECK_FALSE(frame_realize(complete_graph(3), 1).has_value());

  CHECK_FALSE(find_tight_frame(path_graph(3), 1).has_value());
  CHECK_FALSE(find_tight_frame(path_graph(4), 1).has_value());

  // Members 6 and 10 have complement K_{1,4} u K_1 and K_{3,2} u K_1. The lone
  // vertex must avoid both perpendicular lines of the other part, which leaves
  // VtV with a nonzero off-diagonal entry, so no frame exists.
  const auto family = examples::rank2_family();
  for (std::size_t i = 0; i < family.size(); ++i) {
    auto f = frame_realize(family[i], 3);
    if (i == 6 || i == 10) {
      CHECK_FALSE(f.has_value());
      continue;
    }
    REQUIRE(f.has_value());
    CHECK(f->graph == family[i]);
  }
}

TEST_CASE("square verdicts survive shifts and scalings of certificates") {
  std::vector<CertifiedMatrix> certs = {cycle_matrix(6), even_complete(4, {1, 3}),
                                        clique_blowup(cycle_matrix(4), 0, 1),
                                        graph_pq_join(cycle_matrix(4), 0, cycle_matrix(4), 1)};
  for (const auto& c : certs) {
    for (auto [alpha, beta] : std::vector<std::pair<double, double>>{{2, 0}, {-1, 1}, {0.1, -3}}) {
      CHECK(certify_square(c.matrix.affine(alpha, beta)).is_square);
      CHECK(pattern_of(c.matrix.affine(alpha, beta), kPatternTol) == c.graph);
    }
  }
}
