#include "evenspec/search.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <random>

#include "evenspec/eigen.hpp"

namespace evenspec {

namespace {

constexpr double kBand = 1e-4;
constexpr double kInitFloor = 0.1;
constexpr double kStartStep = 0.5;
constexpr double kStopStep = 1e-9;
constexpr double kPolishBelow = 1e-4;
constexpr int kPolishIters = 40;
// A restart ends when its cost fails to drop by 0.1% over this many sweeps.
constexpr int kStallWindow = 200;
constexpr double kStallRatio = 0.999;

// Free entries: the diagonal first, then the edges in Graph::edges() order.
struct Layout {
  std::size_t n = 0;
  std::vector<Edge> edges;

  std::size_t size() const { return n + edges.size(); }
  bool is_edge(std::size_t k) const { return k >= n; }

  SymMatrix build(const std::vector<double>& x) const {
    SymMatrix a(n);
    for (std::size_t i = 0; i < n; ++i) a.set(i, i, x[i]);
    for (std::size_t e = 0; e < edges.size(); ++e) a.set(edges[e].first, edges[e].second, x[n + e]);
    return a;
  }

  std::vector<double> read(const SymMatrix& a) const {
    std::vector<double> x(size());
    for (std::size_t i = 0; i < n; ++i) x[i] = a(i, i);
    for (std::size_t e = 0; e < edges.size(); ++e) x[n + e] = a(edges[e].first, edges[e].second);
    return x;
  }

  bool in_band(const std::vector<double>& x) const {
    for (std::size_t k = n; k < x.size(); ++k)
      if (std::abs(x[k]) < kBand) return true;
    return false;
  }
};

// normalized_pairing_cost on the free entries, with a values-only solver.
class Objective {
 public:
  explicit Objective(const Layout& layout) : layout_(layout), m_(layout.n, layout.n), solver_(layout.n) {}

  double operator()(const std::vector<double>& x) {
    const std::size_t n = layout_.n;
    m_.setZero();
    double tr = 0;
    for (std::size_t i = 0; i < n; ++i) {
      m_(i, i) = x[i];
      tr += x[i];
    }
    for (std::size_t e = 0; e < layout_.edges.size(); ++e) {
      const auto [u, v] = layout_.edges[e];
      m_(u, v) = m_(v, u) = x[n + e];
    }
    solver_.compute(m_, Eigen::EigenvaluesOnly);
    const auto& e = solver_.eigenvalues();
    double cost = 0;
    for (std::size_t i = 0; i + 1 < n; i += 2) cost += (e(i + 1) - e(i)) * (e(i + 1) - e(i));
    if (cost == 0.0) return 0.0;
    const double traceless = m_.squaredNorm() - tr * tr / static_cast<double>(n);
    return cost / std::max(traceless, std::numeric_limits<double>::min());
  }

 private:
  const Layout& layout_;
  Eigen::MatrixXd m_;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver_;
};

// Newton step for the pair conditions: for each consecutive pair (v1, v2)
// ask that v1' dA v1 - v2' dA v2 close the gap and v1' dA v2 stay 0. The
// minimum-norm solution of this linear system converges quadratically near
// a matrix whose spectrum pairs up.
std::vector<double> pair_newton_step(const Layout& layout, const std::vector<double>& x) {
  const auto dec = eigen_decompose(layout.build(x));
  const std::size_t pairs = layout.n / 2, d = layout.size();
  Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(2 * pairs, d);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(2 * pairs);
  for (std::size_t p = 0; p < pairs; ++p) {
    const auto& v1 = dec.vectors[2 * p];
    const auto& v2 = dec.vectors[2 * p + 1];
    for (std::size_t i = 0; i < layout.n; ++i) {
      jac(2 * p, i) = v1[i] * v1[i] - v2[i] * v2[i];
      jac(2 * p + 1, i) = v1[i] * v2[i];
    }
    for (std::size_t e = 0; e < layout.edges.size(); ++e) {
      const auto [u, v] = layout.edges[e];
      jac(2 * p, layout.n + e) = 2 * (v1[u] * v1[v] - v2[u] * v2[v]);
      jac(2 * p + 1, layout.n + e) = v1[u] * v2[v] + v1[v] * v2[u];
    }
    rhs(2 * p) = dec.values[2 * p + 1] - dec.values[2 * p];
  }
  Eigen::VectorXd delta = jac.completeOrthogonalDecomposition().solve(rhs);
  std::vector<double> y = x;
  for (std::size_t k = 0; k < d; ++k) y[k] += delta(k);
  return y;
}

void polish(const Layout& layout, Objective& objective, std::vector<double>& x, double& f, double accept) {
  for (int it = 0; it < kPolishIters && f > accept * 1e-2; ++it) {
    std::vector<double> y = pair_newton_step(layout, x);
    if (layout.in_band(y)) return;
    const double fy = objective(y);
    if (!(fy < f)) return;
    x = std::move(y);
    f = fy;
  }
}

struct RestartOutcome {
  std::vector<double> x;
  double cost;
};

RestartOutcome run_restart(const Graph& g, const Layout& layout, const SearchConfig& cfg, std::uint64_t seed) {
  Objective objective(layout);
  std::vector<double> x = layout.read(random_in_pattern(g, seed, cfg.entry_lo, cfg.entry_hi));
  double f = objective(x);
  double step = kStartStep;
  std::vector<double> history;
  for (int sweep = 0; sweep < cfg.max_iters && f > cfg.accept_cost && step >= kStopStep; ++sweep) {
    history.push_back(f);
    if (sweep >= kStallWindow && f > kStallRatio * history[sweep - kStallWindow]) break;
    bool improved = false;
    for (std::size_t k = 0; k < x.size(); ++k) {
      for (double sign : {1.0, -1.0}) {
        const double old = x[k];
        x[k] = old + sign * step;
        if (layout.is_edge(k) && std::abs(x[k]) < kBand) {
          x[k] = old;
          continue;
        }
        const double fy = objective(x);
        if (fy < f) {
          f = fy;
          improved = true;
          break;
        }
        x[k] = old;
      }
    }
    if (!improved) step *= 0.5;
    if (f < kPolishBelow) polish(layout, objective, x, f, cfg.accept_cost);
  }
  if (f < kPolishBelow) polish(layout, objective, x, f, cfg.accept_cost);
  return {std::move(x), f};
}

}  // namespace

void SearchConfig::validate() const {
  if (restarts <= 0) throw SearchError("restarts must be positive");
  if (max_iters <= 0) throw SearchError("max_iters must be positive");
  if (!(accept_cost > 0)) throw SearchError("accept_cost must be positive");
  if (!(entry_lo < entry_hi)) throw SearchError("entry range is empty");
  if (std::max(std::abs(entry_lo), std::abs(entry_hi)) < kInitFloor) {
    throw SearchError("entry range must reach magnitude 0.1");
  }
}

double pairing_cost(const SymMatrix& a) {
  if (a.order() % 2 != 0) throw SearchError("pairing_cost needs an even order, got " + std::to_string(a.order()));
  const auto e = eigenvalues(a);
  double cost = 0;
  for (std::size_t i = 0; i + 1 < e.size(); i += 2) cost += (e[i + 1] - e[i]) * (e[i + 1] - e[i]);
  return cost;
}

double normalized_pairing_cost(const SymMatrix& a) {
  const double n = static_cast<double>(a.order());
  const double fro = a.frobenius_norm(), tr = a.trace();
  const double traceless = fro * fro - (n > 0 ? tr * tr / n : 0.0);
  const double cost = pairing_cost(a);
  if (cost == 0.0) return 0.0;
  return cost / std::max(traceless, std::numeric_limits<double>::min());
}

SymMatrix random_in_pattern(const Graph& g, std::uint64_t seed, double lo, double hi) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> entry(lo, hi);
  SymMatrix a(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) a.set(i, i, entry(rng));
  for (auto [u, v] : g.edges()) {
    double x;
    do x = entry(rng);
    while (std::abs(x) < kInitFloor);
    a.set(u, v, x);
  }
  return a;
}

SearchResult minimize(const Graph& g, const SearchConfig& cfg) {
  cfg.validate();
  if (g.order() % 2 != 0) throw SearchError("search needs an even order, got " + std::to_string(g.order()));
  const Layout layout{g.order(), g.edges()};
  SearchResult result;
  result.cost = std::numeric_limits<double>::infinity();
  for (int r = 0; r < cfg.restarts; ++r) {
    RestartOutcome out = run_restart(g, layout, cfg, cfg.seed + static_cast<std::uint64_t>(r));
    result.restarts_run = r + 1;
    // Strict comparison keeps the lowest restart index among ties.
    if (out.cost < result.cost) {
      result.cost = out.cost;
      result.best = layout.build(out.x);
      result.restart = r;
    }
    if (result.cost <= cfg.accept_cost) break;
  }
  result.raw_cost = pairing_cost(result.best);
  return result;
}

std::optional<CertifiedMatrix> numeric_certify(const Graph& g, const SearchConfig& cfg, double tol) {
  SearchResult r = minimize(g, cfg);
  if (!(r.cost <= cfg.accept_cost)) return std::nullopt;
  if (pattern_of(r.best, kPatternTol) != g) return std::nullopt;
  SpectrumCertificate cert = certify_square(r.best, tol);
  if (!cert.is_square) return std::nullopt;
  return CertifiedMatrix{std::move(r.best), g, std::move(cert), "search",
                         "seed=" + std::to_string(cfg.seed) + ";restart=" + std::to_string(r.restart)};
}

}  // namespace evenspec
