#include "evenspec/constructions.hpp"

#include <cmath>
#include <sstream>

namespace evenspec {

namespace {

std::size_t strict_upper_index(std::size_t n, std::size_t i, std::size_t j) {
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

bool is_scalar(const SymMatrix& a) {
  for (std::size_t i = 0; i < a.order(); ++i)
    for (std::size_t j = i; j < a.order(); ++j) {
      if (i != j && std::abs(a(i, j)) > 1e-12) return false;
      if (i == j && std::abs(a(i, i) - a(0, 0)) > 1e-12) return false;
    }
  return true;
}

// A + shift * I with shift = target - A(v, v), exact when A is.
SymMatrix shift_diagonal_to(const SymMatrix& a, Vertex v, long target) {
  if (a.is_exact()) return a.affine_exact(1, Rational(target) - a.exact(v, v));
  return a.affine(1.0, static_cast<double>(target) - a(v, v));
}

std::string fmt(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace

CertifiedMatrix certify_matrix(SymMatrix m, std::string construction, std::string parameters, double tol) {
  SpectrumCertificate cert = certify_square(m, tol);
  if (!cert.is_square) {
    throw ConstructionError(construction + " (" + parameters + "): spectrum does not pair up, max gap " +
                            fmt(cert.max_gap));
  }
  Graph g = pattern_of(m, kPatternTol);
  return CertifiedMatrix{std::move(m), std::move(g), std::move(cert), std::move(construction),
                         std::move(parameters)};
}

bool verify(const CertifiedMatrix& c, double tol) {
  return pattern_of(c.matrix, kPatternTol) == c.graph && certify_square(c.matrix, tol).is_square;
}

SymMatrix skew_pair(const SymMatrix& a, std::span<const double> skew_upper) {
  const std::size_t n = a.order();
  if (skew_upper.size() != n * (n - 1) / 2) {
    throw ConstructionError("skew_pair: order " + std::to_string(n) + " needs " +
                            std::to_string(n * (n - 1) / 2) + " skew entries, got " +
                            std::to_string(skew_upper.size()));
  }
  SymMatrix m(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      m.set(i, j, a(i, j));
      m.set(n + i, n + j, a(i, j));
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const double s = i < j ? skew_upper[strict_upper_index(n, i, j)] : -skew_upper[strict_upper_index(n, j, i)];
      m.set(i, n + j, s);
    }
  }
  return m;
}

SymMatrix skew_pair(const SymMatrix& a, const std::vector<Rational>& skew_upper) {
  std::vector<double> approx;
  for (const auto& q : skew_upper) approx.push_back(nearest_double(q));
  SymMatrix numeric = skew_pair(a, approx);
  if (!a.is_exact()) return numeric;

  const std::size_t n = a.order();
  SymMatrix m(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      m.set_exact(i, j, a.exact(i, j));
      m.set_exact(n + i, n + j, a.exact(i, j));
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const Rational s = i < j ? skew_upper[strict_upper_index(n, i, j)]
                               : Rational(-skew_upper[strict_upper_index(n, j, i)]);
      m.set_exact(i, n + j, s);
    }
  }
  return m;
}

CertifiedMatrix cycle_matrix(std::size_t order) {
  if (order < 4 || order % 2 != 0) {
    throw ConstructionError("cycle_matrix needs an even order >= 4, got " + std::to_string(order));
  }
  const std::size_t n = order / 2;
  SymMatrix path(n);
  for (std::size_t i = 0; i + 1 < n; ++i) path.set_exact(i, i + 1, 1);
  std::vector<Rational> skew(n * (n - 1) / 2, Rational(0));
  skew[strict_upper_index(n, 0, n - 1)] = -1;
  return certify_matrix(skew_pair(path, skew), "cycle", "order=" + std::to_string(order));
}

SymMatrix kron(const SymMatrix& a, const SymMatrix& b) {
  const std::size_t n = a.order(), m = b.order();
  SymMatrix out(n * m);
  const bool exact = a.is_exact() && b.is_exact();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l) {
          const std::size_t r = i * m + k, c = j * m + l;
          if (r > c) continue;
          if (exact) {
            out.set_exact(r, c, a.exact(i, j) * b.exact(k, l));
          } else {
            out.set(r, c, a(i, j) * b(k, l));
          }
        }
  return out;
}

std::vector<double> HsJoin::lift_a(std::span<const double> v) const {
  if (v.size() != a_order) throw ConstructionError("lift_a: vector length mismatch");
  std::vector<double> out(v.begin(), v.end() - 1);
  for (double x : u) out.push_back(v.back() * x);
  return out;
}

std::vector<double> HsJoin::lift_b(std::span<const double> w) const {
  if (w.size() != u.size()) throw ConstructionError("lift_b: vector length mismatch");
  std::vector<double> out(a_order - 1, 0.0);
  out.insert(out.end(), w.begin(), w.end());
  return out;
}

HsJoin hs_join(const SymMatrix& a, const SymMatrix& b, std::span<const double> u, double mu) {
  const std::size_t n = a.order(), m = b.order();
  if (n == 0 || m == 0) throw ConstructionError("hs_join needs nonempty blocks");
  if (u.size() != m) throw ConstructionError("hs_join: u has the wrong length");
  if (std::abs(a(n - 1, n - 1) - mu) > 1e-10) {
    throw ConstructionError("hs_join: last diagonal entry " + fmt(a(n - 1, n - 1)) + " differs from mu " + fmt(mu));
  }
  double norm2 = 0;
  for (double x : u) norm2 += x * x;
  if (std::abs(std::sqrt(norm2) - 1.0) > 1e-10) throw ConstructionError("hs_join: u is not a unit vector");
  const auto bu = b.multiply(u);
  double resid = 0;
  for (std::size_t i = 0; i < m; ++i) resid += (bu[i] - mu * u[i]) * (bu[i] - mu * u[i]);
  resid = std::sqrt(resid);
  if (resid > 1e-10 * std::max(1.0, b.frobenius_norm())) {
    throw ConstructionError("hs_join: |b u - mu u| = " + fmt(resid) + " exceeds 1e-10");
  }

  const bool unit_entries = std::all_of(u.begin(), u.end(), [](double x) { return x == 0 || std::abs(x) == 1; });
  const bool exact = a.is_exact() && b.is_exact() && unit_entries;
  const std::size_t off = n - 1;
  SymMatrix c(off + m);
  auto put = [&](std::size_t i, std::size_t j, const Rational& q, double x) {
    if (exact) {
      c.set_exact(i, j, q);
    } else {
      c.set(i, j, x);
    }
  };
  for (std::size_t i = 0; i < off; ++i) {
    for (std::size_t j = i; j < off; ++j) put(i, j, exact ? a.exact(i, j) : Rational(0), a(i, j));
    for (std::size_t j = 0; j < m; ++j) {
      put(i, off + j, exact ? a.exact(i, n - 1) * Rational(u[j]) : Rational(0), a(i, n - 1) * u[j]);
    }
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) put(off + i, off + j, exact ? b.exact(i, j) : Rational(0), b(i, j));
  return HsJoin{std::move(c), n, std::vector<double>(u.begin(), u.end())};
}

CertifiedMatrix clique_blowup(const CertifiedMatrix& c, Vertex v, std::size_t m) {
  const std::size_t n = c.matrix.order();
  if (!c.certificate.is_square) throw ConstructionError("clique_blowup: input certificate is not square");
  if (v >= n) throw ConstructionError("clique_blowup: vertex out of range");
  const std::size_t size = 2 * m + 1;

  SymMatrix shifted = shift_diagonal_to(c.matrix, v, static_cast<long>(size)).permuted(move_to_last(n, v));
  SymMatrix ones(size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = i; j < size; ++j) ones.set_exact(i, j, 1);
  std::vector<double> u(size, 1.0 / std::sqrt(static_cast<double>(size)));
  if (size == 1) u[0] = 1.0;
  HsJoin joined = hs_join(shifted, ones, u, static_cast<double>(size));

  // Put the clique where v was.
  std::vector<std::size_t> perm(n - 1 + size);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const std::size_t original = i < v ? i : i + 1;
    perm[i] = original < v ? original : original + 2 * m;
  }
  for (std::size_t j = 0; j < size; ++j) perm[n - 1 + j] = v + j;
  return certify_matrix(joined.matrix.permuted(perm), "clique_blowup",
                        c.construction + ";v=" + std::to_string(v) + ";m=" + std::to_string(m));
}

SymMatrix pq_join(const SymMatrix& a, const SymMatrix& b) {
  const std::size_t n = a.order(), m = b.order();
  if (n == 0 || m == 0) throw ConstructionError("pq_join needs nonempty blocks");
  if (std::abs(a(n - 1, n - 1) - 2.0) > 1e-12) {
    throw ConstructionError("pq_join: last diagonal entry of a is " + fmt(a(n - 1, n - 1)) + ", needs 2");
  }
  if (std::abs(b(m - 1, m - 1)) > 1e-12) {
    throw ConstructionError("pq_join: last diagonal entry of b is " + fmt(b(m - 1, m - 1)) + ", needs 0");
  }
  const double h = std::sqrt(2.0) / 2.0;
  const std::size_t a0 = m - 1, c1 = m + n - 2, c2 = m + n - 1;
  SymMatrix c(m + n);
  for (std::size_t i = 0; i + 1 < m; ++i) {
    for (std::size_t j = i; j + 1 < m; ++j) c.set(i, j, b(i, j));
    c.set(i, c1, h * b(i, m - 1));
    c.set(i, c2, -h * b(i, m - 1));
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = i; j + 1 < n; ++j) c.set(a0 + i, a0 + j, a(i, j));
    c.set(a0 + i, c1, h * a(i, n - 1));
    c.set(a0 + i, c2, h * a(i, n - 1));
  }
  c.set(c1, c1, 1.0);
  c.set(c1, c2, 1.0);
  c.set(c2, c2, 1.0);
  return c;
}

CertifiedMatrix graph_pq_join(const CertifiedMatrix& ca, Vertex v_a, const CertifiedMatrix& cb, Vertex v_b) {
  if (!ca.certificate.is_square || !cb.certificate.is_square) {
    throw ConstructionError("graph_pq_join: both inputs must be certified square");
  }
  if (v_a >= ca.matrix.order() || v_b >= cb.matrix.order()) throw ConstructionError("graph_pq_join: vertex out of range");
  if (is_scalar(ca.matrix) || is_scalar(cb.matrix)) throw ConstructionError("graph_pq_join: scalar matrices are rejected");
  SymMatrix a = shift_diagonal_to(ca.matrix, v_a, 2).permuted(move_to_last(ca.matrix.order(), v_a));
  SymMatrix b = shift_diagonal_to(cb.matrix, v_b, 0).permuted(move_to_last(cb.matrix.order(), v_b));
  return certify_matrix(pq_join(a, b), "pq_join",
                        ca.construction + "@" + std::to_string(v_a) + "+" + cb.construction + "@" +
                            std::to_string(v_b));
}

}  // namespace evenspec
