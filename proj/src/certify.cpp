#include "evenspec/certify.hpp"

#include <algorithm>
#include <cmath>

#include "evenspec/eigen.hpp"

namespace evenspec {

RatPoly charpoly_exact(const SymMatrix& a) {
  if (!a.is_exact()) throw MatrixError("charpoly_exact needs exact rational entries");
  const std::size_t n = a.order();
  using Dense = std::vector<std::vector<Rational>>;
  Dense A(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) A[i][j] = a.exact(i, j);

  // M_k = A M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(A M_k) / k.
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  Dense M(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t k = 1; k <= n; ++k) {
    Dense next(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Rational s = 0;
        for (std::size_t l = 0; l < n; ++l) s += A[i][l] * M[l][j];
        next[i][j] = s;
      }
      next[i][i] += c[n - k + 1];
    }
    M = std::move(next);
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) tr += A[i][l] * M[l][i];
    c[n - k] = -tr / static_cast<long>(k);
  }
  return RatPoly(std::move(c));
}

std::string to_string(CertMode mode) { return mode == CertMode::Exact ? "exact" : "numeric"; }

double SpectrumCertificate::spread() const {
  if (eigenvalues.empty()) return 0.0;
  return eigenvalues.back() - eigenvalues.front();
}

SpectrumCertificate certify_spectrum(std::vector<double> eigenvalues, double tol) {
  if (!(tol > 0)) throw MatrixError("certificate tolerance must be positive");
  std::sort(eigenvalues.begin(), eigenvalues.end());
  SpectrumCertificate cert;
  cert.eigenvalues = std::move(eigenvalues);
  cert.tol = tol;
  cert.mode = CertMode::Numeric;
  const std::size_t n = cert.eigenvalues.size();
  cert.odd_order = n % 2 == 1;
  for (std::size_t i = 0; i + 1 < n; i += 2) {
    cert.pair_gaps.push_back(std::abs(cert.eigenvalues[i + 1] - cert.eigenvalues[i]));
  }
  cert.max_gap = cert.pair_gaps.empty() ? 0.0 : *std::max_element(cert.pair_gaps.begin(), cert.pair_gaps.end());
  cert.is_square = !cert.odd_order && cert.max_gap <= tol * std::max(1.0, cert.spread());
  return cert;
}

SpectrumCertificate certify_square(const SymMatrix& a, double tol) {
  SpectrumCertificate cert = certify_spectrum(eigenvalues(a), tol);
  if (a.is_exact()) {
    cert.mode = CertMode::Exact;
    cert.charpoly = charpoly_exact(a);
    cert.root = poly_square_root(*cert.charpoly);
    cert.is_square = cert.root.has_value();
  }
  return cert;
}

}  // namespace evenspec
