#pragma once

#include <optional>
#include <string>
#include <vector>

#include "evenspec/polynomial.hpp"
#include "evenspec/sym_matrix.hpp"

namespace evenspec {

/// det(xI - A) by Faddeev-LeVerrier over Q. Needs exact entries.
RatPoly charpoly_exact(const SymMatrix& a);

enum class CertMode { Exact, Numeric };

std::string to_string(CertMode mode);

inline constexpr double kDefaultSquareTol = 1e-8;

/// Evidence that a matrix does or does not have a square characteristic
/// polynomial. Eigenvalues and consecutive pair gaps are always filled in.
struct SpectrumCertificate {
  std::vector<double> eigenvalues;
  std::vector<double> pair_gaps;  // |l[2i+1] - l[2i]|, floor(n/2) entries
  double max_gap = 0.0;
  double tol = kDefaultSquareTol;
  bool is_square = false;
  bool odd_order = false;
  CertMode mode = CertMode::Numeric;
  std::optional<RatPoly> charpoly;  // exact mode
  std::optional<RatPoly> root;      // exact mode, when is_square

  double spread() const;
};

/// Exact mode when the matrix carries rationals (square iff the exact
/// characteristic polynomial has a polynomial square root), numeric mode
/// otherwise (square iff n is even and every pair gap is at most
/// tol * max(1, spread)). Odd orders give is_square = false, never an error.
SpectrumCertificate certify_square(const SymMatrix& a, double tol = kDefaultSquareTol);

/// Numeric-mode verdict from a sorted spectrum alone.
SpectrumCertificate certify_spectrum(std::vector<double> eigenvalues, double tol = kDefaultSquareTol);

}  // namespace evenspec
