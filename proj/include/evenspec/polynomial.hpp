#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "evenspec/sym_matrix.hpp"

namespace evenspec {

/// Univariate polynomial over Q, constant term first. The zero polynomial has
/// no coefficients and degree -1; otherwise the leading coefficient is nonzero.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coefficients);

  static RatPoly monomial(const Rational& c, std::size_t power);
  /// Product of (x - r) over the roots.
  static RatPoly from_roots(const std::vector<Rational>& roots);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t power) const;
  const Rational& leading() const;

  Rational operator()(const Rational& x) const;

  RatPoly derivative() const;
  RatPoly monic() const;

  friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string() const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// Quotient and remainder; throws MatrixError on division by zero.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);

/// Monic gcd (zero only when both inputs are zero).
RatPoly gcd(const RatPoly& a, const RatPoly& b);

/// Monic g with g * g == p, if one exists. Throws MatrixError for non-monic p.
std::optional<RatPoly> poly_square_root(const RatPoly& p);

}  // namespace evenspec
