#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "evenspec/graph.hpp"

namespace evenspec {

using Rational = mpq_class;

class MatrixError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense real symmetric matrix. Only the upper triangle (diagonal included) is
/// stored, row-major: (0,0) (0,1) ... (0,n-1) (1,1) ... (n-1,n-1).
///
/// A matrix may also carry exact rational entries. A fresh matrix is exact
/// (all zeros); writing a double through set() drops exactness, writing a
/// rational through set_exact() keeps it.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t order);

  /// From full rows; throws MatrixError unless square and symmetric to 1e-12.
  static SymMatrix from_rows(const std::vector<std::vector<double>>& rows);
  static SymMatrix from_exact_rows(const std::vector<std::vector<Rational>>& rows);
  static SymMatrix from_upper(std::size_t order, std::vector<double> upper);
  static SymMatrix identity(std::size_t order);
  static SymMatrix diagonal(std::span<const double> values);

  std::size_t order() const { return order_; }

  double operator()(std::size_t i, std::size_t j) const { return upper_[index(i, j)]; }
  void set(std::size_t i, std::size_t j, double value);

  bool is_exact() const { return exact_.has_value(); }
  const Rational& exact(std::size_t i, std::size_t j) const;
  void set_exact(std::size_t i, std::size_t j, const Rational& value);
  void drop_exact() { exact_.reset(); }

  std::span<const double> upper() const { return upper_; }
  std::optional<std::vector<Rational>> exact_upper() const { return exact_; }
  std::vector<std::vector<double>> rows() const;

  double trace() const;
  double frobenius_norm() const;
  double off_diagonal_norm() const;

  /// alpha * A + beta * I. Exactness is kept when both scalars are given exactly.
  SymMatrix affine(double alpha, double beta) const;
  SymMatrix affine_exact(const Rational& alpha, const Rational& beta) const;

  /// Symmetric relabelling: entry (i,j) moves to (perm[i], perm[j]).
  SymMatrix permuted(const std::vector<std::size_t>& perm) const;

  std::vector<double> multiply(std::span<const double> x) const;

 private:
  std::size_t index(std::size_t i, std::size_t j) const;

  std::size_t order_ = 0;
  std::vector<double> upper_;
  std::optional<std::vector<Rational>> exact_;
};

/// Off-diagonal support: edge {i,j} iff |a_ij| > zero_tol.
Graph pattern_of(const SymMatrix& a, double zero_tol);

/// Permutation that moves vertex v to the last position and keeps the order of
/// the others: perm[u] = u for u < v, u - 1 for u > v, n - 1 for v.
std::vector<std::size_t> move_to_last(std::size_t order, std::size_t v);

// Plain-text matrix format:
//
//   <n>; <upper triangle, row-major, whitespace separated>
//
// Entries written as integers, p/q fractions, or plain decimals (no exponent)
// are read exactly; if every entry is exact the matrix carries rationals.
// The writer uses scientific notation for matrices without exact entries.
SymMatrix parse_matrix_text(const std::string& text);
std::string write_matrix_text(const SymMatrix& a);

std::string to_string(const Rational& q);

/// Correctly rounded conversion (mpq's get_d truncates).
double nearest_double(const Rational& q);

}  // namespace evenspec
