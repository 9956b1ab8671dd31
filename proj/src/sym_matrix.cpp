#include "evenspec/sym_matrix.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

namespace evenspec {

double nearest_double(const Rational& q) {
  // get_d truncates toward zero; the nearest double is it or a neighbour.
  const double d = q.get_d();
  double best = d;
  Rational best_err = abs(q - Rational(d));
  for (double c : {std::nextafter(d, INFINITY), std::nextafter(d, -INFINITY)}) {
    if (!std::isfinite(c)) continue;
    Rational err = abs(q - Rational(c));
    if (err < best_err) {
      best = c;
      best_err = err;
    }
  }
  return best;
}

SymMatrix::SymMatrix(std::size_t order)
    : order_(order),
      upper_(order * (order + 1) / 2, 0.0),
      exact_(std::vector<Rational>(order * (order + 1) / 2, Rational(0))) {}

std::size_t SymMatrix::index(std::size_t i, std::size_t j) const {
  if (i >= order_ || j >= order_) {
    throw MatrixError("matrix index (" + std::to_string(i) + "," + std::to_string(j) +
                      ") out of range for order " + std::to_string(order_));
  }
  if (i > j) std::swap(i, j);
  // Row i of the upper triangle starts after rows 0..i-1 of lengths n, n-1, ...
  return i * order_ - i * (i - 1) / 2 + (j - i);
}

void SymMatrix::set(std::size_t i, std::size_t j, double value) {
  upper_[index(i, j)] = value;
  exact_.reset();
}

const Rational& SymMatrix::exact(std::size_t i, std::size_t j) const {
  if (!exact_) throw MatrixError("matrix has no exact entries");
  return (*exact_)[index(i, j)];
}

void SymMatrix::set_exact(std::size_t i, std::size_t j, const Rational& value) {
  const auto k = index(i, j);
  upper_[k] = nearest_double(value);
  if (exact_) (*exact_)[k] = value;
}

SymMatrix SymMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const std::size_t n = rows.size();
  SymMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw MatrixError("matrix rows must be square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (std::abs(rows[i][j] - rows[j][i]) > 1e-12 * (1.0 + std::abs(rows[i][j]))) {
        throw MatrixError("matrix is not symmetric at (" + std::to_string(i) + "," +
                          std::to_string(j) + ")");
      }
      out.upper_[out.index(i, j)] = rows[i][j];
    }
  }
  out.exact_.reset();
  return out;
}

SymMatrix SymMatrix::from_exact_rows(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t n = rows.size();
  SymMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw MatrixError("matrix rows must be square");
    for (std::size_t j = i; j < n; ++j) {
      if (rows[i][j] != rows[j][i]) throw MatrixError("matrix is not symmetric");
      out.set_exact(i, j, rows[i][j]);
    }
  }
  return out;
}

SymMatrix SymMatrix::from_upper(std::size_t order, std::vector<double> upper) {
  if (upper.size() != order * (order + 1) / 2) {
    throw MatrixError("upper triangle of order " + std::to_string(order) + " needs " +
                      std::to_string(order * (order + 1) / 2) + " entries, got " +
                      std::to_string(upper.size()));
  }
  SymMatrix out(order);
  out.upper_ = std::move(upper);
  out.exact_.reset();
  return out;
}

SymMatrix SymMatrix::identity(std::size_t order) {
  SymMatrix out(order);
  for (std::size_t i = 0; i < order; ++i) out.set_exact(i, i, 1);
  return out;
}

SymMatrix SymMatrix::diagonal(std::span<const double> values) {
  SymMatrix out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) out.set(i, i, values[i]);
  return out;
}

std::vector<std::vector<double>> SymMatrix::rows() const {
  std::vector<std::vector<double>> out(order_, std::vector<double>(order_));
  for (std::size_t i = 0; i < order_; ++i)
    for (std::size_t j = 0; j < order_; ++j) out[i][j] = (*this)(i, j);
  return out;
}

double SymMatrix::trace() const {
  double t = 0;
  for (std::size_t i = 0; i < order_; ++i) t += (*this)(i, i);
  return t;
}

double SymMatrix::frobenius_norm() const {
  double s = 0;
  for (std::size_t i = 0; i < order_; ++i) {
    for (std::size_t j = i; j < order_; ++j) {
      const double x = (*this)(i, j);
      s += (i == j ? 1.0 : 2.0) * x * x;
    }
  }
  return std::sqrt(s);
}

double SymMatrix::off_diagonal_norm() const {
  double s = 0;
  for (std::size_t i = 0; i < order_; ++i)
    for (std::size_t j = i + 1; j < order_; ++j) s += 2.0 * (*this)(i, j) * (*this)(i, j);
  return std::sqrt(s);
}

SymMatrix SymMatrix::affine(double alpha, double beta) const {
  SymMatrix out = *this;
  out.exact_.reset();
  for (std::size_t i = 0; i < order_; ++i) {
    for (std::size_t j = i; j < order_; ++j) {
      out.upper_[index(i, j)] = alpha * (*this)(i, j) + (i == j ? beta : 0.0);
    }
  }
  return out;
}

SymMatrix SymMatrix::affine_exact(const Rational& alpha, const Rational& beta) const {
  if (!exact_) return affine(nearest_double(alpha), nearest_double(beta));
  SymMatrix out(order_);
  for (std::size_t i = 0; i < order_; ++i) {
    for (std::size_t j = i; j < order_; ++j) {
      Rational v = alpha * exact(i, j);
      if (i == j) v += beta;
      out.set_exact(i, j, v);
    }
  }
  return out;
}

SymMatrix SymMatrix::permuted(const std::vector<std::size_t>& perm) const {
  if (perm.size() != order_) throw MatrixError("permutation size mismatch");
  SymMatrix out(order_);
  if (!exact_) out.exact_.reset();
  for (std::size_t i = 0; i < order_; ++i) {
    for (std::size_t j = i; j < order_; ++j) {
      if (exact_) {
        out.set_exact(perm[i], perm[j], exact(i, j));
      } else {
        out.upper_[out.index(perm[i], perm[j])] = (*this)(i, j);
      }
    }
  }
  return out;
}

std::vector<double> SymMatrix::multiply(std::span<const double> x) const {
  if (x.size() != order_) throw MatrixError("vector size mismatch");
  std::vector<double> y(order_, 0.0);
  for (std::size_t i = 0; i < order_; ++i)
    for (std::size_t j = 0; j < order_; ++j) y[i] += (*this)(i, j) * x[j];
  return y;
}

Graph pattern_of(const SymMatrix& a, double zero_tol) {
  Graph g(a.order());
  for (std::size_t i = 0; i < a.order(); ++i)
    for (std::size_t j = i + 1; j < a.order(); ++j)
      if (std::abs(a(i, j)) > zero_tol) g.add_edge(i, j);
  return g;
}

std::vector<std::size_t> move_to_last(std::size_t order, std::size_t v) {
  if (v >= order) throw MatrixError("vertex " + std::to_string(v) + " out of range");
  std::vector<std::size_t> perm(order);
  for (std::size_t u = 0; u < order; ++u) perm[u] = u < v ? u : u - 1;
  perm[v] = order - 1;
  return perm;
}

std::string to_string(const Rational& q) { return q.get_str(); }

namespace {

std::optional<Rational> parse_exact(const std::string& token) {
  if (token.find_first_of("eEnNiI") != std::string::npos) return std::nullopt;
  try {
    if (token.find('/') != std::string::npos) {
      Rational q(token, 10);
      if (q.get_den() == 0) return std::nullopt;
      q.canonicalize();
      return q;
    }
    const auto dot = token.find('.');
    if (dot == std::string::npos) return Rational(token, 10);
    std::string digits = token.substr(0, dot) + token.substr(dot + 1);
    if (digits.empty() || digits == "-" || digits == "+") return std::nullopt;
    if (digits.front() == '+') digits.erase(0, 1);
    std::string den = "1" + std::string(token.size() - dot - 1, '0');
    Rational q(digits + "/" + den, 10);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

}  // namespace

SymMatrix parse_matrix_text(const std::string& text) {
  const auto semi = text.find(';');
  if (semi == std::string::npos) throw MatrixError("matrix text must start with '<n>;'");
  std::size_t order = 0;
  try {
    std::size_t used = 0;
    const std::string head = text.substr(0, semi);
    order = static_cast<std::size_t>(std::stoul(head, &used));
    if (head.find_first_not_of(" \t\r\n", used) != std::string::npos) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw MatrixError("matrix text: bad order before ';'");
  }

  std::istringstream body(text.substr(semi + 1));
  std::vector<std::string> tokens;
  for (std::string t; body >> t;) tokens.push_back(t);
  const std::size_t expected = order * (order + 1) / 2;
  if (tokens.size() != expected) {
    throw MatrixError("matrix text: order " + std::to_string(order) + " needs " +
                      std::to_string(expected) + " entries, got " + std::to_string(tokens.size()));
  }

  std::vector<double> upper(expected);
  std::vector<Rational> exact(expected);
  bool all_exact = true;
  for (std::size_t k = 0; k < expected; ++k) {
    if (auto q = parse_exact(tokens[k])) {
      exact[k] = *q;
      upper[k] = nearest_double(*q);
    } else {
      all_exact = false;
      try {
        upper[k] = std::stod(tokens[k]);
      } catch (const std::exception&) {
        throw MatrixError("matrix text: bad entry '" + tokens[k] + "'");
      }
    }
    if (!std::isfinite(upper[k])) throw MatrixError("matrix text: non-finite entry '" + tokens[k] + "'");
  }
  if (!all_exact) return SymMatrix::from_upper(order, std::move(upper));

  SymMatrix out(order);
  std::size_t k = 0;
  for (std::size_t i = 0; i < order; ++i)
    for (std::size_t j = i; j < order; ++j) out.set_exact(i, j, exact[k++]);
  return out;
}

std::string write_matrix_text(const SymMatrix& a) {
  std::ostringstream os;
  os << a.order() << ";";
  for (std::size_t i = 0; i < a.order(); ++i) {
    for (std::size_t j = i; j < a.order(); ++j) {
      os << ' ';
      if (a.is_exact()) {
        os << to_string(a.exact(i, j));
      } else {
        // Scientific notation keeps numeric entries numeric on the way back in.
        os << std::scientific << std::setprecision(std::numeric_limits<double>::max_digits10 - 1) << a(i, j);
      }
    }
  }
  return os.str();
}

}  // namespace evenspec
