#include "evenspec/polynomial.hpp"

#include <sstream>

namespace evenspec {

RatPoly::RatPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

void RatPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RatPoly RatPoly::monomial(const Rational& c, std::size_t power) {
  std::vector<Rational> coeffs(power + 1, Rational(0));
  coeffs[power] = c;
  return RatPoly(std::move(coeffs));
}

RatPoly RatPoly::from_roots(const std::vector<Rational>& roots) {
  RatPoly p({Rational(1)});
  for (const auto& r : roots) p = p * RatPoly({Rational(-r), Rational(1)});
  return p;
}

Rational RatPoly::coefficient(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Rational(0);
}

const Rational& RatPoly::leading() const {
  if (is_zero()) throw MatrixError("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Rational RatPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatPoly RatPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return RatPoly(std::move(d));
}

RatPoly RatPoly::monic() const {
  if (is_zero()) return {};
  std::vector<Rational> c = coeffs_;
  const Rational lead = c.back();
  for (auto& x : c) x /= lead;
  return RatPoly(std::move(c));
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coefficient(k) + b.coefficient(k);
  return RatPoly(std::move(c));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coefficient(k) - b.coefficient(k);
  return RatPoly(std::move(c));
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return RatPoly(std::move(c));
}

std::string RatPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    Rational mag = abs(c);
    os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    if (mag != 1 || k == 0) os << mag.get_str();
    if (k > 0) os << "x";
    if (k > 1) os << "^" << k;
    first = false;
  }
  return os.str();
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw MatrixError("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {RatPoly(), a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
  const Rational& lead = b.leading();
  for (int k = a.degree(); k >= db; --k) {
    const Rational factor = rem[static_cast<std::size_t>(k)] / lead;
    quot[static_cast<std::size_t>(k - db)] = factor;
    if (factor == 0) continue;
    for (int i = 0; i <= db; ++i) {
      rem[static_cast<std::size_t>(k - db + i)] -= factor * b.coefficients()[static_cast<std::size_t>(i)];
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly x = a;
  RatPoly y = b;
  while (!y.is_zero()) {
    RatPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

std::optional<RatPoly> poly_square_root(const RatPoly& p) {
  if (!p.is_monic()) throw MatrixError("poly_square_root needs a monic polynomial, got " + p.to_string());
  if (p.degree() % 2 != 0) return std::nullopt;
  // A monic p of degree 2d has exactly one monic g of degree d with
  // deg(p - g^2) < d; solve for it from the top coefficient down, then check
  // the whole product. This also catches roots of multiplicity 4, 6, ...,
  // which gcd(p, p') alone would miss.
  const std::size_t d = static_cast<std::size_t>(p.degree() / 2);
  std::vector<Rational> g(d + 1, Rational(0));
  g[d] = 1;
  for (std::size_t k = d; k-- > 0;) {
    Rational rest = 0;
    for (std::size_t i = k + 1; i < d; ++i) {
      const std::size_t j = d + k - i;
      if (j > k && j <= d && j != d) rest += g[i] * g[j];
    }
    g[k] = (p.coefficient(d + k) - rest) / 2;
  }
  RatPoly root(std::move(g));
  if (root * root != p) return std::nullopt;
  return root;
}

}  // namespace evenspec
