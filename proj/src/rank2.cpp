#include <array>
#include <algorithm>
#include <cmath>
#include <complex>
#include <deque>
#include <numbers>
#include <random>

#include "evenspec/constructions.hpp"

namespace evenspec {

namespace {

// A vertex's Gram vector is z / sqrt(m) for an integer vector z.
struct GramVector {
  long z0 = 0, z1 = 0;
  long m = 1;
};

Rank2Matrix gram_matrix(const std::vector<GramVector>& vecs, std::size_t k) {
  const std::size_t n = vecs.size();
  bool exact = true;
  std::vector<std::vector<Rational>> exact_rows(n, std::vector<Rational>(n, 0));
  std::vector<std::vector<double>> rows(n, std::vector<double>(n, 0.0));
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t w = 0; w < n; ++w) {
      const long dot = vecs[v].z0 * vecs[w].z0 + vecs[v].z1 * vecs[w].z1;
      if (dot == 0) continue;
      const mpz_class prod = mpz_class(vecs[v].m) * vecs[w].m;
      rows[v][w] = static_cast<double>(dot) / std::sqrt(prod.get_d());
      if (mpz_perfect_square_p(prod.get_mpz_t())) {
        exact_rows[v][w] = Rational(mpz_class(dot), mpz_class(sqrt(prod)));
        exact_rows[v][w].canonicalize();
      } else {
        exact = false;
      }
    }
  }
  long a = 0;
  for (std::size_t i = 1; i <= k; ++i) a += static_cast<long>(i * i + 1);
  return {exact ? SymMatrix::from_exact_rows(exact_rows) : SymMatrix::from_rows(rows), a};
}

Rank2Matrix realize_on_classes(const std::vector<std::vector<Vertex>>& s, const std::vector<std::vector<Vertex>>& t,
                               std::size_t order) {
  if (s.empty()) throw ConstructionError("rank2_realize needs at least one part");
  std::vector<GramVector> vecs(order, GramVector{0, 0, 1});
  for (std::size_t idx = 0; idx < s.size(); ++idx) {
    const long i = static_cast<long>(idx + 1);
    if (s[idx].empty()) throw ConstructionError("rank2_realize: every part needs p_i >= 1");
    if (t[idx].empty()) {
      throw ConstructionError("rank2_realize: part " + std::to_string(i) +
                              " has q_i = 0; singleton classes are handled by frame_realize");
    }
    for (Vertex v : s[idx]) vecs.at(v) = {i, 1, static_cast<long>(s[idx].size())};
    for (Vertex v : t[idx]) vecs.at(v) = {1, -i, static_cast<long>(t[idx].size())};
  }
  return gram_matrix(vecs, s.size());
}

}  // namespace

std::optional<Rank2Decomposition> recognize_rank2(const Graph& g) {
  const std::size_t n = g.order();
  const Graph h = complement(g);
  Rank2Decomposition d;
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < n; ++v) (h.degree(v) + 1 == n ? d.universal : rest).push_back(v);

  struct Part {
    std::vector<Vertex> s, t;
  };
  std::vector<Part> parts;
  std::vector<int> side(n, -1);
  for (Vertex start : rest) {
    if (side[start] != -1) continue;
    Part part;
    side[start] = 0;
    std::deque<Vertex> queue{start};
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop_front();
      (side[x] == 0 ? part.s : part.t).push_back(x);
      for (Vertex y : rest) {
        if (!h.adjacent(x, y)) continue;
        if (side[y] == -1) {
          side[y] = 1 - side[x];
          queue.push_back(y);
        } else if (side[y] == side[x]) {
          return std::nullopt;  // odd cycle
        }
      }
    }
    for (Vertex x : part.s)
      for (Vertex y : part.t)
        if (!h.adjacent(x, y)) return std::nullopt;
    std::sort(part.s.begin(), part.s.end());
    std::sort(part.t.begin(), part.t.end());
    if (part.s.size() < part.t.size()) std::swap(part.s, part.t);
    parts.push_back(std::move(part));
  }

  // Universal vertices can sometimes be traded for a part with both classes:
  // K_r is K_{1,1} v K_{r-2}, and an edgeless rest plus one universal vertex
  // is a star.
  const bool rest_edgeless = std::all_of(parts.begin(), parts.end(), [](const Part& p) { return p.t.empty(); });
  if (rest.empty() && d.universal.size() >= 2) {
    parts.push_back({{d.universal[0]}, {d.universal[1]}});
    d.universal.erase(d.universal.begin(), d.universal.begin() + 2);
  } else if (!rest.empty() && rest_edgeless && !d.universal.empty()) {
    parts.assign(1, {rest, {d.universal[0]}});
    d.universal.erase(d.universal.begin());
  }

  std::stable_sort(parts.begin(), parts.end(), [](const Part& a, const Part& b) {
    return std::make_pair(a.s.size(), a.t.size()) > std::make_pair(b.s.size(), b.t.size());
  });
  d.r = d.universal.size();
  d.all_q_positive = true;
  for (auto& p : parts) {
    d.parts.emplace_back(p.s.size(), p.t.size());
    d.all_q_positive = d.all_q_positive && !p.t.empty();
    d.s_classes.push_back(std::move(p.s));
    d.t_classes.push_back(std::move(p.t));
  }
  if (d.parts.empty()) d.all_q_positive = false;
  return d;
}

Rank2Matrix rank2_realize(const std::vector<std::pair<std::size_t, std::size_t>>& parts, std::size_t r) {
  std::vector<std::vector<Vertex>> s, t;
  Vertex next = 0;
  for (auto [p, q] : parts) {
    s.emplace_back();
    t.emplace_back();
    for (std::size_t i = 0; i < p; ++i) s.back().push_back(next++);
    for (std::size_t i = 0; i < q; ++i) t.back().push_back(next++);
  }
  return realize_on_classes(s, t, next + r);
}

Rank2Matrix rank2_realize(const Rank2Decomposition& d, std::size_t order) {
  return realize_on_classes(d.s_classes, d.t_classes, order);
}

std::optional<SymMatrix> find_tight_frame(const Graph& g, std::uint64_t seed, int restarts, int steps) {
  const auto d = recognize_rank2(g);
  if (!d || d->parts.empty()) return std::nullopt;
  const std::size_t k = d->parts.size();

  // Free vertices with their part and side (T is rotated a quarter turn from S).
  struct Slot {
    Vertex v;
    std::size_t part;
    int side;
  };
  std::vector<Slot> slots;
  for (std::size_t i = 0; i < k; ++i) {
    for (Vertex v : d->s_classes[i]) slots.push_back({v, i, 0});
    for (Vertex v : d->t_classes[i]) slots.push_back({v, i, 1});
  }
  const std::size_t nv = slots.size();
  constexpr double kQuarter = std::numbers::pi / 2;

  auto angle = [&](const std::vector<double>& theta, const Slot& s) { return theta[s.part] + s.side * kQuarter; };

  // |sum w e^{2i phi}|^2 / (sum w)^2 with w = e^{2 rho}; gradient in (theta, rho).
  auto objective = [&](const std::vector<double>& theta, const std::vector<double>& rho, std::vector<double>* gt,
                       std::vector<double>* gr) {
    std::complex<double> total = 0;
    double weight = 0;
    std::vector<std::complex<double>> part_sum(k, 0);
    for (std::size_t j = 0; j < nv; ++j) {
      const double w = std::exp(2 * rho[j]);
      const auto z = w * std::polar(1.0, 2 * angle(theta, slots[j]));
      total += z;
      part_sum[slots[j].part] += z;
      weight += w;
    }
    const double f = std::norm(total) / (weight * weight);
    if (gt) {
      for (std::size_t i = 0; i < k; ++i) {
        // d total / d theta_i = 2 i part_sum_i
        const std::complex<double> dz = 2.0 * std::complex<double>(0, 1) * part_sum[i];
        (*gt)[i] = 2 * (total.real() * dz.real() + total.imag() * dz.imag()) / (weight * weight);
      }
      for (std::size_t j = 0; j < nv; ++j) {
        const double w = std::exp(2 * rho[j]);
        const auto dz = 2.0 * w * std::polar(1.0, 2 * angle(theta, slots[j]));
        (*gr)[j] = 2 * (total.real() * dz.real() + total.imag() * dz.imag()) / (weight * weight) -
                   2 * std::norm(total) * (2 * w) / (weight * weight * weight);
      }
    }
    return f;
  };

  for (int restart = 0; restart < restarts; ++restart) {
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(restart));
    std::uniform_real_distribution<double> start_angle(0.0, std::numbers::pi), start_rho(-0.5, 0.5);
    std::vector<double> theta(k), rho(nv);
    for (auto& x : theta) x = start_angle(rng);
    for (auto& x : rho) x = start_rho(rng);

    std::vector<double> gt(k), gr(nv), nt(k), nr(nv);
    double f = objective(theta, rho, &gt, &gr);
    double eta = 0.5;
    for (int step = 0; step < steps && f > 1e-28; ++step) {
      for (std::size_t i = 0; i < k; ++i) nt[i] = theta[i] - eta * gt[i];
      for (std::size_t j = 0; j < nv; ++j) nr[j] = std::clamp(rho[j] - eta * gr[j], -4.0, 4.0);
      const double nf = objective(nt, nr, nullptr, nullptr);
      if (nf < f) {
        theta = nt;
        rho = nr;
        f = objective(theta, rho, &gt, &gr);
        eta = std::min(eta * 1.5, 10.0);
      } else {
        eta *= 0.5;
        if (eta < 1e-14) break;
      }
    }

    // Weights enter the frame condition linearly: project onto it exactly.
    std::vector<double> w(nv), c2(nv), s2(nv);
    double zz00 = 0, zz01 = 0, zz11 = 0, r0 = 0, r1 = 0;
    for (std::size_t j = 0; j < nv; ++j) {
      w[j] = std::exp(2 * rho[j]);
      const double phi = angle(theta, slots[j]);
      c2[j] = std::cos(2 * phi);
      s2[j] = std::sin(2 * phi);
      zz00 += c2[j] * c2[j];
      zz01 += c2[j] * s2[j];
      zz11 += s2[j] * s2[j];
      r0 += c2[j] * w[j];
      r1 += s2[j] * w[j];
    }
    const double det = zz00 * zz11 - zz01 * zz01;
    if (std::abs(det) < 1e-12) continue;
    const double y0 = (zz11 * r0 - zz01 * r1) / det, y1 = (zz00 * r1 - zz01 * r0) / det;
    double wmax = 0, wsum = 0;
    for (std::size_t j = 0; j < nv; ++j) {
      w[j] -= c2[j] * y0 + s2[j] * y1;
      wmax = std::max(wmax, w[j]);
    }
    if (!std::all_of(w.begin(), w.end(), [&](double x) { return x > 1e-3 * wmax; })) continue;
    for (double x : w) wsum += x;
    for (double& x : w) x *= static_cast<double>(nv) / wsum;

    std::vector<std::array<double, 2>> u(g.order(), {0.0, 0.0});
    for (std::size_t j = 0; j < nv; ++j) {
      const double phi = angle(theta, slots[j]);
      u[slots[j].v] = {std::sqrt(w[j]) * std::cos(phi), std::sqrt(w[j]) * std::sin(phi)};
    }
    double fxx = 0, fxy = 0, fyy = 0;
    for (const auto& x : u) {
      fxx += x[0] * x[0];
      fxy += x[0] * x[1];
      fyy += x[1] * x[1];
    }
    const double a = (fxx + fyy) / 2;
    if (std::abs(fxx - fyy) > 1e-10 * a || std::abs(fxy) > 1e-10 * a) continue;

    SymMatrix gram(g.order());
    bool couplings_ok = true;
    for (Vertex v = 0; v < g.order(); ++v) {
      gram.set(v, v, u[v][0] * u[v][0] + u[v][1] * u[v][1]);
      for (Vertex x = v + 1; x < g.order(); ++x) {
        if (!g.adjacent(v, x)) continue;  // orthogonal by construction; keep it exactly zero
        const double dot = u[v][0] * u[x][0] + u[v][1] * u[x][1];
        if (std::abs(dot) <= 1e-6) couplings_ok = false;
        gram.set(v, x, dot);
      }
    }
    if (!couplings_ok) continue;
    return gram;
  }
  return std::nullopt;
}

std::optional<CertifiedMatrix> frame_realize(const Graph& g, std::uint64_t seed) {
  if (g.order() % 2 != 0) return std::nullopt;
  auto gram = find_tight_frame(g, seed);
  if (!gram) return std::nullopt;
  try {
    CertifiedMatrix c = certify_matrix(std::move(*gram), "frame", "seed=" + std::to_string(seed));
    if (c.graph != g) return std::nullopt;
    return c;
  } catch (const ConstructionError&) {
    return std::nullopt;
  }
}

}  // namespace evenspec
