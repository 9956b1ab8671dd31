#include "evenspec/classify.hpp"

#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

#include "evenspec/canonical.hpp"
#include "evenspec/graph6.hpp"

namespace evenspec {

namespace {

using Clock = std::chrono::steady_clock;

class StageClock {
 public:
  explicit StageClock(std::vector<StageTiming>& out) : out_(out) {}
  void lap(const std::string& stage) {
    const auto now = Clock::now();
    out_.push_back({stage, std::chrono::duration<double, std::milli>(now - last_).count()});
    last_ = now;
  }

 private:
  std::vector<StageTiming>& out_;
  Clock::time_point last_ = Clock::now();
};

// Walk a connected 2-regular graph; empty when g is not a cycle.
std::vector<Vertex> cycle_order(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 3) return {};
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) != 2) return {};
  std::vector<Vertex> walk = {0};
  Vertex prev = n, cur = 0;
  while (walk.size() < n) {
    Vertex next = n;
    for (Vertex w = 0; w < n; ++w)
      if (g.adjacent(cur, w) && w != prev) {
        next = w;
        break;
      }
    if (next == 0 || next == n) return {};
    walk.push_back(next);
    prev = cur;
    cur = next;
  }
  return g.adjacent(cur, 0) ? walk : std::vector<Vertex>{};
}

std::optional<CertifiedMatrix> try_cycle(const Graph& g) {
  const auto walk = cycle_order(g);
  if (walk.empty() || g.order() < 4) return std::nullopt;
  CertifiedMatrix c = cycle_matrix(g.order());
  return certify_matrix(c.matrix.permuted(walk), c.construction, c.parameters);
}

std::optional<CertifiedMatrix> try_complete(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 4 || g != complete_graph(n)) return std::nullopt;
  std::vector<double> pairs(n / 2);
  for (std::size_t i = 0; i < pairs.size(); ++i) pairs[i] = static_cast<double>(i + 1);
  return even_complete(n, pairs);
}

nlohmann::json witness_json(const Obstruction& o) {
  nlohmann::json w = nlohmann::json::object();
  if (const auto* p = std::get_if<UniquePathWitness>(&o.witness)) {
    w = {{"u", p->u}, {"v", p->v}, {"distance", p->distance}};
  } else if (const auto* p = std::get_if<PendantWitness>(&o.witness)) {
    w = {{"v", p->v}, {"x", p->x}, {"y", p->y}};
  }
  return w;
}

Obstruction obstruction_from_json(const std::string& kind_name, const nlohmann::json& w) {
  const auto kind = parse_obstruction_kind(kind_name);
  if (!kind) throw ClassifyError("unknown obstruction kind '" + kind_name + "'");
  Obstruction o{*kind, {}};
  if (*kind == ObstructionKind::UniquePath) {
    o.witness = UniquePathWitness{w.at("u").get<Vertex>(), w.at("v").get<Vertex>(), w.at("distance").get<std::size_t>()};
  } else if (*kind == ObstructionKind::PendantFamily) {
    o.witness = PendantWitness{w.at("v").get<Vertex>(), w.at("x").get<std::array<Vertex, 2>>(),
                               w.at("y").get<std::vector<Vertex>>()};
  }
  return o;
}

SymMatrix matrix_from_json(const nlohmann::json& c) {
  const auto n = c.at("order").get<std::size_t>();
  const auto upper = c.at("upper").get<std::vector<double>>();
  if (upper.size() != n * (n + 1) / 2) throw ClassifyError("certificate upper triangle has the wrong length");
  if (c.contains("exact")) {
    const auto exact = c.at("exact").get<std::vector<std::string>>();
    if (exact.size() != upper.size()) throw ClassifyError("certificate exact triangle has the wrong length");
    SymMatrix m(n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        Rational q;
        try {
          q = Rational(exact[k++]);
          q.canonicalize();
        } catch (const std::invalid_argument&) {
          throw ClassifyError("bad rational '" + exact[k - 1] + "'");
        }
        m.set_exact(i, j, q);
      }
    return m;
  }
  return SymMatrix::from_upper(n, upper);
}

void fail(const std::string& why, const ClassificationRecord& r) {
  throw SoundnessError(why + ": " + to_json(r).dump());
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::ProvedNo: return "ProvedNo";
    case Verdict::CertifiedYes: return "CertifiedYes";
    case Verdict::NumericYes: return "NumericYes";
    case Verdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::optional<Verdict> parse_verdict(const std::string& name) {
  for (Verdict v : {Verdict::ProvedNo, Verdict::CertifiedYes, Verdict::NumericYes, Verdict::Unknown})
    if (to_string(v) == name) return v;
  return std::nullopt;
}

ClassificationRecord classify_graph(const Graph& g, const SearchConfig& cfg) {
  if (!is_connected(g)) throw ClassifyError("classify needs a connected graph");
  cfg.validate();
  ClassificationRecord r;
  r.graph6 = write_graph6(g);
  StageClock clock(r.timings);

  if (auto o = first_obstruction(g)) {
    clock.lap("obstructions");
    r.verdict = Verdict::ProvedNo;
    r.reason = to_string(o->kind);
    r.obstruction = std::move(*o);
    return r;
  }
  clock.lap("obstructions");

  auto yes = [&](CertifiedMatrix c, Verdict v) {
    r.verdict = v;
    r.reason = c.construction;
    r.certificate = std::move(c);
    return r;
  };
  if (auto c = try_cycle(g)) {
    clock.lap("constructions");
    return yes(std::move(*c), Verdict::CertifiedYes);
  }
  if (auto c = try_complete(g)) {
    clock.lap("constructions");
    return yes(std::move(*c), Verdict::CertifiedYes);
  }
  if (auto d = recognize_rank2(g)) {
    if (d->all_q_positive) {
      Rank2Matrix m = rank2_realize(*d, g.order());
      std::string params = "a=" + std::to_string(m.a) + ";r=" + std::to_string(d->r) + ";parts=";
      for (std::size_t i = 0; i < d->parts.size(); ++i) {
        params += (i ? "," : "") + std::to_string(d->parts[i].first) + "x" + std::to_string(d->parts[i].second);
      }
      clock.lap("constructions");
      return yes(certify_matrix(std::move(m.matrix), "rank2", params), Verdict::CertifiedYes);
    }
    if (auto f = frame_realize(g, cfg.seed)) {
      clock.lap("constructions");
      return yes(std::move(*f), Verdict::NumericYes);
    }
  }
  clock.lap("constructions");

  SearchResult s = minimize(g, cfg);
  r.best_cost = s.cost;
  if (s.cost <= cfg.accept_cost && pattern_of(s.best, kPatternTol) == g) {
    SpectrumCertificate cert = certify_square(s.best);
    if (cert.is_square) {
      clock.lap("search");
      return yes(CertifiedMatrix{std::move(s.best), g, std::move(cert), "search",
                                 "seed=" + std::to_string(cfg.seed) + ";restart=" + std::to_string(s.restart)},
                 Verdict::NumericYes);
    }
  }
  clock.lap("search");
  r.verdict = Verdict::Unknown;
  r.reason = "unknown";
  return r;
}

std::vector<ClassificationRecord> classify_all(std::size_t n, const SearchConfig& cfg, unsigned threads) {
  if (n > kMaxEnumerateOrder) {
    throw ClassifyError("classify_all supports orders up to " + std::to_string(kMaxEnumerateOrder));
  }
  cfg.validate();
  const std::vector<Graph> graphs = enumerate_connected(n);
  std::vector<ClassificationRecord> out(graphs.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(graphs.size(), 1)));

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < graphs.size(); i = next++) {
      try {
        out[i] = classify_graph(graphs[i], cfg);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
  return out;
}

VerdictCounts count_verdicts(const std::vector<ClassificationRecord>& records) {
  VerdictCounts c;
  for (const auto& r : records) {
    switch (r.verdict) {
      case Verdict::ProvedNo: ++c.proved_no; break;
      case Verdict::CertifiedYes: ++c.certified_yes; break;
      case Verdict::NumericYes: ++c.numeric_yes; break;
      case Verdict::Unknown: ++c.unknown; break;
    }
  }
  return c;
}

nlohmann::json certificate_json(const CertifiedMatrix& c) {
  nlohmann::json j;
  j["order"] = c.matrix.order();
  j["upper"] = std::vector<double>(c.matrix.upper().begin(), c.matrix.upper().end());
  if (const auto exact = c.matrix.exact_upper()) {
    std::vector<std::string> s;
    for (const auto& q : *exact) s.push_back(to_string(q));
    j["exact"] = s;
  }
  j["eigenvalues"] = c.certificate.eigenvalues;
  j["max_gap"] = c.certificate.max_gap;
  j["mode"] = to_string(c.certificate.mode);
  j["construction"] = c.construction;
  j["parameters"] = c.parameters;
  return j;
}

nlohmann::json to_json(const ClassificationRecord& r, bool with_timings) {
  nlohmann::json j;
  j["graph6"] = r.graph6;
  j["verdict"] = to_string(r.verdict);
  j["reason"] = r.reason;
  if (r.obstruction) j["witness"] = witness_json(*r.obstruction);
  if (r.certificate) j["certificate"] = certificate_json(*r.certificate);
  if (r.best_cost) j["best_cost"] = *r.best_cost;
  if (with_timings) {
    nlohmann::json t = nlohmann::json::object();
    for (const auto& s : r.timings) t[s.stage] = s.ms;
    j["timings"] = t;
  }
  return j;
}

ClassificationRecord record_from_json(const nlohmann::json& j, double tol) {
  ClassificationRecord r;
  Graph g;
  try {
    r.graph6 = j.at("graph6").get<std::string>();
    g = parse_graph6(r.graph6);
    const auto verdict = parse_verdict(j.at("verdict").get<std::string>());
    if (!verdict) throw ClassifyError("unknown verdict '" + j.at("verdict").get<std::string>() + "'");
    r.verdict = *verdict;
    r.reason = j.at("reason").get<std::string>();
    if (j.contains("best_cost")) r.best_cost = j.at("best_cost").get<double>();
    if (j.contains("timings")) {
      for (const auto& [stage, ms] : j.at("timings").items()) r.timings.push_back({stage, ms.get<double>()});
    }
    if (r.verdict == Verdict::ProvedNo) {
      r.obstruction = obstruction_from_json(r.reason, j.value("witness", nlohmann::json::object()));
    }
    if (r.verdict == Verdict::CertifiedYes || r.verdict == Verdict::NumericYes) {
      const auto& c = j.at("certificate");
      SymMatrix m = matrix_from_json(c);
      SpectrumCertificate cert = certify_square(m, tol);
      r.certificate = CertifiedMatrix{std::move(m), g, std::move(cert), c.at("construction").get<std::string>(),
                                      c.at("parameters").get<std::string>()};
    }
  } catch (const nlohmann::json::exception& e) {
    throw ClassifyError(std::string("malformed record: ") + e.what());
  } catch (const Graph6Error& e) {
    throw ClassifyError(std::string("malformed record: ") + e.what());
  }
  check_soundness({r}, tol);
  return r;
}

void check_soundness(const std::vector<ClassificationRecord>& records, double tol) {
  for (const auto& r : records) {
    const Graph g = parse_graph6(r.graph6);
    switch (r.verdict) {
      case Verdict::ProvedNo:
        if (!r.obstruction || !replay(g, *r.obstruction)) fail("obstruction witness does not replay", r);
        break;
      case Verdict::CertifiedYes:
      case Verdict::NumericYes:
        if (!r.certificate) fail("YES record without certificate", r);
        if (pattern_of(r.certificate->matrix, kPatternTol) != g) fail("certificate pattern differs from the graph", r);
        if (!certify_square(r.certificate->matrix, tol).is_square) fail("certificate spectrum does not pair up", r);
        if (auto o = first_obstruction(g)) fail("YES certificate on an obstructed graph (" + to_string(o->kind) + ")", r);
        break;
      case Verdict::Unknown:
        break;
    }
  }
}

}  // namespace evenspec
