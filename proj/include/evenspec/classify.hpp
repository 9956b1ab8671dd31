#pragma once

#include <json.hpp>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "evenspec/constructions.hpp"
#include "evenspec/graph.hpp"
#include "evenspec/obstructions.hpp"
#include "evenspec/search.hpp"

namespace evenspec {

class ClassifyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A record that failed re-verification, or a graph with both a NO witness
/// and a YES certificate.
class SoundnessError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Verdict { ProvedNo, CertifiedYes, NumericYes, Unknown };

std::string to_string(Verdict v);
std::optional<Verdict> parse_verdict(const std::string& name);

struct StageTiming {
  std::string stage;
  double ms = 0.0;
};

struct ClassificationRecord {
  std::string graph6;
  Verdict verdict = Verdict::Unknown;
  std::string reason;  // obstruction kind, construction name, "search" or "unknown"
  std::optional<Obstruction> obstruction;
  std::optional<CertifiedMatrix> certificate;
  std::optional<double> best_cost;  // normalized pairing cost reached by the search
  std::vector<StageTiming> timings;
};

/// Obstructions, then recognised constructions, then numeric search. The
/// first conclusive stage wins. Needs a connected graph.
ClassificationRecord classify_graph(const Graph& g, const SearchConfig& cfg);

/// One record per graph of enumerate_connected(n), in enumeration order.
/// Graphs are spread over `threads` workers (0: hardware concurrency).
std::vector<ClassificationRecord> classify_all(std::size_t n, const SearchConfig& cfg, unsigned threads = 0);

struct VerdictCounts {
  std::size_t proved_no = 0, certified_yes = 0, numeric_yes = 0, unknown = 0;
};
VerdictCounts count_verdicts(const std::vector<ClassificationRecord>& records);

/// Record as a JSON object. Matrices are row-major upper triangles, exact
/// entries as "p/q" strings next to the doubles. Timings only when asked, so
/// default output is byte-stable across runs.
nlohmann::json to_json(const ClassificationRecord& r, bool with_timings = false);

/// Parses and re-verifies: witnesses are replayed, certificates are re-read
/// for pattern and square spectrum at `tol`. Throws SoundnessError when a
/// check fails and ClassifyError on malformed input.
ClassificationRecord record_from_json(const nlohmann::json& j, double tol = kDefaultSquareTol);

/// Per record: NO witnesses replay, YES certificates re-verify and the graph
/// has no obstruction. Throws SoundnessError with the offending record dumped.
void check_soundness(const std::vector<ClassificationRecord>& records, double tol = kDefaultSquareTol);

/// Certificate as JSON: order, upper, optional exact, eigenvalues, max_gap,
/// mode, construction, parameters.
nlohmann::json certificate_json(const CertifiedMatrix& c);

}  // namespace evenspec
