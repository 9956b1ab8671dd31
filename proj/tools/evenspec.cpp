// Command-line front end: enumerate, classify, certify, construct, search.

#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "evenspec/canonical.hpp"
#include "evenspec/classify.hpp"
#include "evenspec/constructions.hpp"
#include "evenspec/graph6.hpp"
#include "evenspec/search.hpp"

using namespace evenspec;
using nlohmann::json;

namespace {

constexpr int kInputError = 2;

const char* const kSchema = R"(Output records (JSON lines with --json):
  classify:  {graph6, verdict: ProvedNo|CertifiedYes|NumericYes|Unknown, reason,
              witness?, certificate?, best_cost?, timings? (with --timings)}
  certificate: {order, upper: row-major upper triangle, exact?: ["p/q", ...],
                eigenvalues, max_gap, mode: exact|numeric, construction, parameters}
  certify:   {order, is_square, mode, eigenvalues, pair_gaps, max_gap, tol, charpoly?, root?}
  search:    {graph6, found, cost, raw_cost, restart, certificate?}
Matrix files: "<n>; <upper triangle, row-major>", entries as integers, p/q or decimals.
)";

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Graph read_graph6(const std::string& text) {
  try {
    return parse_graph6(text);
  } catch (const Graph6Error& e) {
    throw InputError("bad graph6 '" + text + "': " + e.what());
  }
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

std::string join_values(const std::vector<double>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? " " : "") + fmt(xs[i]);
  return out;
}

void print_certificate_text(const CertifiedMatrix& c) {
  std::cout << "construction " << c.construction << " (" << c.parameters << ")\n"
            << "graph6 " << write_graph6(c.graph) << "\n"
            << "mode " << to_string(c.certificate.mode) << ", max_gap " << fmt(c.certificate.max_gap) << "\n"
            << "eigenvalues " << join_values(c.certificate.eigenvalues) << "\n"
            << "matrix " << write_matrix_text(c.matrix) << "\n";
}

void emit_certificate(const CertifiedMatrix& c, bool as_json) {
  if (as_json) {
    json j = certificate_json(c);
    j["graph6"] = write_graph6(c.graph);
    std::cout << j.dump() << "\n";
  } else {
    print_certificate_text(c);
  }
}

void print_record_text(const ClassificationRecord& r) {
  std::cout << r.graph6 << "  " << to_string(r.verdict) << "  " << r.reason;
  if (r.best_cost) std::cout << "  best_cost " << fmt(*r.best_cost);
  std::cout << "\n";
}

double parse_number(const std::string& s) {
  try {
    std::size_t used = 0;
    const double x = std::stod(s, &used);
    if (used != s.size()) throw InputError("not a number: '" + s + "'");
    return x;
  } catch (const std::logic_error&) {
    throw InputError("not a number: '" + s + "'");
  }
}

std::size_t parse_count(const std::string& s) {
  const double x = parse_number(s);
  if (x < 0 || x != std::floor(x)) throw InputError("not a nonnegative integer: '" + s + "'");
  return static_cast<std::size_t>(x);
}

CertifiedMatrix build_construction(const std::string& name, const std::vector<std::string>& args, std::uint64_t seed,
                                   double tol) {
  auto need = [&](std::size_t k) {
    if (args.size() < k) throw InputError("construct " + name + " needs " + std::to_string(k) + " argument(s)");
  };
  if (name == "cycle") {
    need(1);
    return cycle_matrix(parse_count(args[0]));
  }
  if (name == "complete") {
    need(1);
    const std::size_t n = parse_count(args[0]);
    std::vector<double> pairs;
    for (std::size_t i = 1; i < args.size(); ++i) pairs.push_back(parse_number(args[i]));
    if (pairs.empty())
      for (std::size_t i = 0; i < n / 2; ++i) pairs.push_back(static_cast<double>(i + 1));
    return even_complete(n, pairs);
  }
  if (name == "rank2") {
    // rank2 p1 q1 [p2 q2 ...] [r=<count>]
    std::vector<std::pair<std::size_t, std::size_t>> parts;
    std::size_t r = 0;
    std::vector<std::size_t> nums;
    for (const auto& a : args) {
      if (a.rfind("r=", 0) == 0) {
        r = parse_count(a.substr(2));
      } else {
        nums.push_back(parse_count(a));
      }
    }
    if (nums.empty() || nums.size() % 2 != 0) throw InputError("construct rank2 needs pairs p q");
    for (std::size_t i = 0; i < nums.size(); i += 2) parts.emplace_back(nums[i], nums[i + 1]);
    Rank2Matrix m = rank2_realize(parts, r);
    return certify_matrix(std::move(m.matrix), "rank2", "a=" + std::to_string(m.a), tol);
  }
  if (name == "frame") {
    need(1);
    auto f = frame_realize(read_graph6(args[0]), seed);
    if (!f) throw ConstructionError("frame: no tight frame found for " + args[0]);
    return *f;
  }
  if (name == "join_clique") {
    need(1);
    return join_with_clique(read_graph6(args[0]), seed);
  }
  if (name == "pq_join") {
    // pq_join <cycle order a> <vertex a> <cycle order b> <vertex b>
    need(4);
    return graph_pq_join(cycle_matrix(parse_count(args[0])), parse_count(args[1]), cycle_matrix(parse_count(args[2])),
                         parse_count(args[3]));
  }
  if (name == "blowup") {
    // blowup <cycle order> <vertex> <m>
    need(3);
    return clique_blowup(cycle_matrix(parse_count(args[0])), parse_count(args[1]), parse_count(args[2]));
  }
  throw InputError("unknown construction '" + name +
                   "' (cycle, complete, rank2, frame, join_clique, pq_join, blowup)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetric matrices with square characteristic polynomial on graph patterns"};
  app.require_subcommand(1);
  app.fallthrough();
  app.footer(kSchema);

  std::uint64_t seed = 0;
  double tol = kDefaultSquareTol;
  bool as_json = false;
  app.add_option("--seed", seed, "Random seed")->envname("EVENSPEC_SEED");
  app.add_option("--tol", tol, "Pair-gap tolerance for square certificates")->check(CLI::PositiveNumber);
  app.add_flag("--json", as_json, "JSON-lines output");

  std::size_t enum_n = 0;
  auto* enumerate = app.add_subcommand("enumerate", "List connected graphs on n vertices in graph6");
  enumerate->add_option("n", enum_n, "Order (1..8)")->required();

  std::string classify_g6;
  std::size_t classify_n = 0;
  unsigned threads = 0;
  bool timings = false;
  auto* classify = app.add_subcommand("classify", "Verdict for one graph or all connected graphs of an order");
  auto* g6_opt = classify->add_option("graph6", classify_g6, "Graph in graph6");
  auto* all_opt = classify->add_option("--all", classify_n, "Classify every connected graph on n vertices");
  g6_opt->excludes(all_opt);
  classify->add_option("--threads", threads, "Worker threads (0: all cores)");
  classify->add_flag("--timings", timings, "Include per-stage timings in records");

  std::string matrix_file;
  auto* certify = app.add_subcommand("certify", "Square-spectrum certificate for a matrix file");
  certify->add_option("matrix-file", matrix_file, "Matrix in plain-text format")->required();

  std::string construct_name;
  std::vector<std::string> construct_args;
  auto* construct = app.add_subcommand("construct", "Build a certified matrix from a named construction");
  construct->add_option("name", construct_name, "cycle, complete, rank2, frame, join_clique, pq_join, blowup")
      ->required();
  construct->add_option("params", construct_args, "Construction parameters");

  std::string search_g6;
  SearchConfig cfg;
  auto* search = app.add_subcommand("search", "Numerical search for a square matrix in S(G)");
  search->add_option("graph6", search_g6, "Graph in graph6")->required();
  search->add_option("--restarts", cfg.restarts, "Independent starts")->check(CLI::PositiveNumber);
  search->add_option("--iters", cfg.max_iters, "Sweeps per start")->check(CLI::PositiveNumber);
  search->add_option("--accept-cost", cfg.accept_cost, "Acceptance threshold")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << "\n" << kSchema;
    return kInputError;
  }
  cfg.seed = seed;

  try {
    if (*enumerate) {
      if (enum_n < 1 || enum_n > kMaxEnumerateOrder) throw InputError("enumerate needs 1 <= n <= 8");
      for (const auto& g : enumerate_connected(enum_n)) {
        if (as_json) {
          std::cout << json{{"graph6", write_graph6(g)}, {"edges", g.edge_count()}}.dump() << "\n";
        } else {
          std::cout << write_graph6(g) << "\n";
        }
      }
    } else if (*classify) {
      std::vector<ClassificationRecord> records;
      if (*all_opt) {
        if (classify_n < 1 || classify_n > kMaxEnumerateOrder) throw InputError("--all needs 1 <= n <= 8");
        records = classify_all(classify_n, cfg, threads);
      } else if (*g6_opt) {
        const Graph g = read_graph6(classify_g6);
        if (!is_connected(g)) throw InputError("classify needs a connected graph");
        records.push_back(classify_graph(g, cfg));
      } else {
        throw InputError("classify needs a graph6 string or --all n");
      }
      check_soundness(records, tol);
      for (const auto& r : records) {
        if (as_json) {
          std::cout << to_json(r, timings).dump() << "\n";
        } else {
          print_record_text(r);
        }
      }
      const auto c = count_verdicts(records);
      std::cerr << "ProvedNo " << c.proved_no << ", CertifiedYes " << c.certified_yes << ", NumericYes "
                << c.numeric_yes << ", Unknown " << c.unknown << "\n";
    } else if (*certify) {
      std::ifstream in(matrix_file);
      if (!in) throw InputError("cannot read " + matrix_file);
      std::stringstream buf;
      buf << in.rdbuf();
      SymMatrix m;
      try {
        m = parse_matrix_text(buf.str());
      } catch (const MatrixError& e) {
        throw InputError(matrix_file + ": " + e.what());
      }
      const auto cert = certify_square(m, tol);
      if (as_json) {
        json j{{"order", m.order()},          {"is_square", cert.is_square}, {"mode", to_string(cert.mode)},
               {"eigenvalues", cert.eigenvalues}, {"pair_gaps", cert.pair_gaps}, {"max_gap", cert.max_gap},
               {"tol", cert.tol}};
        if (cert.charpoly) j["charpoly"] = cert.charpoly->to_string();
        if (cert.root) j["root"] = cert.root->to_string();
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "is_square " << (cert.is_square ? "true" : "false") << "\n"
                  << "mode " << to_string(cert.mode) << "\n"
                  << "eigenvalues " << join_values(cert.eigenvalues) << "\n"
                  << "max_gap " << fmt(cert.max_gap) << "\n";
        if (cert.charpoly) std::cout << "charpoly " << cert.charpoly->to_string() << "\n";
        if (cert.root) std::cout << "root " << cert.root->to_string() << "\n";
      }
    } else if (*construct) {
      emit_certificate(build_construction(construct_name, construct_args, seed, tol), as_json);
    } else if (*search) {
      const Graph g = read_graph6(search_g6);
      if (g.order() % 2 != 0) throw InputError("search needs an even order");
      SearchResult r = minimize(g, cfg);
      std::optional<CertifiedMatrix> c;
      if (r.cost <= cfg.accept_cost && pattern_of(r.best, kPatternTol) == g) {
        SpectrumCertificate cert = certify_square(r.best, tol);
        if (cert.is_square) {
          c = CertifiedMatrix{r.best, g, std::move(cert), "search",
                              "seed=" + std::to_string(seed) + ";restart=" + std::to_string(r.restart)};
        }
      }
      if (as_json) {
        json j{{"graph6", search_g6}, {"found", c.has_value()}, {"cost", r.cost},
               {"raw_cost", r.raw_cost}, {"restart", r.restart}};
        if (c) j["certificate"] = certificate_json(*c);
        std::cout << j.dump() << "\n";
      } else if (c) {
        print_certificate_text(*c);
      } else {
        std::cout << "no certificate; best normalized cost " << fmt(r.cost) << " (raw " << fmt(r.raw_cost)
                  << ") after " << r.restarts_run << " restarts\n";
      }
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << kSchema;
    return kInputError;
  } catch (const SearchError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const ConstructionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const ClassifyError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const SoundnessError& e) {
    std::cerr << "soundness violation: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
