#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kpath/gen.hpp"
#include "kpath/graph_io.hpp"
#include "kpath/oracle.hpp"
#include "kpath/version.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;
using kpath::Answer;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

struct Options {
  std::string graph_path;
  int k = 1;                 // counts vertices on the path
  std::uint64_t seed = 0;
  int trials = 3;
  int amplify = 10;
  unsigned field_bits = 64;
  bool json = false;
  bool directed = false;     // oracle/bench mode switch
  // bench only
  int bench_n = 50;
  double bench_p = 0.3;
  int kmin = 8;
  int kmax = 14;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open graph file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

void emit(const ordered_json& report, bool as_json) {
  if (as_json) {
    std::cout << report.dump(2) << "\n";
    return;
  }
  for (const auto& [key, value] : report.items()) {
    if (value.is_object() || value.is_array()) {
      std::cout << key << ": " << value.dump() << "\n";
    } else if (value.is_string()) {
      std::cout << key << ": " << value.get<std::string>() << "\n";
    } else {
      std::cout << key << ": " << value.dump() << "\n";
    }
  }
}

ordered_json graph_summary(int n, std::size_t m, bool directed) {
  return ordered_json{{"n", n}, {"m", m}, {"directed", directed}};
}

int finish(const ordered_json& report, bool as_json, Answer answer) {
  emit(report, as_json);
  return answer == Answer::kYes ? kExitYes : kExitNo;
}

int run_directed(const Options& opt) {
  const auto start = std::chrono::steady_clock::now();
  const kpath::Digraph g = kpath::parse_digraph(read_file(opt.graph_path));
  kpath::TestParams params{opt.trials, opt.seed, kpath::gf::config_for_width(opt.field_bits)};
  const kpath::Verdict v = kpath::directed_kpath(g, opt.k, params);

  ordered_json report;
  report["command"] = "directed";
  report["graph"] = graph_summary(g.n, [&] {
    std::size_t m = 0;
    for (const auto& list : g.out) m += list.size();
    return m;
  }(), true);
  report["k"] = opt.k;
  report["k_convention"] = "vertices";
  report["parameters"] = ordered_json{
      {"trials", opt.trials}, {"field_bits", opt.field_bits}, {"seed", opt.seed}};
  report["answer"] = v.answer == Answer::kYes ? "YES" : "NO";
  report["failure_bound"] = v.failure_bound;
  report["queries_used"] = v.queries_used;
  report["elapsed_ms"] = elapsed_ms(start);
  report["version"] = std::string(kpath::kVersion);
  return finish(report, opt.json, v.answer);
}

int run_undirected(const Options& opt) {
  const auto start = std::chrono::steady_clock::now();
  const kpath::Ugraph g = kpath::parse_ugraph(read_file(opt.graph_path));
  const int k_edges = opt.k - 1;

  kpath::Verdict v;
  int r = 0, s = 0;
  std::uint64_t reps = 0;
  if (k_edges == 0) {
    // A path on one vertex needs no engine.
    v = g.n >= 1 ? kpath::Verdict{Answer::kYes, 0, 0.0, 0}
                 : kpath::Verdict{Answer::kNo, std::nullopt, 0.0, 0};
  } else {
    kpath::TestParams params{opt.trials, opt.seed, kpath::gf::config_for_width(opt.field_bits)};
    v = kpath::undirected_kpath(g, k_edges, params, opt.amplify);
    std::tie(r, s) = kpath::choose_rs(k_edges);
    reps = kpath::trial_count(k_edges, r, s);
  }

  ordered_json report;
  report["command"] = "undirected";
  report["graph"] = graph_summary(g.n, g.edges.size(), false);
  report["k"] = opt.k;
  report["k_convention"] = "vertices";
  report["parameters"] = ordered_json{{"k_edges", k_edges},
                                      {"r", r},
                                      {"s", s},
                                      {"T", reps},
                                      {"trials", opt.trials},
                                      {"amplification", opt.amplify},
                                      {"field_bits", opt.field_bits},
                                      {"seed", opt.seed}};
  report["answer"] = v.answer == Answer::kYes ? "YES" : "NO";
  report["failure_bound"] = v.failure_bound;
  report["queries_used"] = v.queries_used;
  report["elapsed_ms"] = elapsed_ms(start);
  report["version"] = std::string(kpath::kVersion);
  return finish(report, opt.json, v.answer);
}

int run_oracle(const Options& opt) {
  const auto start = std::chrono::steady_clock::now();
  const std::string text = read_file(opt.graph_path);

  Answer answer = Answer::kNo;
  int n = 0;
  std::size_t m = 0;
  if (opt.directed) {
    const kpath::Digraph g = kpath::parse_digraph(text);
    n = g.n;
    for (const auto& list : g.out) m += list.size();
    answer = kpath::oracle::dfs_kpath_directed(g, opt.k) ? Answer::kYes : Answer::kNo;
  } else {
    const kpath::Ugraph g = kpath::parse_ugraph(text);
    n = g.n;
    m = g.edges.size();
    answer = kpath::oracle::dfs_kpath_undirected(g, opt.k - 1) ? Answer::kYes : Answer::kNo;
  }

  ordered_json report;
  report["command"] = "oracle";
  report["graph"] = graph_summary(n, m, opt.directed);
  report["k"] = opt.k;
  report["k_convention"] = "vertices";
  report["parameters"] = ordered_json{{"directed", opt.directed}};
  report["answer"] = answer == Answer::kYes ? "YES" : "NO";
  report["failure_bound"] = 0.0;
  report["queries_used"] = 0;
  report["elapsed_ms"] = elapsed_ms(start);
  report["version"] = std::string(kpath::kVersion);
  return finish(report, opt.json, answer);
}

int run_bench(const Options& opt) {
  if (opt.kmin < 2 || opt.kmax < opt.kmin)
    throw std::runtime_error("bench: need 2 <= kmin <= kmax");
  kpath::TestParams params{opt.trials, opt.seed, kpath::gf::config_for_width(opt.field_bits)};

  ordered_json timings = ordered_json::array();
  std::vector<double> seconds;
  for (int k = opt.kmin; k <= opt.kmax; ++k) {
    const auto start = std::chrono::steady_clock::now();
    Answer answer = Answer::kNo;
    if (opt.directed) {
      const kpath::Digraph g = kpath::random_digraph(opt.bench_n, opt.bench_p, opt.seed);
      answer = kpath::directed_kpath(g, k, params).answer;
    } else {
      const kpath::Ugraph g = kpath::random_ugraph(opt.bench_n, opt.bench_p, opt.seed);
      answer = kpath::undirected_kpath(g, k - 1, params, opt.amplify).answer;
    }
    const double sec = elapsed_ms(start) / 1000.0;
    seconds.push_back(sec);
    timings.push_back(ordered_json{
        {"k", k}, {"seconds", sec}, {"answer", answer == Answer::kYes ? "YES" : "NO"}});
  }

  double ratio_sum = 0.0;
  int ratio_count = 0;
  for (std::size_t i = 1; i < seconds.size(); ++i) {
    if (seconds[i - 1] > 0) {
      ratio_sum += seconds[i] / seconds[i - 1];
      ++ratio_count;
    }
  }
  const double growth = ratio_count > 0 ? ratio_sum / ratio_count : 0.0;

  ordered_json report;
  report["command"] = "bench";
  report["mode"] = opt.directed ? "directed" : "undirected";
  report["parameters"] = ordered_json{{"n", opt.bench_n},
                                      {"p", opt.bench_p},
                                      {"kmin", opt.kmin},
                                      {"kmax", opt.kmax},
                                      {"trials", opt.trials},
                                      {"field_bits", opt.field_bits},
                                      {"seed", opt.seed}};
  report["k_convention"] = "vertices";
  report["timings"] = timings;
  report["growth_ratio"] = growth;
  report["version"] = std::string(kpath::kVersion);
  emit(report, opt.json);
  return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simple k-path decision by algebraic fingerprinting over GF(2^w)"};
  app.require_subcommand(1);

  Options opt;

  const auto add_common = [&](CLI::App* cmd, bool with_graph) {
    if (with_graph)
      cmd->add_option("graph", opt.graph_path, "Edge-list graph file")->required();
    cmd->add_option("--seed", opt.seed, "Master seed (default 0)");
    cmd->add_option("--trials", opt.trials, "Samples per zero test (default 3)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--field-bits", opt.field_bits, "Field width (default 64)")
        ->check(CLI::IsMember({8u, 16u, 32u, 64u}));
    cmd->add_flag("--json", opt.json, "Emit the report as JSON");
  };
  const auto add_k = [&](CLI::App* cmd) {
    cmd->add_option("--k", opt.k, "Path length in vertices")
        ->required()
        ->check(CLI::Range(1, 1000000000));
  };

  CLI::App* directed = app.add_subcommand("directed", "Decide a directed simple k-path");
  add_common(directed, true);
  add_k(directed);

  CLI::App* undirected = app.add_subcommand("undirected", "Decide an undirected simple k-path");
  add_common(undirected, true);
  add_k(undirected);
  undirected->add_option("--amplify", opt.amplify, "Outer repetitions (default 10)")
      ->check(CLI::PositiveNumber);

  CLI::App* oracle = app.add_subcommand("oracle", "Exhaustive ground-truth search");
  oracle->add_option("graph", opt.graph_path, "Edge-list graph file")->required();
  add_k(oracle);
  bool oracle_directed = false;
  oracle->add_flag("--directed", oracle_directed, "Treat the graph as directed");
  oracle->add_flag("--json", opt.json, "Emit the report as JSON");

  CLI::App* bench = app.add_subcommand("bench", "Per-k timings on a seeded random graph");
  add_common(bench, false);
  bool bench_directed = true;
  bench->add_flag("--directed,!--undirected", bench_directed, "Graph mode (default directed)");
  bench->add_option("--n", opt.bench_n, "Vertex count (default 50)")->check(CLI::PositiveNumber);
  bench->add_option("--p", opt.bench_p, "Edge probability (default 0.3)")
      ->check(CLI::Range(0.0, 1.0));
  bench->add_option("--kmin", opt.kmin, "Smallest k (default 8)")->check(CLI::PositiveNumber);
  bench->add_option("--kmax", opt.kmax, "Largest k (default 14)")->check(CLI::PositiveNumber);
  bench->add_option("--amplify", opt.amplify, "Outer repetitions, undirected mode")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }

  try {
    if (app.got_subcommand(directed)) return run_directed(opt);
    if (app.got_subcommand(undirected)) return run_undirected(opt);
    if (app.got_subcommand(oracle)) {
      opt.directed = oracle_directed;
      return run_oracle(opt);
    }
    opt.directed = bench_directed;
    return run_bench(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
