// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// sparsity-forge: command-line front end.
//
// Exit codes: 0 yes, 1 certified no, 2 error. Graph input defaults to
// graph6 on stdin, one graph per line; every line yields one JSON line.

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <boost/functional/hash.hpp>

#include "json_io.hpp"
#include "sforge/decompose.hpp"
#include "sforge/error.hpp"
#include "sforge/generators.hpp"
#include "sforge/graph_io.hpp"
#include "sforge/matroid.hpp"
#include "sforge/partition.hpp"
#include "sforge/sparsity.hpp"

namespace {

using sforge::Graph;
using sforge::Rational;
using sforge::tools::Json;
using sforge::tools::to_json;

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kError = 2;

struct InputOptions {
  std::string path = "-";
  std::string format = "graph6";
};

struct RecordResult {
  int code = kYes;
  std::string out;
  std::string err;
};

void add_input_options(CLI::App* cmd, InputOptions& input) {
  cmd->add_option("input", input.path, "Input file, or - for stdin")->capture_default_str();
  cmd->add_option("--format", input.format, "Input format")
      ->check(CLI::IsMember({"graph6", "edgelist"}))
      ->capture_default_str();
}

std::string read_input(const std::string& path) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw sforge::DomainError("cannot open " + path);
    buffer << file.rdbuf();
  }
  return buffer.str();
}

// graph6 input holds one graph per non-empty line; an edge list is one graph.
std::vector<std::string> split_records(const std::string& text, const std::string& format) {
  if (format == "edgelist") return {text};
  std::vector<std::string> records;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) records.push_back(line);
  }
  return records;
}

Graph parse_record(const std::string& record, const std::string& format) {
  return format == "edgelist" ? sforge::parse_edgelist(record) : sforge::parse_graph6(record);
}

unsigned thread_count() {
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  if (const char* cap = std::getenv("SPARSITY_FORGE_THREADS")) {
    try {
      const long value = std::stol(cap);
      if (value >= 1) threads = std::min(threads, static_cast<unsigned>(value));
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring SPARSITY_FORGE_THREADS=" << cap << "\n";
    }
  }
  return threads;
}

// Runs `fn` on every input graph in parallel and prints results in input
// order. Returns the largest exit code.
template <typename Fn>
int run_batch(const InputOptions& input, Fn fn) {
  const std::vector<std::string> records = split_records(read_input(input.path), input.format);
  if (records.empty()) {
    std::cerr << "error: no input graph\n";
    return kError;
  }
  std::vector<RecordResult> results(records.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < records.size(); i = next++) {
      try {
        results[i] = fn(parse_record(records[i], input.format));
      } catch (const std::exception& e) {
        results[i] = {kError, "", "error: graph " + std::to_string(i + 1) + ": " + e.what()};
      }
    }
  };
  const unsigned threads = std::min<std::size_t>(thread_count(), records.size());
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  int code = kYes;
  for (const RecordResult& r : results) {
    if (!r.out.empty()) std::cout << r.out << "\n";
    if (!r.err.empty()) std::cerr << r.err << "\n";
    code = std::max(code, r.code);
  }
  return code;
}

RecordResult not_sparse_result(const sforge::NotSparseError& e) {
  Json j;
  j["error"] = "not_sparse";
  j["certificate"] = to_json(e.certificate());
  return {kNo, j.dump(), e.what()};
}

std::string hash_hex(const std::string& bytes) {
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0')
      << static_cast<std::uint64_t>(boost::hash_range(bytes.begin(), bytes.end()));
  return out.str();
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct BenchOptions {
  std::string suite;
  std::vector<int> sizes{100, 200, 500};
  std::uint64_t seed = 1;
  std::string m = "5/2";
  double degree = 6.0;
};

// Seeded random graph with the given expected degree, thinned greedily to
// (m,0)-sparsity.
Graph bench_instance(int n, const Rational& m, double degree, std::uint64_t seed) {
  const double p = n > 1 ? std::min(1.0, degree / (n - 1)) : 0.0;
  return sforge::greedy_sparse_subgraph(sforge::random_graph(n, p, seed),
                                        sforge::SparsityParams(m, 0), seed);
}

int run_bench(const BenchOptions& options) {
  if (options.suite != "decompose" && options.suite != "check") {
    std::cerr << "error: unknown bench suite '" << options.suite
              << "' (expected decompose or check)\n";
    return kError;
  }
  const Rational m = sforge::parse_rational(options.m);
  if (m <= 1) throw sforge::DomainError("bench needs m > 1");
  std::cout << std::left << std::setw(7) << "n" << std::setw(8) << "edges" << std::setw(18)
            << "instance" << std::setw(10) << "generate";
  if (options.suite == "decompose") {
    std::cout << std::setw(10) << "certify" << std::setw(10) << "split" << std::setw(10)
              << "refine" << std::setw(10) << "verify";
  } else {
    std::cout << std::setw(10) << "check";
  }
  std::cout << "total\n" << std::fixed << std::setprecision(3);

  for (int n : options.sizes) {
    if (n < 0) throw sforge::DomainError("bench sizes must be non-negative");
    const auto start = std::chrono::steady_clock::now();
    const Graph g = bench_instance(n, m, options.degree, options.seed);
    const double generate = seconds_since(start);
    std::cout << std::setw(7) << n << std::setw(8) << g.num_edges() << std::setw(18)
              << hash_hex(sforge::write_graph6(g)) << std::setw(10) << generate;
    const auto stage_start = std::chrono::steady_clock::now();
    if (options.suite == "decompose") {
      sforge::DecomposeTimings t;
      sforge::decompose_ksw(g, m, {.timings = &t});
      std::cout << std::setw(10) << t.certify << std::setw(10) << t.split << std::setw(10)
                << t.refine << std::setw(10) << t.verify;
    } else {
      sforge::is_sparse(g, sforge::SparsityParams(m, 0));
      std::cout << std::setw(10) << seconds_since(stage_start);
    }
    std::cout << seconds_since(start) << "\n";
  }
  return kYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact (a,b)-sparsity checks, matroid-union partitions and forest decompositions"};
  app.require_subcommand(1);

  InputOptions check_in;
  std::string check_a;
  std::string check_b;
  auto* check = app.add_subcommand("check", "Decide (a,b)-sparsity");
  add_input_options(check, check_in);
  check->add_option("--a", check_a, "a as p/q")->required();
  check->add_option("--b", check_b, "b as p/q")->required();

  InputOptions part_in;
  int a1 = 0, b1 = 0, a2 = 0, b2 = 0;
  bool minimize = false;
  auto* partition = app.add_subcommand("partition", "Split into (a1,b1)- and (a2,b2)-sparse parts");
  add_input_options(partition, part_in);
  partition->add_option("--a1", a1)->required();
  partition->add_option("--b1", b1)->required();
  partition->add_option("--a2", a2)->required();
  partition->add_option("--b2", b2)->required();
  partition->add_flag("--minimize", minimize, "Shrink deficiency certificates");

  InputOptions dec_in;
  std::string dec_m;
  bool dec_verify = false;
  bool dec_trace = false;
  auto* decompose = app.add_subcommand(
      "decompose", "Split an (m,0)-sparse graph into a forest and an (m,1-2m)-sparse graph");
  add_input_options(decompose, dec_in);
  decompose->add_option("--m", dec_m, "m > 1 as p/q")->required();
  decompose->add_flag("--verify", dec_verify, "Re-check the result independently");
  decompose->add_flag("--trace", dec_trace, "Include the refinement steps");

  InputOptions ver_in;
  std::string ver_path;
  auto* verify = app.add_subcommand("verify", "Check a decomposition JSON against its graph");
  add_input_options(verify, ver_in);
  verify->add_option("--decomposition", ver_path, "Decomposition JSON file")->required();

  std::string gen_format = "graph6";
  int gen_a1 = 1, gen_a2 = 1, gen_n = 5, gen_t = 2, gen_a = 1;
  auto* gen = app.add_subcommand("gen", "Generate a counterexample family");
  gen->require_subcommand(1);
  gen->add_option("--format", gen_format, "Output format")
      ->check(CLI::IsMember({"graph6", "edgelist"}))
      ->capture_default_str();
  auto* gen_disconnected = gen->add_subcommand("disconnected", "Copies of a tight circulant");
  gen_disconnected->add_option("--a1", gen_a1)->capture_default_str();
  gen_disconnected->add_option("--a2", gen_a2)->capture_default_str();
  gen_disconnected->add_option("--n", gen_n)->capture_default_str();
  gen_disconnected->add_option("--t", gen_t)->capture_default_str();
  auto* gen_glued = gen->add_subcommand("glued-trees", "Two tree unions glued at a vertex");
  gen_glued->add_option("--a", gen_a)->required();
  auto* gen_ring = gen->add_subcommand("ring", "Ring of near-complete graphs");
  gen_ring->add_option("--a", gen_a)->required();
  gen_ring->add_option("--t", gen_t)->required();

  BenchOptions bench_opts;
  auto* bench = app.add_subcommand("bench", "Time the pipeline on seeded random instances");
  bench->add_option("suite", bench_opts.suite, "decompose or check")->required();
  bench->add_option("--sizes", bench_opts.sizes, "Vertex counts")
      ->delimiter(',')
      ->capture_default_str();
  bench->add_option("--seed", bench_opts.seed)->capture_default_str();
  bench->add_option("--m", bench_opts.m, "Sparsity m as p/q")->capture_default_str();
  bench->add_option("--degree", bench_opts.degree, "Expected degree before thinning")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kYes : kError;
  }

  try {
    if (*check) {
      const sforge::SparsityParams params(sforge::parse_rational(check_a),
                                          sforge::parse_rational(check_b));
      return run_batch(check_in, [&](const Graph& g) {
        const auto cert = sforge::is_sparse(g, params);
        return RecordResult{cert.sparse() ? kYes : kNo, to_json(cert).dump(), ""};
      });
    }
    if (*partition) {
      return run_batch(part_in, [&](const Graph& g) {
        const auto m1 = sforge::make_oracle(g, a1, b1);
        const auto m2 = sforge::make_oracle(g, a2, b2);
        const auto r = sforge::matroid_union_partition(g, m1, m2, {.minimize_certificate = minimize});
        return RecordResult{r.success() ? kYes : kNo, to_json(r).dump(), ""};
      });
    }
    if (*decompose) {
      const Rational m = sforge::parse_rational(dec_m);
      sforge::classify(m);
      return run_batch(dec_in, [&](const Graph& g) {
        sforge::RefineTrace trace;
        sforge::Decomposition d;
        try {
          d = sforge::decompose_ksw(g, m, {.trace = dec_trace ? &trace : nullptr});
        } catch (const sforge::NotSparseError& e) {
          return not_sparse_result(e);
        }
        bool verified = true;
        std::string err;
        if (dec_verify) {
          const auto report = sforge::verify_decomposition(d);
          verified = report.ok();
          if (!verified) err = "verification failed: " + report.message;
        }
        Json j = to_json(d, verified);
        if (dec_trace) j["trace"] = to_json(trace);
        return RecordResult{verified ? kYes : kNo, j.dump(), err};
      });
    }
    if (*verify) {
      const Json doc = Json::parse(read_input(ver_path));
      return run_batch(ver_in, [&](const Graph& g) {
        const auto report = sforge::verify_decomposition(sforge::tools::decomposition_from_json(doc, g));
        return RecordResult{report.ok() ? kYes : kNo, to_json(report).dump(), ""};
      });
    }
    if (*gen) {
      Graph g(0);
      if (*gen_disconnected) {
        g = sforge::gen_counterexample_disconnected(gen_a1, gen_a2, gen_n, gen_t);
      } else if (*gen_glued) {
        g = sforge::gen_counterexample_glued_trees(gen_a);
      } else {
        g = sforge::gen_counterexample_ring(gen_a, gen_t);
      }
      if (gen_format == "edgelist") {
        std::cout << sforge::write_edgelist(g);
      } else {
        std::cout << sforge::write_graph6(g) << "\n";
      }
      return kYes;
    }
    if (*bench) return run_bench(bench_opts);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
