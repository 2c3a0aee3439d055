// Copyright 2026 The kuniform Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kuniform/circuit.hpp"
#include "kuniform/dense.hpp"
#include "kuniform/graph.hpp"
#include "kuniform/graph_io.hpp"
#include "kuniform/report_io.hpp"
#include "kuniform/uniformity.hpp"

namespace kuniform::cli {

// Exit codes: 0 success, 1 property does not hold, 2 usage or parse error,
// 3 budget or cap exceeded. Errors go to stderr as single-line JSON.
inline constexpr int kExitOk = 0;
inline constexpr int kExitPropertyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

namespace detail {

inline void emit_error(std::ostream& err, const std::string& message, int code) {
  nlohmann::ordered_json j;
  j["error"] = message;
  j["code"] = code;
  err << j.dump() << '\n';
}

inline Graph load_graph_arg(const std::string& path, std::istream& in) {
  if (path == "-") {
    return load_graph_auto(in);
  }
  std::ifstream file(path);
  if (!file) {
    throw std::invalid_argument("cannot open graph file \"" + path + "\"");
  }
  return load_graph_auto(file);
}

inline void write_payload(const std::string& payload, const std::string& out_path,
                          std::ostream& out) {
  if (out_path.empty()) {
    out << payload;
    return;
  }
  std::ofstream file(out_path);
  if (!file) {
    throw std::invalid_argument("cannot open output file \"" + out_path + "\"");
  }
  file << payload;
}

struct GenOptions {
  std::string family;
  int size = 0;
  int rows = 0;
  int cols = 0;
  std::string format = "json";
  std::string out_path;
};

struct AnalyzeOptions {
  std::string graph_path;
  int k = 0;  // 0 = not given
  bool max_search = false;
  std::string method = "dense";
  std::uint64_t budget = EnumerationOptions{}.budget;
  int threads = 0;
  std::size_t cap = kDenseQubitCap;
  std::string format = "plain";
  bool pretty = false;
  std::string out_path;
};

inline int run_gen(const GenOptions& o, std::ostream& out) {
  FamilySpec spec;
  spec.family = family_from_name(o.family);
  if (spec.family == Family::torus) {
    if (o.size != 0 || o.rows <= 0 || o.cols <= 0) {
      throw std::invalid_argument("torus takes --rows and --cols (not --size)");
    }
    spec.params = {o.rows, o.cols};
  } else {
    if (o.size <= 0 || o.rows != 0 || o.cols != 0) {
      throw std::invalid_argument("family \"" + o.family + "\" takes --size (not --rows/--cols)");
    }
    spec.params = {o.size};
  }
  const Graph g = generate_family(spec);
  const GraphFormat format =
      o.format == "edgelist" ? GraphFormat::edgelist : GraphFormat::json;
  write_payload(save_graph_string(g, format), o.out_path, out);
  return kExitOk;
}

inline UniformityReport run_certify(const Graph& g, const AnalyzeOptions& o) {
  if (o.k != 0 && o.max_search) {
    throw std::invalid_argument("--k and --max are mutually exclusive");
  }
  EnumerationOptions opts;
  opts.budget = o.budget;
  opts.threads = o.threads;
  std::optional<int> k_target;
  if (o.k != 0) {
    k_target = o.k;
  }
  return certify_uniformity(g, k_target, opts);
}

inline int run_check(const AnalyzeOptions& o, std::istream& in, std::ostream& out) {
  const Graph g = load_graph_arg(o.graph_path, in);
  const UniformityReport report = run_certify(g, o);
  const std::string payload =
      o.pretty ? pretty_report(report) : to_json(report).dump() + "\n";
  write_payload(payload, o.out_path, out);
  return (report.decided_uniform && !*report.decided_uniform) ? kExitPropertyFailed : kExitOk;
}

inline int run_verify(const AnalyzeOptions& o, std::istream& in, std::ostream& out) {
  const Graph g = load_graph_arg(o.graph_path, in);
  if (o.method == "stabilizer") {
    const UniformityReport report = run_certify(g, o);
    OrderedJson j = to_json(report);
    j["method"] = "stabilizer";
    write_payload(o.pretty ? pretty_report(report) : j.dump() + "\n", o.out_path, out);
    return (report.decided_uniform && !*report.decided_uniform) ? kExitPropertyFailed
                                                                : kExitOk;
  }

  const bool dense_method = o.method == "dense";
  const std::size_t n = g.num_vertices();
  if (o.k == 0 && !o.max_search) {
    throw std::invalid_argument("verify needs --k K or --max");
  }
  if (o.k != 0 && o.max_search) {
    throw std::invalid_argument("--k and --max are mutually exclusive");
  }
  if (dense_method && n > o.cap) {
    throw budget_error("graph has n = " + std::to_string(n) +
                       " > dense cap " + std::to_string(o.cap) +
                       "; use --method cutrank or raise --cap");
  }
  const auto scan = [&](int k) {
    return dense_method ? verify_uniformity_dense(g, k, 1e-10, o.cap)
                        : verify_uniformity_cutrank(g, k);
  };

  OrderedJson j;
  j["n"] = n;
  j["method"] = o.method;
  OrderedJson k_results = OrderedJson::object();
  bool holds = true;
  int uniformity = 0;
  if (o.k != 0) {
    const OracleVerdict verdict = scan(o.k);
    j["k"] = o.k;
    j["uniform"] = verdict.uniform;
    k_results[std::to_string(o.k)] = verdict_json(verdict, dense_method);
    holds = verdict.uniform;
  } else {
    const int k_cap = static_cast<int>(n / 2);
    bool exhibited = false;
    for (int k = 1; k <= k_cap; ++k) {
      const OracleVerdict verdict = scan(k);
      k_results[std::to_string(k)] = verdict_json(verdict, dense_method);
      if (!verdict.uniform) {
        exhibited = true;
        break;
      }
      uniformity = k;
    }
    j["uniformity"] = uniformity;
    j["exact"] = true;  // failure exhibited or the floor(n/2) ceiling reached
    j["ame"] = !exhibited && uniformity == k_cap && uniformity >= 1;
  }
  j["k_results"] = k_results;

  std::string payload;
  if (o.pretty) {
    std::ostringstream text;
    text << "n: " << n << ", method: " << o.method << '\n';
    if (o.k != 0) {
      text << "k=" << o.k << ": " << (holds ? "uniform" : "not uniform") << '\n';
    } else {
      text << "uniformity: " << uniformity << '\n';
    }
    payload = text.str();
  } else {
    payload = j.dump() + "\n";
  }
  write_payload(payload, o.out_path, out);
  return holds ? kExitOk : kExitPropertyFailed;
}

inline int run_crosscheck(const AnalyzeOptions& o, std::istream& in, std::ostream& out) {
  const Graph g = load_graph_arg(o.graph_path, in);
  const std::size_t n = g.num_vertices();
  const int k_cap = static_cast<int>(n / 2);
  if (o.k != 0 && (o.k < 1 || o.k > k_cap)) {
    throw std::invalid_argument("crosscheck: k must be in [1, " + std::to_string(k_cap) + "]");
  }
  std::vector<int> ks;
  if (o.k != 0) {
    ks.push_back(o.k);
  } else {
    for (int k = 1; k <= k_cap; ++k) {
      ks.push_back(k);
    }
  }
  const bool dense_applicable = n <= o.cap;

  EnumerationOptions opts;
  opts.budget = o.budget;
  opts.threads = o.threads;
  const UniformityReport report = certify_uniformity(g, std::nullopt, opts);

  OrderedJson j;
  j["n"] = n;
  OrderedJson methods = OrderedJson::array();
  methods.push_back("stabilizer");
  if (dense_applicable) {
    methods.push_back("dense");
  }
  methods.push_back("cutrank");
  j["methods"] = methods;

  bool agree = true;
  OrderedJson verdicts = OrderedJson::object();
  for (int k : ks) {
    OrderedJson row = OrderedJson::object();
    std::optional<bool> stab;
    if (!report.truncated || k <= report.uniformity) {
      stab = k <= report.uniformity;
    }
    row["stabilizer"] = stab ? OrderedJson(*stab) : OrderedJson(nullptr);
    const bool dense_verdict =
        dense_applicable ? verify_uniformity_dense(g, k, 1e-10, o.cap).uniform : false;
    if (dense_applicable) {
      row["dense"] = dense_verdict;
    }
    const bool cut_verdict = verify_uniformity_cutrank(g, k).uniform;
    row["cutrank"] = cut_verdict;
    if (stab && *stab != cut_verdict) {
      agree = false;
    }
    if (dense_applicable && dense_verdict != cut_verdict) {
      agree = false;
    }
    if (stab && dense_applicable && *stab != dense_verdict) {
      agree = false;
    }
    verdicts[std::to_string(k)] = row;
  }
  j["verdicts"] = verdicts;
  j["agree"] = agree;
  if (o.pretty) {
    std::ostringstream text;
    text << "n: " << n << '\n';
    for (int k : ks) {
      text << "k=" << k << ": ";
      const auto& row = verdicts[std::to_string(k)];
      bool first = true;
      for (const auto& [method, verdict] : row.items()) {
        if (!first) {
          text << ", ";
        }
        first = false;
        text << method << "="
             << (verdict.is_null() ? "unknown" : (verdict.get<bool>() ? "true" : "false"));
      }
      text << '\n';
    }
    text << (agree ? "all methods agree" : "METHODS DISAGREE") << '\n';
    write_payload(text.str(), o.out_path, out);
  } else {
    write_payload(j.dump() + "\n", o.out_path, out);
  }
  return agree ? kExitOk : kExitPropertyFailed;
}

inline int run_expand(const AnalyzeOptions& o, std::istream& in, std::ostream& out) {
  const Graph g = load_graph_arg(o.graph_path, in);
  std::string payload;
  for (const PauliWord& word : bloch_expansion(g)) {
    payload += word.str();
    payload += '\n';
  }
  write_payload(payload, o.out_path, out);
  return kExitOk;
}

inline int run_circuit(const AnalyzeOptions& o, std::istream& in, std::ostream& out) {
  const Graph g = load_graph_arg(o.graph_path, in);
  const CircuitFormat format =
      o.format == "qasm2" ? CircuitFormat::qasm2 : CircuitFormat::plain;
  write_payload(render(emit_circuit(g), format), o.out_path, out);
  return kExitOk;
}

inline int run_adjacency(const AnalyzeOptions& o, std::istream& in, std::ostream& out) {
  const Graph g = load_graph_arg(o.graph_path, in);
  write_payload(adjacency_display(g), o.out_path, out);
  return kExitOk;
}

}  // namespace detail

/// Parses and executes one CLI invocation. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"graph state construction and k-uniformity certification"};
  app.name("kuniform");
  app.require_subcommand(1);

  detail::GenOptions gen_opts;
  CLI::App* gen = app.add_subcommand("gen", "generate a graph from a named family");
  gen->add_option("--family", gen_opts.family, "matching|complete|cycle|bilayer|torus")
      ->required()
      ->check(CLI::IsMember({"matching", "complete", "cycle", "bilayer", "torus"}));
  gen->add_option("--size", gen_opts.size, "vertex count (layer size for bilayer)");
  gen->add_option("--rows", gen_opts.rows, "torus rows");
  gen->add_option("--cols", gen_opts.cols, "torus columns");
  gen->add_option("--format", gen_opts.format)->check(CLI::IsMember({"json", "edgelist"}));
  gen->add_option("--out", gen_opts.out_path, "output file (default stdout)");

  const auto add_graph_option = [](CLI::App* cmd, detail::AnalyzeOptions& o) {
    cmd->add_option("--graph", o.graph_path, "graph file, or - for stdin")->required();
  };

  detail::AnalyzeOptions check_opts;
  CLI::App* check = app.add_subcommand("check", "certify uniformity by stabilizer weights");
  add_graph_option(check, check_opts);
  check->add_option("--k", check_opts.k, "decide k-uniformity instead of searching");
  check->add_flag("--max", check_opts.max_search, "search for the exact uniformity (default)");
  check->add_option("--budget", check_opts.budget, "max enumerated subsets");
  check->add_option("--threads", check_opts.threads, "worker threads (0 = auto)");
  check->add_flag("--pretty", check_opts.pretty, "human-readable output");
  check->add_option("--out", check_opts.out_path);

  detail::AnalyzeOptions verify_opts;
  CLI::App* verify = app.add_subcommand("verify", "verify uniformity with an oracle");
  add_graph_option(verify, verify_opts);
  verify->add_option("--k", verify_opts.k, "verify k-uniformity");
  verify->add_flag("--max", verify_opts.max_search, "scan k = 1..floor(n/2)");
  verify->add_option("--method", verify_opts.method)
      ->check(CLI::IsMember({"stabilizer", "dense", "cutrank"}));
  verify->add_option("--cap", verify_opts.cap, "dense amplitude cap (default 14 qubits)");
  verify->add_option("--budget", verify_opts.budget, "stabilizer method subset budget");
  verify->add_option("--threads", verify_opts.threads);
  verify->add_flag("--pretty", verify_opts.pretty);
  verify->add_option("--out", verify_opts.out_path);

  detail::AnalyzeOptions cross_opts;
  CLI::App* crosscheck =
      app.add_subcommand("crosscheck", "run all methods and compare verdicts");
  add_graph_option(crosscheck, cross_opts);
  crosscheck->add_option("--k", cross_opts.k, "single k (default: every k up to floor(n/2))");
  crosscheck->add_option("--cap", cross_opts.cap);
  crosscheck->add_option("--budget", cross_opts.budget);
  crosscheck->add_option("--threads", cross_opts.threads);
  crosscheck->add_flag("--pretty", cross_opts.pretty);
  crosscheck->add_option("--out", cross_opts.out_path);

  detail::AnalyzeOptions expand_opts;
  CLI::App* expand = app.add_subcommand("expand", "print the signed stabilizer expansion");
  add_graph_option(expand, expand_opts);
  expand->add_option("--out", expand_opts.out_path);

  detail::AnalyzeOptions circuit_opts;
  CLI::App* circuit = app.add_subcommand("circuit", "print the preparation circuit");
  add_graph_option(circuit, circuit_opts);
  circuit->add_option("--format", circuit_opts.format)
      ->check(CLI::IsMember({"plain", "qasm2"}));
  circuit->add_option("--out", circuit_opts.out_path);

  detail::AnalyzeOptions adjacency_opts;
  CLI::App* adjacency = app.add_subcommand("adjacency", "print the letter adjacency matrix");
  add_graph_option(adjacency, adjacency_opts);
  adjacency->add_option("--out", adjacency_opts.out_path);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    detail::emit_error(err, e.what(), kExitUsage);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(gen)) {
      return detail::run_gen(gen_opts, out);
    }
    if (app.got_subcommand(check)) {
      return detail::run_check(check_opts, in, out);
    }
    if (app.got_subcommand(verify)) {
      return detail::run_verify(verify_opts, in, out);
    }
    if (app.got_subcommand(crosscheck)) {
      return detail::run_crosscheck(cross_opts, in, out);
    }
    if (app.got_subcommand(expand)) {
      return detail::run_expand(expand_opts, in, out);
    }
    if (app.got_subcommand(circuit)) {
      return detail::run_circuit(circuit_opts, in, out);
    }
    if (app.got_subcommand(adjacency)) {
      return detail::run_adjacency(adjacency_opts, in, out);
    }
    detail::emit_error(err, "no subcommand", kExitUsage);
    return kExitUsage;
  } catch (const budget_error& e) {
    detail::emit_error(err, e.what(), kExitBudget);
    return kExitBudget;
  } catch (const std::exception& e) {
    detail::emit_error(err, e.what(), kExitUsage);
    return kExitUsage;
  }
}

}  // namespace kuniform::cli
