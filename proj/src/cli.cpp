// Copyright 2026 The wdd authors
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

#include "wdd/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wdd/drawing.hpp"
#include "wdd/errors.hpp"
#include "wdd/linext.hpp"
#include "wdd/report.hpp"

namespace wdd::cli {
namespace {

// Flag combinations CLI11 cannot express are reported through this and
// mapped to exit 1.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string gen_spec;
  std::string input_path;
  std::string out_path;
  std::string format;
  uint64_t cap = 0;  // 0: not set, resolve against WDD_CAP / default
  uint64_t seed = 0;
  uint32_t restarts = 50;
  bool exact = false;
  bool heuristic = false;
  bool timings = false;
};

uint64_t resolve_cap(const Options& o) {
  if (o.cap != 0) return o.cap;
  if (const char* env = std::getenv("WDD_CAP")) {
    uint64_t value = 0;
    const char* end = env + std::strlen(env);
    auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec != std::errc() || ptr != end || value < 1) {
      throw UsageError("WDD_CAP must be a positive integer");
    }
    return value;
  }
  return 100000;
}

Dag load_dag(const Options& o) {
  if (!o.gen_spec.empty()) return parse_generator_spec(o.gen_spec);
  if (o.input_path.empty()) {
    throw UsageError("exactly one of --gen or --input is required");
  }
  std::ifstream file(o.input_path, std::ios::binary);
  if (!file) throw Error("cannot open input file: " + o.input_path);
  std::ostringstream text;
  text << file.rdbuf();
  return parse_edge_list(text.str());
}

void deliver(const std::string& doc, const std::string& path,
             std::ostream& out) {
  if (path.empty()) {
    out << doc;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error("cannot write output file: " + path);
  file << doc;
}

void require_format(const Options& o,
                    std::initializer_list<const char*> allowed) {
  if (o.format.empty()) return;
  for (const char* f : allowed) {
    if (o.format == f) return;
  }
  throw UsageError("unsupported --format for this command: " + o.format);
}

int run_gen(const Options& o, std::ostream& out) {
  if (o.gen_spec.empty()) throw UsageError("gen requires --gen SPEC");
  require_format(o, {"edgelist"});
  deliver(to_edge_list(parse_generator_spec(o.gen_spec)), o.out_path, out);
  return 0;
}

int run_analyze(const Options& o, std::ostream& out) {
  require_format(o, {"text", "json"});
  const Dag g = load_dag(o);
  const Reachability r = transitive_closure(g);
  std::string doc;
  if (o.format == "json") {
    nlohmann::ordered_json j;
    j["n"] = g.vertex_count();
    j["edges"] = g.edge_count();
    j["closure_edges"] = r.closure_edge_count;
    j["inc"] = count_incomparable(r);
    doc = j.dump(2) + "\n";
  } else {
    doc = "n " + std::to_string(g.vertex_count()) + "\n" +
          "edges " + std::to_string(g.edge_count()) + "\n" +
          "closure_edges " + std::to_string(r.closure_edge_count) + "\n" +
          "inc " + std::to_string(count_incomparable(r)) + "\n";
  }
  deliver(doc, o.out_path, out);
  return 0;
}

int run_draw(const Options& o, std::ostream& out) {
  const Dag g = load_dag(o);
  Drawing d = [&] {
    if (o.exact) {
      const SolveReport rep = minfip_exact(g, resolve_cap(o));
      return make_drawing(g, rep.diametral_pair->first,
                          rep.diametral_pair->second);
    }
    if (o.heuristic) {
      const SolveReport rep = minfip_heuristic(g, o.restarts, o.seed);
      return make_drawing(g, rep.diametral_pair->first,
                          rep.diametral_pair->second);
    }
    return diagonal_drawing(g);
  }();
  const std::string format = o.format.empty() ? "coords" : o.format;
  deliver(emit_drawing(d, format), o.out_path, out);
  return 0;
}

int run_led(const Options& o, std::ostream& out) {
  const Dag g = load_dag(o);
  const auto t_total = std::chrono::steady_clock::now();
  const Reachability r = transitive_closure(g);
  SolveReport rep;
  rep.method = "exact";
  rep.inc = count_incomparable(r);
  LedResult led = led_exact(r, resolve_cap(o));
  rep.led = led.led;
  rep.diametral_pair = std::move(led.pair);
  rep.timings_ms.emplace_back(
      "total", std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - t_total)
                   .count());
  deliver(report_to_json(rep, g, o.timings), o.out_path, out);
  return 0;
}

int run_minfip(const Options& o, std::ostream& out) {
  const Dag g = load_dag(o);
  const SolveReport rep = o.heuristic
                              ? minfip_heuristic(g, o.restarts, o.seed)
                              : minfip_exact(g, resolve_cap(o));
  deliver(report_to_json(rep, g, o.timings), o.out_path, out);
  return 0;
}

int run_dim(const Options& o, std::ostream& out) {
  const Dag g = load_dag(o);
  const auto t_total = std::chrono::steady_clock::now();
  const Reachability r = transitive_closure(g);
  const uint64_t cap = resolve_cap(o);
  ExtensionSet e = enumerate_extensions(r, cap);
  if (e.truncated) {
    throw ExtensionCapExceeded("more than " + std::to_string(cap) +
                               " linear extensions");
  }
  SolveReport rep;
  rep.method = "exact";
  rep.inc = count_incomparable(r);
  const int max_dim = static_cast<int>(std::max<size_t>(g.vertex_count(), 1));
  rep.dim = dimension_exact(r, e, max_dim);
  rep.timings_ms.emplace_back(
      "total", std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - t_total)
                   .count());
  deliver(report_to_json(rep, g, o.timings), o.out_path, out);
  return 0;
}

int run_verify(const Options& o, std::ostream& out) {
  const Dag g = load_dag(o);
  const SolveReport rep = minfip_exact(g, resolve_cap(o));
  if (!rep.bounds) {
    throw MissingDim("dimension search did not complete; bounds unchecked");
  }
  deliver(report_to_json(rep, g, o.timings), o.out_path, out);
  return exit_code_for(*rep.bounds);
}

int run_extgraph(const Options& o, std::ostream& out) {
  const Dag g = load_dag(o);
  const Reachability r = transitive_closure(g);
  const uint64_t cap = resolve_cap(o);
  ExtensionSet e = enumerate_extensions(r, cap);
  if (e.truncated) {
    throw ExtensionCapExceeded("more than " + std::to_string(cap) +
                               " linear extensions");
  }
  const LinExtGraph graph = build_linext_graph(e);
  const std::string edges = export_edges(graph);
  const std::string nodes = export_node_map(graph, g);
  if (o.out_path.empty()) {
    out << edges << nodes;
  } else {
    deliver(edges, o.out_path, out);
    deliver(nodes, o.out_path + ".nodes", out);
  }
  return 0;
}

void add_common_options(CLI::App* cmd, Options& o, bool with_input = true) {
  if (with_input) {
    auto* gen = cmd->add_option("--gen", o.gen_spec,
                                "generator spec: crown:k | chain:n | "
                                "antichain:n | random:n,p,seed");
    auto* input =
        cmd->add_option("--input", o.input_path, "edge-list input file");
    gen->excludes(input);
    input->excludes(gen);
  }
  cmd->add_option("--out", o.out_path, "write output to this path");
  cmd->add_option("--cap", o.cap,
                  "extension/state cap (default 100000, or WDD_CAP)")
      ->check(CLI::PositiveNumber);
}

}  // namespace

Dag parse_generator_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) {
    throw BadSpec("generator spec needs the form name:args, got: " + spec);
  }
  const std::string name = spec.substr(0, colon);
  const std::string rest = spec.substr(colon + 1);

  auto parse_u32 = [&spec](const std::string& text) -> uint32_t {
    uint32_t value = 0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) {
      throw BadSpec("bad integer in generator spec: " + spec);
    }
    return value;
  };

  if (name == "crown") {
    const uint32_t k = parse_u32(rest);
    if (k < 1) throw BadSpec("crown:k needs k >= 1");
    return gen_crown(k);
  }
  if (name == "chain") return gen_chain(parse_u32(rest));
  if (name == "antichain") return gen_antichain(parse_u32(rest));
  if (name == "random") {
    std::vector<std::string> parts;
    std::string token;
    std::istringstream in(rest);
    while (std::getline(in, token, ',')) parts.push_back(token);
    if (parts.size() != 3) {
      throw BadSpec("random spec needs n,p,seed, got: " + spec);
    }
    const uint32_t n = parse_u32(parts[0]);
    double p = 0.0;
    {
      const char* begin = parts[1].data();
      const char* end = begin + parts[1].size();
      auto [ptr, ec] = std::from_chars(begin, end, p);
      if (ec != std::errc() || ptr != end || p < 0.0 || p > 1.0) {
        throw BadSpec("edge probability must be in [0,1], got: " + parts[1]);
      }
    }
    uint64_t seed = 0;
    {
      const char* begin = parts[2].data();
      const char* end = begin + parts[2].size();
      auto [ptr, ec] = std::from_chars(begin, end, seed);
      if (ec != std::errc() || ptr != end) {
        throw BadSpec("bad seed in generator spec: " + spec);
      }
    }
    return gen_random_dag(n, p, seed);
  }
  throw BadSpec("unknown generator: " + name);
}

int exit_code_for(const BoundCheck& check) { return check.all_ok() ? 0 : 4; }

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"weak dominance drawings of DAGs: fip minimization and "
               "linear extension diameter"};
  app.require_subcommand(1);

  Options o;
  int exit_code = 0;

  auto* gen = app.add_subcommand("gen", "emit a generated DAG as an edge list");
  add_common_options(gen, o, /*with_input=*/false);
  gen->add_option("--gen", o.gen_spec, "generator spec")->required();
  gen->add_option("--format", o.format, "edgelist");
  gen->callback([&] { exit_code = run_gen(o, out); });

  auto* analyze =
      app.add_subcommand("analyze", "print n, |E|, |E*| and inc of a DAG");
  add_common_options(analyze, o);
  analyze->add_option("--format", o.format, "text | json");
  analyze->callback([&] { exit_code = run_analyze(o, out); });

  auto* draw = app.add_subcommand(
      "draw", "emit a weak dominance drawing (diagonal by default)");
  add_common_options(draw, o);
  draw->add_option("--format", o.format, "coords | svg");
  auto* dx = draw->add_flag("--exact", o.exact, "draw an exact-optimal pair");
  auto* dh =
      draw->add_flag("--heuristic", o.heuristic, "draw a heuristic pair");
  dx->excludes(dh);
  dh->excludes(dx);
  draw->add_option("--restarts", o.restarts, "heuristic restarts")
      ->check(CLI::PositiveNumber);
  draw->add_option("--seed", o.seed, "heuristic seed");
  draw->callback([&] { exit_code = run_draw(o, out); });

  auto* led =
      app.add_subcommand("led", "exact linear extension diameter report");
  add_common_options(led, o);
  led->add_flag("--timings", o.timings, "include timings_ms in the JSON");
  led->callback([&] { exit_code = run_led(o, out); });

  auto* minfip = app.add_subcommand(
      "minfip", "minimum falsely-implied-path report (exact by default)");
  add_common_options(minfip, o);
  auto* mx = minfip->add_flag("--exact", o.exact, "exact search (default)");
  auto* mh = minfip->add_flag("--heuristic", o.heuristic,
                              "restarted hill climbing instead");
  mx->excludes(mh);
  mh->excludes(mx);
  minfip->add_option("--restarts", o.restarts, "heuristic restarts")
      ->check(CLI::PositiveNumber);
  minfip->add_option("--seed", o.seed, "heuristic seed");
  minfip->add_flag("--timings", o.timings, "include timings_ms in the JSON");
  minfip->callback([&] { exit_code = run_minfip(o, out); });

  auto* dim = app.add_subcommand("dim", "exact poset dimension report");
  add_common_options(dim, o);
  dim->add_flag("--timings", o.timings, "include timings_ms in the JSON");
  dim->callback([&] { exit_code = run_dim(o, out); });

  auto* verify = app.add_subcommand(
      "verify", "check the fip bounds; exits 4 on a violation");
  add_common_options(verify, o);
  verify->add_flag("--timings", o.timings, "include timings_ms in the JSON");
  verify->callback([&] { exit_code = run_verify(o, out); });

  auto* extgraph = app.add_subcommand(
      "extgraph", "export the linear extension graph and its node map");
  add_common_options(extgraph, o);
  extgraph->callback([&] { exit_code = run_extgraph(o, out); });

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("wdd");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const UnknownFormat& e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const ExtensionCapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const StateCapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const DimExceedsMax& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const CountOverflow& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const TruncatedInput& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}

}  // namespace wdd::cli
