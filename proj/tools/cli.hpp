#pragma once

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sdim/sdim.hpp"

namespace sdim::cli {

inline constexpr std::string_view kVersion = "sdim 1.0.0";

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kMismatch = 3,
  kCap = 4,
};

// Failure that has already been reported with its ERROR: prefix.
struct Abort {
  int code;
};

struct Flags {
  bool json = false;
  bool csv = false;
  bool witness = false;
  bool check = false;
  bool reduced = false;
  bool no_timing = false;
  bool corpus = false;
  bool trust_cayley = false;
  std::size_t oracle_cap = kDefaultOracleCap;
  std::size_t closure_cap = 5040;
  std::string target;
  std::string format;
  std::string family;
  std::string range;
  std::string output;
  std::uint64_t prime = 2;
};

class Runner {
 public:
  Runner(const Flags& flags, std::ostream& out, std::ostream& err) : flags_(flags), out_(out), err_(err) {}

  int compute();
  int oracle();
  int compare();
  int table();
  int witness();
  int classify();
  int export_graph();

 private:
  using Clock = std::chrono::steady_clock;

  static bool is_graph_file(const std::string& t) {
    return t.ends_with(".json") || t.ends_with(".g6") || t.ends_with(".graph6");
  }

  Graph load_graph(const std::string& path) const {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Parse, "cannot open graph file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    if (path.ends_with(".json")) return parse_edge_list_json(buf.str());
    return from_graph6(buf.str());
  }

  Group load_group(const std::string& spec) const {
    BuildOptions options;
    options.closure_cap = flags_.closure_cap;
    options.trust_large_cayley = flags_.trust_cayley;
    return build_group(parse_group_spec(spec), options);
  }

  std::string elapsed_ms(Clock::time_point start) const {
    std::ostringstream os;
    os << std::fixed << std::setprecision(3)
       << std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return os.str();
  }

  static std::string join(const std::vector<Vertex>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
  }

  [[noreturn]] void fail(int code, std::string_view prefix, const std::string& message) const {
    err_ << "ERROR:" << prefix << ": " << message << "\n";
    throw Abort{code};
  }

  void print_result(const SdimResult& r, const std::string& name, std::size_t order,
                    const std::optional<nlohmann::ordered_json>& check, Clock::time_point start) {
    SdimResult shown = r;
    if (!flags_.witness) shown.witness.reset();
    if (flags_.json) {
      auto j = result_to_json(shown, name, order);
      if (check) j["check"] = *check;
      if (!flags_.no_timing) j["elapsed_ms"] = std::stod(elapsed_ms(start));
      out_ << j.dump() << "\n";
      return;
    }
    out_ << "group     " << name << "\n"
         << "order     " << order << "\n"
         << "sdim      " << r.value << "\n"
         << "omega(R)  " << (r.omega_reduced ? std::to_string(*r.omega_reduced) : "-") << "\n"
         << "method    " << to_string(r.method) << "\n";
    if (r.closed_form) out_ << "closed    " << to_string(*r.closed_form) << "\n";
    if (shown.witness) out_ << "witness   " << join(*shown.witness) << "\n";
    out_ << "verified  " << (r.verified ? "true" : "false") << "\n";
    if (r.note) out_ << "note      " << *r.note << "\n";
    if (check) {
      out_ << "oracle    " << ((*check)["oracle"].is_null() ? "skipped (above cap)" : (*check)["oracle"].dump())
           << "\n"
           << "check     " << ((*check)["passed"].get<bool>() ? "passed" : "FAILED") << "\n";
    }
    if (!flags_.no_timing) out_ << "time_ms   " << elapsed_ms(start) << "\n";
  }

  struct MethodRow {
    std::string method;
    std::optional<std::size_t> value;  // nullopt: skipped
    std::string time_ms;
  };

  std::vector<MethodRow> method_rows(const Group& g);

  const Flags& flags_;
  std::ostream& out_;
  std::ostream& err_;
};

inline int Runner::compute() {
  const auto start = Clock::now();
  if (is_graph_file(flags_.target)) {
    Graph graph = load_graph(flags_.target);
    SdimResult r = has_diameter_at_most_two(graph) ? sdim_via_reduction(graph) : sdim_oracle(graph, flags_.oracle_cap);
    std::optional<nlohmann::ordered_json> check;
    bool passed = true;
    if (flags_.check) {
      nlohmann::ordered_json c;
      c["oracle"] = nullptr;
      passed = r.verified;
      if (graph.size() <= flags_.oracle_cap) {
        auto o = sdim_oracle(graph, flags_.oracle_cap);
        c["oracle"] = o.value;
        passed = passed && o.value == r.value;
      }
      c["passed"] = passed;
      check = c;
    }
    print_result(r, flags_.target, graph.size(), check, start);
    if (!passed) fail(kMismatch, "MISMATCH", "check failed for " + flags_.target);
    return kOk;
  }

  Group g = load_group(flags_.target);
  const std::string name = to_string(g.spec());
  SdimResult r = sdim_group(g);
  std::optional<nlohmann::ordered_json> check;
  bool passed = true;
  if (flags_.check) {
    nlohmann::ordered_json c;
    c["oracle"] = nullptr;
    passed = r.verified && r.witness && r.witness->size() == r.value;
    if (g.order() <= flags_.oracle_cap) {
      auto o = sdim_oracle(power_graph(g), flags_.oracle_cap);
      c["oracle"] = o.value;
      passed = passed && o.value == r.value;
    }
    c["passed"] = passed;
    check = c;
  }
  print_result(r, name, g.order(), check, start);
  if (!passed) fail(kMismatch, "MISMATCH", "check failed for " + name);
  return kOk;
}

inline int Runner::oracle() {
  const auto start = Clock::now();
  Graph graph;
  std::string name = flags_.target;
  if (is_graph_file(flags_.target)) {
    graph = load_graph(flags_.target);
  } else {
    Group g = load_group(flags_.target);
    name = to_string(g.spec());
    graph = power_graph(g);
  }
  SdimResult r = sdim_oracle(graph, flags_.oracle_cap);
  print_result(r, name, graph.size(), std::nullopt, start);
  return kOk;
}

inline std::vector<Runner::MethodRow> Runner::method_rows(const Group& g) {
  std::vector<MethodRow> rows;
  auto start = Clock::now();
  const auto fam = maximal_cyclic_subgroups(g);
  const std::size_t n = g.order();
  const std::size_t omega = n >= 2 ? omega_reduced_group(g, fam) : 1;
  const std::string theorem_ms = elapsed_ms(start);

  start = Clock::now();
  auto forms = closed_forms(g, fam);
  const std::string forms_ms = elapsed_ms(start);
  for (const auto& cf : forms) rows.push_back({std::string(to_string(cf.tag)), cf.value, forms_ms});
  rows.push_back({"GroupTheorem", n - omega, theorem_ms});

  start = Clock::now();
  Graph graph = power_graph(g);
  auto red = sdim_via_reduction(graph);
  rows.push_back({"Diameter2Reduction", red.value, elapsed_ms(start)});

  if (n <= flags_.oracle_cap) {
    start = Clock::now();
    auto o = sdim_oracle(graph, flags_.oracle_cap);
    rows.push_back({"GenericOracle", o.value, elapsed_ms(start)});
  } else {
    rows.push_back({"GenericOracle", std::nullopt, "-"});
  }
  return rows;
}

inline int Runner::compare() {
  std::vector<std::string> targets;
  if (flags_.corpus) {
    for (auto s : builtin_corpus()) targets.emplace_back(s);
  } else {
    targets.push_back(flags_.target);
  }
  bool all_agree = true;
  for (const auto& target : targets) {
    Group g = load_group(target);
    const std::string name = to_string(g.spec());
    auto rows = method_rows(g);
    std::optional<std::size_t> reference;
    bool agree = true;
    for (const auto& row : rows) {
      if (!row.value) continue;
      if (!reference) reference = row.value;
      agree = agree && *row.value == *reference;
    }
    all_agree = all_agree && agree;

    if (flags_.corpus) {
      out_ << std::left << std::setw(12) << name << " order " << std::setw(4) << g.order() << " sdim "
           << std::setw(4) << *reference << (agree ? " agree" : " MISMATCH") << "\n";
      continue;
    }
    out_ << "group " << name << " (order " << g.order() << ")\n";
    for (const auto& row : rows) {
      const std::string value = row.value ? std::to_string(*row.value) : std::string("skipped");
      out_ << std::left << std::setw(30) << row.method;
      if (flags_.no_timing)
        out_ << value;
      else
        out_ << std::setw(8) << value << row.time_ms << " ms";
      out_ << "\n";
    }
    out_ << (agree ? "agree" : "MISMATCH") << "\n";
  }
  if (!all_agree) fail(kMismatch, "MISMATCH", "methods disagree");
  return kOk;
}

inline int Runner::table() {
  const auto dots = flags_.range.find("..");
  if (dots == std::string::npos) fail(kUsage, "PARSE", "range must look like lo..hi");
  std::uint64_t lo = 0, hi = 0;
  try {
    std::size_t used = 0;
    lo = std::stoull(flags_.range.substr(0, dots), &used);
    if (used != dots) throw std::invalid_argument("lo");
    const std::string rest = flags_.range.substr(dots + 2);
    hi = std::stoull(rest, &used);
    if (used != rest.size()) throw std::invalid_argument("hi");
  } catch (const std::exception&) {
    fail(kUsage, "PARSE", "range must look like lo..hi");
  }
  if (lo > hi) fail(kUsage, "PARSE", "empty range " + flags_.range);

  auto spec_for = [&](std::uint64_t k) -> std::string {
    if (flags_.family == "cyclic") return "Z" + std::to_string(k);
    if (flags_.family == "dihedral") return "D" + std::to_string(2 * k);
    if (flags_.family == "quaternion") return "Q" + std::to_string(4 * k);
    return "E" + std::to_string(flags_.prime) + "^" + std::to_string(k);
  };
  // Validate every row's spec before printing anything.
  std::vector<GroupSpec> specs;
  for (std::uint64_t k = lo; k <= hi; ++k) specs.push_back(parse_group_spec(spec_for(k)));

  const char sep = flags_.csv ? ',' : '\t';
  out_ << "param" << sep << "group" << sep << "order" << sep << "sdim" << sep << "omega_reduced" << sep << "method"
       << sep << "oracle\n";
  bool ok = true;
  for (std::uint64_t k = lo; k <= hi; ++k) {
    Group g = build_group(specs[k - lo]);
    SdimResult r = sdim_group(g, {.witness = false});
    std::string oracle_cell = "-";
    if (g.order() <= flags_.oracle_cap) {
      auto o = sdim_oracle(power_graph(g), flags_.oracle_cap);
      oracle_cell = std::to_string(o.value);
      ok = ok && o.value == r.value;
    }
    out_ << k << sep << to_string(g.spec()) << sep << g.order() << sep << r.value << sep
         << (r.omega_reduced ? std::to_string(*r.omega_reduced) : "-") << sep << to_string(r.method) << sep
         << oracle_cell << "\n";
  }
  if (!ok) fail(kMismatch, "MISMATCH", "oracle disagrees with the table");
  return kOk;
}

inline int Runner::witness() {
  Group g = load_group(flags_.target);
  const std::string name = to_string(g.spec());
  SdimResult r = sdim_group(g);
  const Graph graph = power_graph(g);
  nlohmann::ordered_json j;
  j["group"] = name;
  j["order"] = g.order();
  j["sdim"] = r.value;
  j["witness"] = *r.witness;
  j["verified"] = r.verified;

  auto clique_ok = [&](const std::vector<Element>& s) {
    for (std::size_t a = 0; a < s.size(); ++a)
      for (std::size_t b = a + 1; b < s.size(); ++b)
        if (!graph.adjacent(s[a], s[b]) || graph.closed_neighborhood(s[a]) == graph.closed_neighborhood(s[b]))
          return false;
    return true;
  };

  nlohmann::ordered_json cliques = nlohmann::ordered_json::array();
  if (g.order() >= 2 && is_cyclic(g)) {
    auto w = clique_witness_cyclic(g.order());
    nlohmann::ordered_json c;
    c["kind"] = "cyclic";
    c["orders"] = w.orders;
    if (g.spec().is<spec::Cyclic>()) {
      c["elements"] = w.elements;
      c["clique_in_reduced_graph"] = clique_ok(w.elements);
    }
    cliques.push_back(c);
  } else if (g.order() >= 2) {
    const auto fam = maximal_cyclic_subgroups(g);
    for (auto p : factorize(g.order()).primes()) {
      if (fam.of_prime(p).empty()) continue;
      auto s = clique_witness_alpha_p(g, fam, p);
      nlohmann::ordered_json c;
      c["kind"] = "alpha_p";
      c["prime"] = p;
      c["alpha_p"] = alpha_p(g, fam, p);
      c["elements"] = s;
      c["clique_in_reduced_graph"] = clique_ok(s);
      cliques.push_back(c);
    }
  }
  j["cliques"] = cliques;

  if (flags_.json) {
    out_ << j.dump() << "\n";
  } else {
    out_ << "group     " << name << "\n"
         << "sdim      " << r.value << "\n"
         << "witness   " << join(*r.witness) << "\n"
         << "verified  " << (r.verified ? "true" : "false") << "\n";
    for (const auto& c : cliques) {
      out_ << "clique    " << c["kind"].get<std::string>();
      if (c.contains("prime")) out_ << " p=" << c["prime"].get<std::uint64_t>() << " alpha=" << c["alpha_p"].get<int>();
      out_ << " orders/elements=" << (c.contains("elements") ? c["elements"].dump() : c["orders"].dump());
      if (c.contains("clique_in_reduced_graph"))
        out_ << (c["clique_in_reduced_graph"].get<bool>() ? " ok" : " NOT A CLIQUE OF R");
      out_ << "\n";
    }
  }
  if (!r.verified) fail(kMismatch, "MISMATCH", "witness failed verification");
  for (const auto& c : cliques)
    if (c.contains("clique_in_reduced_graph") && !c["clique_in_reduced_graph"].get<bool>())
      fail(kMismatch, "MISMATCH", "constructive clique is not a clique of the reduced graph");
  return kOk;
}

inline int Runner::classify() {
  Group g = load_group(flags_.target);
  const std::string name = to_string(g.spec());
  auto c = classify_n_minus_2(g);
  if (flags_.json) {
    nlohmann::ordered_json j;
    j["group"] = name;
    j["order"] = g.order();
    j["sdim_is_n_minus_2"] = c.matches;
    j["class"] = c.label ? nlohmann::ordered_json(std::string(to_string(*c.label))) : nlohmann::ordered_json(nullptr);
    out_ << j.dump() << "\n";
  } else {
    out_ << name << ": sdim = n-2 " << (c.matches ? "yes" : "no");
    if (c.label) out_ << " (class " << to_string(*c.label) << ")";
    out_ << "\n";
  }
  return kOk;
}

inline int Runner::export_graph() {
  Graph graph;
  std::optional<std::vector<std::uint64_t>> orders;
  if (is_graph_file(flags_.target)) {
    graph = load_graph(flags_.target);
  } else {
    Group g = load_group(flags_.target);
    graph = power_graph(g);
    orders = element_orders(g);
  }
  DotOptions dot;
  if (flags_.reduced) {
    ReducedGraph red = reduced_graph(graph);
    std::vector<std::size_t> sizes;
    for (std::size_t c = 0; c < red.representatives.size(); ++c) sizes.push_back(red.class_size(c));
    dot.class_sizes = sizes;
    dot.vertex_names = red.representatives;
    dot.name = "R";
    graph = red.quotient;
  }
  dot.element_orders = orders;

  std::ostringstream body;
  if (flags_.format == "graph6") {
    if (graph.size() > kGraph6MaxVertices)
      fail(kUsage, "CAP", "graph6 export supports at most 62 vertices, graph has " + std::to_string(graph.size()));
    body << to_graph6(graph) << "\n";
  } else if (flags_.format == "json") {
    body << graph_to_json(graph).dump() << "\n";
  } else {
    write_dot(body, graph, dot);
  }
  if (flags_.output.empty()) {
    out_ << body.str();
  } else {
    std::ofstream file(flags_.output);
    if (!file) fail(kUsage, "PARSE", "cannot write '" + flags_.output + "'");
    file << body.str();
  }
  return kOk;
}

// Entry point shared by the binary and the tests. `args` excludes argv[0].
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Strong metric dimension of power graphs of finite groups", "sdim"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));
  Flags f;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--oracle-cap", f.oracle_cap, "Largest vertex count the generic oracle accepts")
        ->check(CLI::PositiveNumber);
    sub->add_option("--closure-cap", f.closure_cap, "Largest permutation group closure")->check(CLI::PositiveNumber);
    sub->add_flag("--trust-cayley", f.trust_cayley, "Skip associativity checks for Cayley files above 128 elements");
    sub->add_flag("--no-timing", f.no_timing, "Omit timings");
  };

  auto* compute = app.add_subcommand("compute", "Compute sdim of a group or graph");
  compute->add_option("target", f.target, "Group spec or graph file (.json, .g6)")->required();
  compute->add_flag("--json", f.json, "JSON output");
  compute->add_flag("--witness", f.witness, "Include the minimum strong resolving set");
  compute->add_flag("--check", f.check, "Verify the witness and cross-check with the oracle");
  add_common(compute);

  auto* oracle = app.add_subcommand("oracle", "Run the generic oracle only");
  oracle->add_option("target", f.target, "Group spec or graph file (.json, .g6)")->required();
  oracle->add_flag("--json", f.json, "JSON output");
  oracle->add_flag("--witness", f.witness, "Include the minimum strong resolving set");
  add_common(oracle);

  auto* compare = app.add_subcommand("compare", "Compare every applicable method");
  auto* compare_target = compare->add_option("target", f.target, "Group spec");
  auto* corpus_flag = compare->add_flag("--corpus", f.corpus, "Run over the built-in corpus");
  compare_target->excludes(corpus_flag);
  add_common(compare);

  auto* table = app.add_subcommand("table", "Tabulate a family over a parameter range");
  table->add_option("--family", f.family, "cyclic, dihedral, quaternion or elementary")
      ->required()
      ->check(CLI::IsMember({"cyclic", "dihedral", "quaternion", "elementary"}));
  table->add_option("--range", f.range, "lo..hi")->required();
  table->add_option("--prime", f.prime, "Prime for the elementary family")->check(CLI::PositiveNumber);
  table->add_flag("--csv", f.csv, "CSV output");
  add_common(table);

  auto* witness = app.add_subcommand("witness", "Print the witness and the constructive cliques");
  witness->add_option("target", f.target, "Group spec")->required();
  witness->add_flag("--json", f.json, "JSON output");
  add_common(witness);

  auto* classify = app.add_subcommand("classify", "Decide whether sdim = n - 2");
  classify->add_option("target", f.target, "Group spec")->required();
  classify->add_flag("--json", f.json, "JSON output");
  add_common(classify);

  auto* exp = app.add_subcommand("export", "Export the power graph");
  exp->add_option("target", f.target, "Group spec or graph file")->required();
  exp->add_option("--format", f.format, "dot, graph6 or json")
      ->required()
      ->check(CLI::IsMember({"dot", "graph6", "json"}));
  exp->add_flag("--reduced", f.reduced, "Export the reduced graph instead");
  exp->add_option("-o,--output", f.output, "Write to a file instead of stdout");
  add_common(exp);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    err << "ERROR:PARSE: " << e.what() << "\n";
    return kUsage;
  }
  if (compare->parsed() && !f.corpus && f.target.empty()) {
    err << "ERROR:PARSE: compare needs a group spec or --corpus\n";
    return kUsage;
  }

  Runner runner(f, out, err);
  try {
    if (compute->parsed()) return runner.compute();
    if (oracle->parsed()) return runner.oracle();
    if (compare->parsed()) return runner.compare();
    if (table->parsed()) return runner.table();
    if (witness->parsed()) return runner.witness();
    if (classify->parsed()) return runner.classify();
    return runner.export_graph();
  } catch (const Abort& a) {
    return a.code;
  } catch (const Error& e) {
    switch (e.kind()) {
      case ErrorKind::InternalInconsistency:
        err << "ERROR:MISMATCH: " << e.what() << "\n";
        return kMismatch;
      case ErrorKind::OracleCapExceeded:
        err << "ERROR:CAP: " << e.what() << "\n";
        return kCap;
      case ErrorKind::ClosureTooLarge:
        err << "ERROR:CAP: " << e.what() << "\n";
        return kUsage;
      case ErrorKind::Disconnected:
      case ErrorKind::DiameterTooLarge:
      case ErrorKind::EmptyFamily:
        err << "ERROR:INPUT: " << e.what() << "\n";
        return kUsage;
      default:
        err << "ERROR:PARSE: " << e.what() << "\n";
        return kUsage;
    }
  }
}

}  // namespace sdim::cli
