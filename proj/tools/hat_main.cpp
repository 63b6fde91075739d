#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "hat/aut.hpp"
#include "hat/coverings.hpp"
#include "hat/families.hpp"
#include "hat/graph.hpp"
#include "hat/symmetry.hpp"
#include "hat/verify.hpp"

namespace {

using namespace hat;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kBigThreshold = 2000;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// A graph input is either a family spec or a path to a graph6 / edge-list file.
Graph load_graph(const std::string& input) {
  std::ifstream probe(input);
  if (!probe.good()) return graph_from_family_spec(input);
  std::string text = slurp(input);
  std::istringstream is(text);
  std::string first;
  std::getline(is, first);
  std::istringstream head(first);
  long a, b;
  if (head >> a >> b) return read_edge_list(text);
  while (!first.empty() && (first.back() == '\r' || first.back() == '\n')) first.pop_back();
  return decode_graph6(first);
}

void emit_graph(const Graph& g, const std::string& format, const std::string& out_path) {
  std::string payload;
  if (format == "graph6")
    payload = encode_graph6(g) + "\n";
  else if (format == "edgelist")
    payload = write_edge_list(g);
  else
    throw std::invalid_argument("unknown format: " + format);
  if (out_path.empty()) {
    std::cout << payload;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write file: " + out_path);
    out << payload;
  }
}

void guard_big(const Graph& g, bool big) {
  if (g.vertex_count() > kBigThreshold && !big)
    throw std::invalid_argument("graph has more than 2000 vertices; pass --big to analyze it");
}

int cmd_analyze(const std::string& input, bool big) {
  Graph g = load_graph(input);
  guard_big(g, big);
  auto t0 = std::chrono::steady_clock::now();
  AnalysisReport r = analyze_graph(g);
  auto t1 = std::chrono::steady_clock::now();
  std::cout << format_report(r);
  std::cerr << "elapsed=" << std::chrono::duration<double>(t1 - t0).count() << "s\n";
  return kExitOk;
}

int cmd_census(const std::string& path, bool big) {
  std::istringstream in(slurp(path));
  std::string line;
  std::cout << "idx\tn\tvt\tet\tat\that\taut_order\n";
  int idx = 0, hat_rows = 0, errors = 0, rows = 0;
  auto b = [](bool v) { return v ? "true" : "false"; };
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    if (line.empty()) continue;
    ++idx;
    try {
      Graph g = decode_graph6(line);
      guard_big(g, big);
      AnalysisReport r = analyze_graph(g);
      ++rows;
      hat_rows += r.profile.half_arc_transitive;
      std::cout << idx << '\t' << r.n << '\t' << b(r.profile.vertex_transitive) << '\t'
                << b(r.profile.edge_transitive) << '\t' << b(r.profile.arc_transitive) << '\t'
                << b(r.profile.half_arc_transitive) << '\t' << r.aut_order << '\n';
    } catch (const std::exception& e) {
      ++errors;
      std::cout << idx << "\tERROR\t" << e.what() << '\n';
    }
  }
  std::cout << "# graphs=" << rows << " hat=" << hat_rows << " errors=" << errors << '\n';
  return kExitOk;
}

int cmd_cover(const std::string& base_spec, const std::string& group_csv,
              const std::string& volts_path, bool search, std::uint64_t seed,
              std::uint64_t tries, const std::string& out_path, const std::string& format) {
  Graph base = load_graph(base_spec);
  if (!is_connected(base)) throw std::invalid_argument("cover: base must be connected");
  std::vector<int> factors;
  {
    std::string csv = group_csv;
    std::replace(csv.begin(), csv.end(), ',', ' ');
    std::istringstream is(csv);
    int k;
    while (is >> k) factors.push_back(k);
    if (factors.empty()) throw std::invalid_argument("cover: empty voltage group");
  }
  FiniteAbelianGroup group(factors);
  auto b = [](bool v) { return v ? "true" : "false"; };

  if (!search) {
    VoltageAssignment xi = volts_path.empty() ? identity_voltage(base, group)
                                              : read_voltage_file(base, slurp(volts_path));
    Graph cover = derived_graph(xi);
    PermGroup action = voltage_action(xi);
    Quotient q = quotient_graph(cover, action);
    std::cout << "cover_n=" << cover.vertex_count() << '\n'
              << "cover_m=" << cover.edge_count() << '\n'
              << "connected=" << b(is_connected(cover)) << '\n'
              << "regular_covering=" << b(is_regular_covering(cover, action)) << '\n'
              << "quotient_isomorphic_base=" << b(are_isomorphic(q.graph, base).has_value())
              << '\n';
    if (!out_path.empty()) emit_graph(cover, format, out_path);
    return kExitOk;
  }

  std::cout << "seed=" << seed << " tries=" << tries << '\n';
  std::uint64_t connected = 0, hat_found = 0;
  std::optional<Graph> first_hat;
  for (std::uint64_t t = 0; t < tries; ++t) {
    VoltageAssignment xi = random_voltage(base, group, seed + t);
    if (!is_connected_cover(xi)) continue;
    ++connected;
    Graph cover = derived_graph(xi);
    AnalysisReport r = analyze_graph(cover);
    if (r.profile.half_arc_transitive) {
      ++hat_found;
      std::cout << "hat_cover seed=" << seed + t << " n=" << r.n
                << " aut_order=" << r.aut_order << '\n';
      if (!first_hat) first_hat = cover;
    }
  }
  std::cout << "connected_covers=" << connected << '\n'
            << "hat_covers=" << hat_found << '\n';
  if (first_hat && !out_path.empty()) emit_graph(*first_hat, format, out_path);
  return kExitOk;
}

int cmd_quotient(const std::string& input, int sylow_p, const std::string& perms_path,
                 const std::string& out_path, const std::string& format, bool big) {
  Graph g = load_graph(input);
  guard_big(g, big);
  PermGroup n = PermGroup::trivial(g.vertex_count());
  if (sylow_p > 0) {
    PermGroup aut = automorphism_group(g);
    auto e = element_of_order(aut, sylow_p, 200000);
    if (!e)
      throw std::invalid_argument("quotient: no element of order " + std::to_string(sylow_p) +
                                  " found");
    n = PermGroup::from_generators(g.vertex_count(), {*e});
  } else if (!perms_path.empty()) {
    std::istringstream in(slurp(perms_path));
    std::vector<Perm> gens;
    std::string line;
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      gens.push_back(parse_perm(line));
    }
    n = PermGroup::from_generators(g.vertex_count(), gens);
  } else {
    throw std::invalid_argument("quotient: pass --sylow P or --by-file FILE");
  }
  Quotient q = quotient_graph(g, n);
  auto b = [](bool v) { return v ? "true" : "false"; };
  std::cout << "group_order=" << n.order() << '\n'
            << "orbits=" << q.cells.size() << '\n'
            << "quotient_n=" << q.graph.vertex_count() << '\n'
            << "quotient_m=" << q.graph.edge_count() << '\n'
            << "regular_covering=" << b(is_regular_covering(g, n)) << '\n';
  if (!out_path.empty()) emit_graph(q.graph, format, out_path);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tetravalent graph symmetry toolkit"};
  app.require_subcommand(1);

  std::string spec, input, out_path, format = "graph6", group_csv, volts_path, perms_path;
  bool big = false, search = false;
  std::uint64_t seed = 0, tries = 20;
  int sylow_p = 0;

  auto* construct = app.add_subcommand("construct", "build a family graph and write it");
  construct->add_option("spec", spec, "family spec, e.g. x:2,12,13 or wreath:6")->required();
  construct->add_option("--format", format, "graph6|edgelist");
  construct->add_option("--out", out_path, "output path (default stdout)");

  auto* analyze = app.add_subcommand("analyze", "symmetry analysis report");
  analyze->add_option("input", input, "family spec or graph file")->required();
  analyze->add_flag("--big", big, "allow graphs with more than 2000 vertices");

  auto* cover = app.add_subcommand("cover", "derived covering graphs over a voltage group");
  cover->add_option("base", spec, "base graph (family spec or file)")->required();
  cover->add_option("--group", group_csv, "cyclic factor orders, e.g. 5 or 3,2")->required();
  cover->add_option("--volts", volts_path, "voltage assignment file");
  cover->add_flag("--search", search, "sample seeded random T-reduced assignments");
  cover->add_option("--seed", seed, "base seed for --search");
  cover->add_option("--tries", tries, "number of sampled assignments");
  cover->add_option("--out", out_path, "write the (first half-arc-transitive) cover here");
  cover->add_option("--format", format, "graph6|edgelist");

  auto* quotient = app.add_subcommand("quotient", "quotient by a semiregular subgroup");
  quotient->add_option("input", input, "family spec or graph file")->required();
  quotient->add_option("--sylow", sylow_p, "quotient by an order-p subgroup of Aut");
  quotient->add_option("--by-file", perms_path, "file of permutations, one [i0 i1 ...] per line");
  quotient->add_option("--out", out_path, "output path for the quotient graph");
  quotient->add_option("--format", format, "graph6|edgelist");
  quotient->add_flag("--big", big, "allow graphs with more than 2000 vertices");

  auto* census = app.add_subcommand("census", "classify a file of graph6 lines");
  census->add_option("file", input, "graph6 file, one graph per line")->required();
  census->add_flag("--big", big, "allow graphs with more than 2000 vertices");

  auto* verify = app.add_subcommand("verify", "run the verification battery");
  verify->add_flag("--big", big, "include the 732-vertex criterion");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (construct->parsed()) {
      emit_graph(graph_from_family_spec(spec), format, out_path);
      return kExitOk;
    }
    if (analyze->parsed()) return cmd_analyze(input, big);
    if (cover->parsed()) {
      if (!search && volts_path.empty())
        throw std::invalid_argument("cover: pass --volts FILE or --search");
      return cmd_cover(spec, group_csv, volts_path, search, seed, tries, out_path, format);
    }
    if (quotient->parsed()) return cmd_quotient(input, sylow_p, perms_path, out_path, format, big);
    if (census->parsed()) return cmd_census(input, big);
    if (verify->parsed()) {
      int failures = hat::run_acceptance(std::cout, big);
      return failures == 0 ? kExitOk : kExitVerifyFail;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerifyFail;
  }
  return kExitOk;
}
