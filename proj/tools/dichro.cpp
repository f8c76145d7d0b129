// Command-line front end for the dichromatic-number toolkit.
//
//   dichro chi graphs.txt
//   dichro construct --family okl --k 4 --l 3 --format d6
//   dichro census8 --jobs 4 --report census8.txt
//
// Graph files hold sign matrices (blank-line separated) or digraph6 lines;
// "-" reads stdin. Exit codes: 0 success, 1 expected-count mismatch or
// failed witness check, 2 input error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "dichro/canon.hpp"
#include "dichro/constructions.hpp"
#include "dichro/dicolor.hpp"
#include "dichro/enumerate.hpp"
#include "dichro/io.hpp"
#include "dichro/pipeline.hpp"

namespace {

using namespace dichro;

constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;

std::string read_source(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::BadHeader, "cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<Digraph> read_graphs(const std::string& path) {
  std::vector<Digraph> graphs = parse_any(read_source(path));
  if (graphs.empty()) throw Error(ErrorCode::BadLength, "no graphs in '" + path + "'");
  return graphs;
}

Shard parse_shard(const std::string& text) {
  if (text.empty()) return {};
  const auto slash = text.find('/');
  if (slash == std::string::npos) throw Error(ErrorCode::BadChar, "shard must look like i/k");
  Shard s{std::stoi(text.substr(0, slash)), std::stoi(text.substr(slash + 1))};
  if (s.count < 1 || s.index < 0 || s.index >= s.count) throw Error(ErrorCode::BadVertex, "shard index out of range");
  return s;
}

struct Common {
  std::string format = "matrix";
  int jobs = 1;
  std::string shard;
  std::string report_path;
  bool timing = false;

  Format output_format() const { return format == "d6" ? Format::Digraph6 : Format::Matrix; }
  PipelineOptions options() const { return {jobs, parse_shard(shard)}; }
};

void add_common(CLI::App* cmd, Common& common) {
  cmd->add_option("--format", common.format, "Graph output format")->check(CLI::IsMember({"matrix", "d6"}));
  cmd->add_option("--jobs", common.jobs, "Worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--shard", common.shard, "Process shard i of k (i/k)");
  cmd->add_option("--report", common.report_path, "Write the report here instead of stdout");
  cmd->add_flag("--timing", common.timing, "Include wall-clock timing in the report");
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::BadHeader, "cannot write '" + path + "'");
  out << text;
}

// Verifies witnesses, checks the manifest, writes the report.
int finish(CensusReport& report, const Common& common) {
  const Shard shard = parse_shard(common.shard);
  const bool expected = check_expectations(report, shard);
  const std::vector<std::string> problems = verify_report(report);
  write_output(common.report_path, report.serialize(common.timing));
  for (const std::string& note : report.discrepancies) std::cerr << "discrepancy: " << note << "\n";
  for (const std::string& p : problems) std::cerr << "witness check failed: " << p << "\n";
  return expected && problems.empty() ? 0 : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dichromatic numbers, 3-dicritical oriented graphs and tournament censuses"};
  app.require_subcommand(1);
  Common common;
  int exit_code = 0;

  std::string file;
  auto* chi = app.add_subcommand("chi", "Dichromatic number and witness colouring of each graph");
  chi->add_option("file", file, "Graph file or -")->required();
  add_common(chi, common);
  chi->callback([&] {
    std::ostringstream os;
    for (const Digraph& d : read_graphs(file)) {
      const DichromaticResult r = dichromatic_number(d);
      os << "chi " << r.chi << " coloring " << r.witness.to_string() << "\n";
    }
    write_output(common.report_path, os.str());
  });

  int k = 3;
  auto* critical = app.add_subcommand("critical", "Test k-dicriticality of each graph");
  critical->add_option("file", file, "Graph file or -")->required();
  critical->add_option("--k", k, "Number of colours")->check(CLI::Range(2, 16));
  add_common(critical, common);
  critical->callback([&] {
    std::ostringstream os;
    for (const Digraph& d : read_graphs(file))
      os << "critical " << (is_k_dicritical(d, k) ? "yes" : "no") << " k " << k << " prune "
         << (min_degree_prune(d, k) ? "pass" : "fail") << "\n";
    write_output(common.report_path, os.str());
  });

  bool codes = false;
  auto* canon = app.add_subcommand("canon", "Canonical form of each graph");
  canon->add_option("file", file, "Graph file or -")->required();
  canon->add_flag("--codes", codes, "Print canonical codes (hex) instead of graphs");
  add_common(canon, common);
  canon->callback([&] {
    std::vector<Digraph> graphs;
    std::ostringstream os;
    for (const Digraph& d : read_graphs(file)) {
      if (codes) os << canonical_form(d).hex() << "\n";
      graphs.push_back(canonical_digraph(d));
    }
    write_output(common.report_path, codes ? os.str() : emit(graphs, common.output_format()));
  });

  std::string pattern_file;
  std::string host_file;
  bool verbose = false;
  auto* contains = app.add_subcommand("contains", "Does G contain H as a subdigraph?");
  contains->add_option("H", pattern_file, "Pattern graph file")->required();
  contains->add_option("G", host_file, "Host graph file")->required();
  contains->add_flag("--verbose", verbose, "Print an embedding");
  add_common(contains, common);
  contains->callback([&] {
    const Digraph h = read_graphs(pattern_file).front();
    const Digraph g = read_graphs(host_file).front();
    std::ostringstream os;
    if (verbose) {
      const auto embedding = find_embedding(h, g);
      os << (embedding ? "yes" : "no");
      if (embedding)
        for (std::size_t v = 0; v < embedding->size(); ++v) os << " " << v + 1 << "->" << (*embedding)[v] + 1;
      os << "\n";
    } else {
      os << (contains_subdigraph(h, g) ? "yes" : "no") << "\n";
    }
    write_output(common.report_path, os.str());
  });

  int n = 7;
  auto* enum_t = app.add_subcommand("enum-tournaments", "Tournaments on n vertices up to isomorphism");
  enum_t->add_option("--n", n, "Order")->required()->check(CLI::Range(1, 9));
  add_common(enum_t, common);
  enum_t->callback([&] {
    const std::vector<Digraph> ts = tournaments(n, parse_shard(common.shard));
    write_output(common.report_path, emit(ts, common.output_format()));
    std::cerr << ts.size() << " tournaments\n";
  });

  std::string family;
  ConstructionSpec spec;
  auto* construct = app.add_subcommand("construct", "Build one of the 3-dicritical families");
  construct->add_option("--family", family, "s, d1, d1-general, d2, d2-general, d3, okl")->required();
  construct->add_option("--k", spec.k, "k for okl and d2-general");
  construct->add_option("--l", spec.l, "l for okl");
  construct->add_option("--middle", spec.middle_len, "Middle circuit length for d1-general");
  construct->add_option("--outer", spec.outer_lens, "Outer circuit lengths for d1-general")->delimiter(',');
  add_common(construct, common);
  construct->callback([&] {
    spec.family = parse_family(family);
    const Digraph d = build(spec);
    write_output(common.report_path, emit(std::span<const Digraph>(&d, 1), common.output_format()));
  });

  auto* census7 = app.add_subcommand("census7", "3-dichromatic 7-vertex tournaments and 7-vertex 3-dicritical graphs");
  add_common(census7, common);
  census7->callback([&] {
    CensusReport report = census_7(common.options());
    exit_code = finish(report, common);
  });

  auto* census8 = app.add_subcommand("census8", "8-vertex 3-dichromatic tournaments free of the 7-vertex ones");
  add_common(census8, common);
  census8->callback([&] {
    const CensusReport c7 = census_7({common.jobs, {}});
    CensusReport report = census_8_tournaments(c7.graphs("chi3-tournament"), common.options());
    exit_code = finish(report, common);
  });

  bool from_census = false;
  auto* descend_cmd = app.add_subcommand("descend", "3-dicritical subdigraphs reachable by arc deletion");
  descend_cmd->add_option("file", file, "Graph file or -");
  descend_cmd->add_flag("--census8", from_census, "Start from the 64 tournaments of census8");
  add_common(descend_cmd, common);
  descend_cmd->callback([&] {
    std::vector<Digraph> roots;
    if (from_census) {
      const CensusReport c7 = census_7({common.jobs, {}});
      roots = census_8_tournaments(c7.graphs("chi3-tournament"), {common.jobs, {}}).graphs("chi3-free-tournament");
    } else {
      if (file.empty()) throw Error(ErrorCode::BadHeader, "descend needs a graph file or --census8");
      roots = read_graphs(file);
    }
    CensusReport report = dicritical_census(roots, {common.jobs, {}});
    if (!from_census) report.pipeline = "descend-file";
    exit_code = finish(report, common);
  });

  auto* cover = app.add_subcommand("cover", "Minimum set of 8-vertex 3-dicritical graphs met by all 64 tournaments");
  add_common(cover, common);
  cover->callback([&] {
    const PipelineOptions options{common.jobs, {}};
    const CensusReport c7 = census_7(options);
    const std::vector<Digraph> targets =
        census_8_tournaments(c7.graphs("chi3-tournament"), options).graphs("chi3-free-tournament");
    const std::vector<Digraph> pool = dicritical_census(targets, options).graphs("dicritical");
    CensusReport report = cover_report(targets, pool, options);
    report.params.emplace_back("pool", "8-vertex-3-dicritical");
    exit_code = finish(report, common);
  });

  int stage = 19;
  auto* minarcs = app.add_subcommand("minarcs9", "9-vertex candidates with few arcs are all 2-dicolourable");
  minarcs->add_option("--stage", stage, "Number of edges")->required()->check(CLI::IsMember({19, 20}));
  add_common(minarcs, common);
  minarcs->callback([&] {
    CensusReport report = min_arcs_9(stage, common.options());
    exit_code = finish(report, common);
  });

  auto* saturate = app.add_subcommand("saturate", "Search for saturated 2-dichromatic oriented graphs");
  saturate->add_option("--n", n, "Order")->required()->check(CLI::Range(1, 6));
  add_common(saturate, common);
  saturate->callback([&] {
    CensusReport report = saturation_report(n);
    exit_code = finish(report, common);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return exit_code;
}
