#include "rowspace/rowspace.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Streams {
  std::unique_ptr<std::ifstream> in_file;
  std::unique_ptr<std::ofstream> out_file;
  std::istream* in = &std::cin;
  std::ostream* out = &std::cout;
};

Streams open_streams(const std::string& input, const std::string& output) {
  Streams s;
  if (!input.empty() && input != "-") {
    s.in_file = std::make_unique<std::ifstream>(input);
    if (!*s.in_file) throw std::runtime_error("cannot open input file " + input);
    s.in = s.in_file.get();
  }
  if (!output.empty() && output != "-") {
    s.out_file = std::make_unique<std::ofstream>(output);
    if (!*s.out_file) throw std::runtime_error("cannot open output file " + output);
    s.out = s.out_file.get();
  }
  return s;
}

std::vector<rowspace::Strategy> parse_strategies(const std::string& list) {
  std::vector<rowspace::Strategy> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(rowspace::parse_strategy(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Row-space witnesses for graph adjacency matrices"};
  app.require_subcommand(1);

  std::string input = "-", output = "-", strategies;
  std::size_t oracle_limit = 0, jobs = 1, max_order = 512;

  auto* verify = app.add_subcommand("verify", "Find and certify a witness for every graph6 line");
  verify->add_option("--input", input, "graph6 file, one graph per line ('-' for stdin)");
  verify->add_option("--out", output, "JSONL output ('-' for stdout)");
  verify->add_option("--oracle-limit", oracle_limit, "largest order handed to the brute-force oracle");
  verify->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--strategies", strategies, "comma-separated subset of strategies to enable");
  verify->add_option("--max-order", max_order, "skip graphs above this order");

  std::size_t n = 0;
  auto* exhaustive = app.add_subcommand("exhaustive", "Check every connected labeled graph on n vertices");
  exhaustive->add_option("--n", n, "vertex count (1..7)")->required();
  exhaustive->add_option("--out", output, "JSON report ('-' for stdout)");
  exhaustive->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  exhaustive->add_option("--oracle-limit", oracle_limit, "largest order handed to the brute-force oracle");

  std::string name;
  std::optional<std::size_t> size;
  bool emit_graph6 = false;
  auto* family = app.add_subcommand("family", "Build a named graph");
  family->add_option("--name", name, "family name")->required();
  family->add_option("--size", size, "size parameter for parametric families");
  family->add_flag("--emit-graph6", emit_graph6, "print only the graph6 line");

  auto* size_bound = app.add_subcommand("size-bound", "Check s >= 2n-5 for diameter-2 graphs without a dominating vertex");
  size_bound->add_option("--input", input, "graph6 file ('-' for stdin)");
  size_bound->add_option("--out", output, "JSONL output ('-' for stdout)");
  size_bound->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (oracle_limit == 0) oracle_limit = rowspace::default_oracle_limit();

    if (verify->parsed()) {
      rowspace::VerificationOptions opts;
      opts.oracle_limit = oracle_limit;
      opts.jobs = jobs;
      opts.max_order = max_order;
      if (!strategies.empty()) opts.strategies = parse_strategies(strategies);
      Streams s = open_streams(input, output);
      const auto summary = rowspace::run_verification(*s.in, *s.out, opts);
      std::cerr << "records=" << summary.records << " ok=" << summary.ok << " no-witness=" << summary.no_witness
                << " skipped=" << summary.skipped << " errors=" << summary.errors << '\n';
      return summary.errors == 0 ? 0 : 1;
    }

    if (exhaustive->parsed()) {
      rowspace::ExhaustiveOptions opts;
      opts.jobs = jobs;
      opts.oracle_limit = oracle_limit;
      const auto report = rowspace::exhaustive_verify(n, opts);
      Streams s = open_streams("-", output);
      *s.out << rowspace::to_json(report).dump(2) << '\n';
      return report.failures.empty() && report.size_bound_violations.empty() ? 0 : 1;
    }

    if (family->parsed()) {
      const rowspace::Graph g = rowspace::families::build({rowspace::families::parse_family(name), size});
      if (emit_graph6) {
        std::cout << rowspace::write_graph6(g) << '\n';
        return 0;
      }
      rowspace::json j;
      j["name"] = name;
      if (size) j["size"] = *size;
      j["graph6"] = rowspace::write_graph6(g);
      j["order"] = g.order();
      j["edges"] = g.size();
      j["diameter"] = rowspace::extended_to_json(rowspace::diameter(g));
      j["rank"] = rowspace::rank(rowspace::adjacency_matrix(g));
      std::cout << j.dump() << '\n';
      return 0;
    }

    if (size_bound->parsed()) {
      Streams s = open_streams(input, output);
      const auto summary = rowspace::run_size_bound(*s.in, *s.out, jobs);
      std::cerr << "records=" << summary.records << " violations=" << summary.bound_violations
                << " errors=" << summary.errors << '\n';
      return summary.errors == 0 && summary.bound_violations == 0 ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "rowspace: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
