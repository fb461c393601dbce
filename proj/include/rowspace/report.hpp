#pragma once

// Batch front end over graph6 streams. Each input line yields exactly one JSON
// object per output line; rationals are written as "p/q" strings.

#include "rowspace/dispatch.hpp"
#include "rowspace/exhaustive.hpp"
#include "rowspace/graph.hpp"
#include "rowspace/graph6.hpp"
#include "rowspace/linalg.hpp"

#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <istream>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

namespace rowspace {

using json = nlohmann::json;

enum class RecordStatus { ok, no_witness_found, skipped_too_large, skipped_edgeless, error };

inline std::string_view status_name(RecordStatus s) {
  switch (s) {
    case RecordStatus::ok: return "ok";
    case RecordStatus::no_witness_found: return "no-witness-found";
    case RecordStatus::skipped_too_large: return "skipped-too-large";
    case RecordStatus::skipped_edgeless: return "skipped-edgeless";
    case RecordStatus::error: return "error";
  }
  return "error";
}

inline json extended_to_json(std::size_t v) { return v == kInfinite ? json("infinite") : json(v); }

struct VerificationOptions {
  std::size_t oracle_limit = kDefaultOracleLimit;
  std::vector<Strategy> strategies{kAllStrategies.begin(), kAllStrategies.end()};
  std::size_t jobs = 1;
  std::size_t max_order = 512;
};

struct VerificationRecord {
  std::string graph6;
  std::size_t n = 0;
  std::size_t edges = 0;
  std::size_t diameter = 0;
  std::size_t rank = 0;
  std::string strategy;
  std::string witness;
  std::vector<std::string> certificate;
  RecordStatus status = RecordStatus::error;
  std::string reason;
  std::uint64_t elapsed_ms = 0;

  json to_json() const {
    json j;
    j["graph6"] = graph6;
    if (status == RecordStatus::error) {
      j["n"] = nullptr;
      j["edges"] = nullptr;
      j["diameter"] = nullptr;
      j["rank"] = nullptr;
    } else {
      j["n"] = n;
      j["edges"] = edges;
      j["diameter"] = extended_to_json(diameter);
      j["rank"] = status == RecordStatus::skipped_too_large ? json(nullptr) : json(rank);
    }
    j["strategy"] = strategy.empty() ? json(nullptr) : json(strategy);
    j["witness"] = witness.empty() ? json(nullptr) : json(witness);
    j["certificate"] = certificate;
    j["status"] = status_name(status);
    if (!reason.empty()) j["reason"] = reason;
    j["elapsed_ms"] = elapsed_ms;
    return j;
  }
};

inline VerificationRecord verify_line(const std::string& line, const VerificationOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  VerificationRecord rec;
  rec.graph6 = line;
  if (!rec.graph6.empty() && rec.graph6.back() == '\r') rec.graph6.pop_back();
  if (rec.graph6.starts_with(graph6::kHeader)) rec.graph6.erase(0, graph6::kHeader.size());
  auto finish = [&] {
    rec.elapsed_ms = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
    return rec;
  };
  try {
    const Graph g = parse_graph6(rec.graph6);
    rec.n = g.order();
    rec.edges = g.size();
    if (rec.n > opts.max_order) {
      rec.status = RecordStatus::skipped_too_large;
      rec.reason = "order exceeds --max-order " + std::to_string(opts.max_order);
      rec.diameter = diameter(g);
      return finish();
    }
    rec.diameter = diameter(g);
    rec.rank = rank(adjacency_matrix(g));
    if (rec.edges == 0) {
      rec.status = RecordStatus::skipped_edgeless;
      rec.reason = "graph has no edges";
      return finish();
    }
    SearchOptions search;
    search.oracle_limit = opts.oracle_limit;
    search.enabled = opts.strategies;
    const WitnessSearch found = find_witness(g, search);
    if (!found.witness) {
      rec.status = RecordStatus::no_witness_found;
      rec.reason = found.reason;
      return finish();
    }
    rec.strategy = std::string(strategy_name(found.witness->strategy));
    rec.witness = to_bit_string(found.witness->vector);
    for (const auto& c : found.witness->certificate.coefficients) rec.certificate.push_back(to_fraction_string(c));
    rec.status = RecordStatus::ok;
  } catch (const std::exception& e) {
    rec.status = RecordStatus::error;
    rec.reason = e.what();
  }
  return finish();
}

/// Re-checks an "ok" record against its own graph6 string.
inline bool record_self_verifies(const json& j) {
  if (j.at("status") != "ok") return false;
  const Graph g = parse_graph6(j.at("graph6").get<std::string>());
  Witness w{parse_bit_string(j.at("witness").get<std::string>()), {}, Strategy::oracle};
  for (const auto& c : j.at("certificate")) w.certificate.coefficients.push_back(parse_fraction(c.get<std::string>()));
  w.certificate.target = w.vector;
  return verify_witness(g, w);
}

struct RunSummary {
  std::size_t records = 0;
  std::size_t ok = 0;
  std::size_t no_witness = 0;
  std::size_t skipped = 0;
  std::size_t errors = 0;
  std::size_t bound_violations = 0;
};

namespace detail {

/// Maps fn over lines in fixed-size batches with up to `jobs` workers,
/// writing results in input order.
template <typename Fn>
void parallel_map_lines(std::istream& in, std::size_t jobs, Fn&& fn) {
  jobs = std::max<std::size_t>(1, jobs);
  const std::size_t batch = 64 * jobs;
  std::vector<std::string> lines;
  std::string line;
  bool more = true;
  while (more) {
    lines.clear();
    while (lines.size() < batch && (more = static_cast<bool>(std::getline(in, line)))) lines.push_back(line);
    if (lines.empty()) break;
    std::atomic<std::size_t> next{0};
    auto work = [&](auto&& sink) {
      for (std::size_t i = next++; i < lines.size(); i = next++) sink(i);
    };
    fn.begin(lines.size());
    auto run_one = [&](std::size_t i) { fn.compute(i, lines[i]); };
    if (jobs == 1 || lines.size() == 1) {
      work(run_one);
    } else {
      std::vector<std::jthread> pool;
      for (std::size_t t = 0; t < std::min(jobs, lines.size()); ++t) pool.emplace_back([&] { work(run_one); });
    }
    fn.flush();
  }
}

}  // namespace detail

/// One VerificationRecord per input line, in input order.
inline RunSummary run_verification(std::istream& in, std::ostream& out, const VerificationOptions& opts) {
  RunSummary summary;
  struct Sink {
    const VerificationOptions& opts;
    std::ostream& out;
    RunSummary& summary;
    std::vector<VerificationRecord> results;
    void begin(std::size_t count) { results.assign(count, {}); }
    void compute(std::size_t i, const std::string& line) { results[i] = verify_line(line, opts); }
    void flush() {
      for (const auto& r : results) {
        out << r.to_json().dump() << '\n';
        ++summary.records;
        switch (r.status) {
          case RecordStatus::ok: ++summary.ok; break;
          case RecordStatus::no_witness_found: ++summary.no_witness; break;
          case RecordStatus::error: ++summary.errors; break;
          default: ++summary.skipped; break;
        }
      }
      out.flush();
    }
  } sink{opts, out, summary, {}};
  detail::parallel_map_lines(in, opts.jobs, sink);
  return summary;
}

struct SizeBoundRecord {
  std::string graph6;
  std::size_t order = 0;
  std::size_t size = 0;
  bool has_dominating = false;
  std::size_t diameter = 0;
  std::int64_t bound_2n_minus_5 = 0;
  bool applicable = false;
  bool meets_bound = false;
  bool equality = false;
  std::string error;

  bool violation() const { return error.empty() && applicable && !meets_bound; }

  json to_json() const {
    json j;
    j["graph6"] = graph6;
    if (!error.empty()) {
      j["status"] = "error";
      j["reason"] = error;
      return j;
    }
    j["order"] = order;
    j["size"] = size;
    j["has_dominating"] = has_dominating;
    j["diameter"] = extended_to_json(diameter);
    j["bound_2n_minus_5"] = bound_2n_minus_5;
    j["applicable"] = applicable;
    j["meets_bound"] = meets_bound;
    j["equality"] = equality;
    j["status"] = violation() ? "violation" : "ok";
    return j;
  }
};

inline SizeBoundRecord size_bound_record(const std::string& line) {
  SizeBoundRecord rec;
  rec.graph6 = line;
  if (!rec.graph6.empty() && rec.graph6.back() == '\r') rec.graph6.pop_back();
  if (rec.graph6.starts_with(graph6::kHeader)) rec.graph6.erase(0, graph6::kHeader.size());
  try {
    const Graph g = parse_graph6(rec.graph6);
    rec.order = g.order();
    rec.size = g.size();
    for (Vertex v = 0; v < g.order() && !rec.has_dominating; ++v) rec.has_dominating = is_dominating(g, v);
    rec.diameter = diameter(g);
    const SizeBoundCheck c = check_size_bound(g);
    rec.bound_2n_minus_5 = c.bound;
    rec.applicable = c.applicable;
    rec.meets_bound = c.meets_bound;
    rec.equality = c.equality;
  } catch (const std::exception& e) {
    rec.error = e.what();
  }
  return rec;
}

inline RunSummary run_size_bound(std::istream& in, std::ostream& out, std::size_t jobs = 1) {
  RunSummary summary;
  struct Sink {
    std::ostream& out;
    RunSummary& summary;
    std::vector<SizeBoundRecord> results;
    void begin(std::size_t count) { results.assign(count, {}); }
    void compute(std::size_t i, const std::string& line) { results[i] = size_bound_record(line); }
    void flush() {
      for (const auto& r : results) {
        out << r.to_json().dump() << '\n';
        ++summary.records;
        if (!r.error.empty())
          ++summary.errors;
        else if (r.violation())
          ++summary.bound_violations;
        else
          ++summary.ok;
      }
      out.flush();
    }
  } sink{out, summary, {}};
  detail::parallel_map_lines(in, jobs, sink);
  return summary;
}

inline json to_json(const ExhaustiveReport& r) {
  json j;
  j["n"] = r.n;
  j["labeled_graphs_scanned"] = r.labeled_graphs_scanned;
  j["graphs_checked"] = r.graphs_checked;
  j["failures"] = r.failures;
  j["strategy_histogram"] = r.strategy_histogram;
  j["size_bound_checked"] = r.size_bound_checked;
  j["size_bound_equalities"] = r.size_bound_equalities;
  j["size_bound_violations"] = r.size_bound_violations;
  j["elapsed_ms"] = r.elapsed.count();
  return j;
}

}  // namespace rowspace
