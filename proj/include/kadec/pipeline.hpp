#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "kadec/automata.hpp"
#include "kadec/equiv.hpp"
#include "kadec/regex.hpp"

namespace kadec {

/// Artifacts of each stage of regex_to_dfa, in pipeline order.
struct PipelineTrace {
  Regex simplified;
  Regex strict;  // strict star form of `simplified`
  ENfa enfa;
  Nfa nfa;
  Determinized det;
};

/// simplify, strict star form, construction, epsilon removal, subset
/// construction. Fills `trace` when given.
Dfa regex_to_dfa(const Regex& x, PipelineTrace* trace = nullptr, const Deadline* deadline = nullptr);

/// Equivalent iff x and y denote the same language; otherwise a word in
/// exactly one of them.
Verdict decide_kleene(const Regex& x, const Regex& y, const Deadline* deadline = nullptr);

/// SplitMix64: small, fast, and fully specified, so generated benchmarks are
/// reproducible across platforms and standard libraries.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  /// Uniform in [0, n), n > 0.
  std::uint64_t below(std::uint64_t n) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next()) * n) >> 64);
  }

 private:
  std::uint64_t state_;
};

/// Random expression with exactly `nodes` nodes over variables [0, vars).
/// Internal nodes are Plus, Dot or Star with equal probability (a budget of
/// two forces Star); leaves are uniform variables.
Regex random_regex(SplitMix64& rng, std::size_t nodes, Label vars);

/// (v0 + v1 + ... + v{vars-1})*
Regex full_expression(Label vars);

struct GeneratedPair {
  Regex raw_left, raw_right;
  /// raw + full_expression(vars); always equivalent to each other.
  Regex left, right;
  /// Nodes added on each side by the padding.
  std::size_t pad_nodes = 0;
};

GeneratedPair pad_pair(const Regex& x, const Regex& y, Label vars);
GeneratedPair gen_pair(std::size_t nodes, Label vars, std::uint64_t seed);

struct BenchOptions {
  std::size_t nodes = 100;
  Label vars = 10;
  std::size_t pairs = 500;
  std::uint64_t seed = 1;
  std::optional<std::chrono::duration<double>> timeout;
};

struct BenchRow {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  std::size_t nodes = 0;
  Label vars = 0;
  double millis = 0;
  std::string verdict;  // "equivalent", "counter-example" or "timeout"
};

/// Order statistics in seconds. A percentile q is the smallest recorded time
/// within which at least q% of the pairs finished (nearest rank).
struct BenchStats {
  std::size_t count = 0;
  std::size_t timeouts = 0;
  double mean = 0, median = 0, p90 = 0, p99 = 0, max = 0;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  BenchStats stats;
};

/// Seed used for the i-th pair of a benchmark run.
std::uint64_t pair_seed(std::uint64_t seed, std::size_t index);

BenchStats summarize(const std::vector<double>& seconds, std::size_t timeouts = 0);
BenchReport bench(const BenchOptions& options);

void write_csv(std::ostream& out, const std::vector<BenchRow>& rows);
/// Human-readable table; cells are prefixed with '>' when timeouts make
/// them lower bounds.
void write_stats(std::ostream& out, const BenchOptions& options, const BenchStats& stats);

}  // namespace kadec
