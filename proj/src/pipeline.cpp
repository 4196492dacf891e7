#include "kadec/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace kadec {

Dfa regex_to_dfa(const Regex& x, PipelineTrace* trace, const Deadline* deadline) {
  if (deadline != nullptr) deadline->check();
  Regex simplified = simplify(x);
  Regex strict = ssf(simplified);
  ENfa enfa = regex_to_enfa(strict);
  if (!check_eps_acyclic(enfa)) {
    throw std::logic_error("regex_to_dfa: epsilon cycle after strict star form of " + print(strict));
  }
  Nfa nfa = enfa_to_nfa(enfa);
  Determinized det = nfa_to_dfa(nfa, deadline);
  Dfa dfa = det.dfa;
  if (trace != nullptr) {
    *trace = PipelineTrace{std::move(simplified), std::move(strict), std::move(enfa), std::move(nfa), std::move(det)};
  }
  return dfa;
}

Verdict decide_kleene(const Regex& x, const Regex& y, const Deadline* deadline) {
  const Dfa a = regex_to_dfa(x, nullptr, deadline);
  const Dfa b = regex_to_dfa(y, nullptr, deadline);
  if (deadline != nullptr) deadline->check();
  return dfa_equiv(a, b, deadline);
}

// Generation

Regex random_regex(SplitMix64& rng, std::size_t nodes, Label vars) {
  if (nodes == 0) throw std::invalid_argument("random_regex: nodes must be positive");
  if (vars == 0) throw std::invalid_argument("random_regex: vars must be positive");
  if (nodes == 1) return Regex::var(static_cast<Label>(rng.below(vars)));
  const std::uint64_t choice = nodes == 2 ? 2 : rng.below(3);
  if (choice == 2) return Regex::star(random_regex(rng, nodes - 1, vars));
  // Binary node: split the remaining nodes - 1 between two non-empty operands.
  const std::size_t left = 1 + static_cast<std::size_t>(rng.below(nodes - 2));
  Regex l = random_regex(rng, left, vars);
  Regex r = random_regex(rng, nodes - 1 - left, vars);
  return choice == 0 ? Regex::plus(std::move(l), std::move(r)) : Regex::dot(std::move(l), std::move(r));
}

Regex full_expression(Label vars) {
  if (vars == 0) throw std::invalid_argument("full_expression: vars must be positive");
  Regex sum = Regex::var(0);
  for (Label a = 1; a < vars; ++a) sum = Regex::plus(sum, Regex::var(a));
  return Regex::star(sum);
}

GeneratedPair pad_pair(const Regex& x, const Regex& y, Label vars) {
  const Regex full = full_expression(vars);
  return GeneratedPair{x, y, Regex::plus(x, full), Regex::plus(y, full), full.size() + 1};
}

GeneratedPair gen_pair(std::size_t nodes, Label vars, std::uint64_t seed) {
  SplitMix64 rng(seed);
  Regex x = random_regex(rng, nodes, vars);
  Regex y = random_regex(rng, nodes, vars);
  return pad_pair(x, y, vars);
}

// Benchmarking

std::uint64_t pair_seed(std::uint64_t seed, std::size_t index) {
  SplitMix64 rng(seed ^ (0xd1b54a32d192ed03ULL * (static_cast<std::uint64_t>(index) + 1)));
  return rng.next();
}

BenchStats summarize(const std::vector<double>& seconds, std::size_t timeouts) {
  BenchStats s;
  s.count = seconds.size();
  s.timeouts = timeouts;
  if (seconds.empty()) return s;
  std::vector<double> sorted = seconds;
  std::sort(sorted.begin(), sorted.end());
  auto rank = [&](double q) {
    const auto k = static_cast<std::size_t>(std::ceil(q * static_cast<double>(sorted.size())));
    return sorted[std::clamp<std::size_t>(k, 1, sorted.size()) - 1];
  };
  s.mean = std::accumulate(sorted.begin(), sorted.end(), 0.0) / static_cast<double>(sorted.size());
  s.median = rank(0.5);
  s.p90 = rank(0.9);
  s.p99 = rank(0.99);
  s.max = sorted.back();
  return s;
}

BenchReport bench(const BenchOptions& options) {
  BenchReport report;
  std::vector<double> seconds;
  std::size_t timeouts = 0;
  for (std::size_t i = 0; i < options.pairs; ++i) {
    const std::uint64_t seed = pair_seed(options.seed, i);
    const GeneratedPair pair = gen_pair(options.nodes, options.vars, seed);
    std::optional<Deadline> deadline;
    if (options.timeout) deadline.emplace(std::chrono::duration_cast<Deadline::Clock::duration>(*options.timeout));

    BenchRow row{i, seed, options.nodes, options.vars, 0, ""};
    const auto start = std::chrono::steady_clock::now();
    try {
      const Verdict v = decide_kleene(pair.left, pair.right, deadline ? &*deadline : nullptr);
      row.verdict = v.is_equivalent() ? "equivalent" : "counter-example";
    } catch (const Timeout&) {
      row.verdict = "timeout";
      ++timeouts;
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    row.millis = elapsed.count() * 1000.0;
    seconds.push_back(elapsed.count());
    report.rows.push_back(std::move(row));
  }
  report.stats = summarize(seconds, timeouts);
  return report;
}

void write_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << "index,seed,nodes,vars,millis,verdict\n";
  for (const BenchRow& r : rows) {
    out << r.index << ',' << r.seed << ',' << r.nodes << ',' << r.vars << ',' << std::fixed << std::setprecision(3)
        << r.millis << ',' << r.verdict << '\n';
  }
  out.unsetf(std::ios::floatfield);
}

void write_stats(std::ostream& out, const BenchOptions& options, const BenchStats& stats) {
  // Timed-out pairs record the timeout itself, so any cell they reach is a
  // lower bound.
  const double limit = options.timeout ? options.timeout->count() : 0.0;
  auto cell = [&](double v, bool censored) {
    std::ostringstream s;
    s << (censored ? ">" : "") << std::fixed << std::setprecision(3) << v;
    return s.str();
  };
  auto order_cell = [&](double v) { return cell(v, stats.timeouts > 0 && v >= limit); };
  out << std::left << std::setw(7) << "nodes" << std::setw(6) << "vars" << std::setw(7) << "pairs" << std::right
      << std::setw(11) << "mean" << std::setw(11) << "50%" << std::setw(11) << "90%" << std::setw(11) << "99%"
      << std::setw(11) << "100%" << '\n';
  out << std::left << std::setw(7) << options.nodes << std::setw(6) << options.vars << std::setw(7) << stats.count
      << std::right << std::setw(11) << cell(stats.mean, stats.timeouts > 0) << std::setw(11)
      << order_cell(stats.median) << std::setw(11) << order_cell(stats.p90) << std::setw(11) << order_cell(stats.p99)
      << std::setw(11) << order_cell(stats.max) << '\n';
  if (stats.timeouts > 0) out << stats.timeouts << " pair(s) hit the timeout\n";
}

}  // namespace kadec
