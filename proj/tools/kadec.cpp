// kadec: decide equivalence of regular expressions, or benchmark the
// decision procedure on generated pairs.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "kadec/automata.hpp"
#include "kadec/equiv.hpp"
#include "kadec/lang.hpp"
#include "kadec/pipeline.hpp"
#include "kadec/regex.hpp"

namespace {

constexpr int exit_equivalent = 0;
constexpr int exit_counter_example = 1;
constexpr int exit_parse_error = 2;
constexpr int exit_oracle_mismatch = 3;
constexpr int exit_io_error = 4;

bool write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path);
  out << contents;
  if (!out) {
    std::cerr << "kadec: cannot write " << path << '\n';
    return false;
  }
  return true;
}

std::optional<std::string> dot_for_stage(const std::string& stage, const kadec::PipelineTrace& first,
                                         const kadec::PipelineTrace& second) {
  if (stage == "enfa") return to_dot(first.enfa, "enfa1") + to_dot(second.enfa, "enfa2");
  if (stage == "nfa") return to_dot(first.nfa, "nfa1") + to_dot(second.nfa, "nfa2");
  if (stage == "dfa1") return to_dot(first.det.dfa, "dfa1");
  if (stage == "dfa2") return to_dot(second.det.dfa, "dfa2");
  return std::nullopt;
}

int run_decide(const std::string& text1, const std::string& text2,
               const std::vector<std::pair<std::string, std::string>>& dumps, std::optional<std::size_t> oracle) {
  kadec::Regex x, y;
  try {
    x = kadec::parse(text1);
    y = kadec::parse(text2);
  } catch (const kadec::ParseError& e) {
    std::cerr << "kadec: parse error: " << e.what() << '\n';
    return exit_parse_error;
  }

  kadec::PipelineTrace tx, ty;
  const kadec::Dfa a = kadec::regex_to_dfa(x, &tx);
  const kadec::Dfa b = kadec::regex_to_dfa(y, &ty);
  const kadec::Verdict verdict = kadec::dfa_equiv(a, b);

  for (const auto& [stage, path] : dumps) {
    const auto dot = dot_for_stage(stage, tx, ty);
    if (!dot) {
      std::cerr << "kadec: unknown stage '" << stage << "' (expected enfa, nfa, dfa1 or dfa2)\n";
      return exit_io_error;
    }
    if (!write_file(path, *dot)) return exit_io_error;
  }

  if (verdict.is_equivalent()) {
    std::cout << "equivalent\n";
  } else {
    std::cout << "counter-example: " << kadec::word_to_string(verdict.word()) << '\n';
  }

  if (oracle) {
    const auto witness = kadec::distinguishing_word(x, y, *oracle);
    bool agree = true;
    if (verdict.is_equivalent()) {
      agree = !witness.has_value();
    } else {
      const kadec::Word& w = verdict.word();
      agree = kadec::matches(x, w) != kadec::matches(y, w) && (witness.has_value() || w.size() > *oracle);
    }
    if (!agree) {
      std::cerr << "kadec: oracle disagrees";
      if (witness) std::cerr << " (oracle word: " << kadec::word_to_string(*witness) << ")";
      std::cerr << '\n';
      return exit_oracle_mismatch;
    }
  }
  return verdict.is_equivalent() ? exit_equivalent : exit_counter_example;
}

int run_bench(const kadec::BenchOptions& options, const std::string& csv_path) {
  const kadec::BenchReport report = kadec::bench(options);
  kadec::write_stats(std::cout, options, report.stats);
  if (!csv_path.empty()) {
    std::ofstream out(csv_path);
    kadec::write_csv(out, report.rows);
    if (!out) {
      std::cerr << "kadec: cannot write " << csv_path << '\n';
      return exit_io_error;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide equivalence of regular expressions in Kleene algebra"};
  app.require_subcommand(1);

  auto* decide = app.add_subcommand("decide", "Compare two expressions");
  std::string text1, text2;
  std::vector<std::pair<std::string, std::string>> dumps;
  std::optional<std::size_t> oracle;
  decide->add_option("expr1", text1, "First expression")->required();
  decide->add_option("expr2", text2, "Second expression")->required();
  decide->add_option("--dump-dot", dumps, "Write a stage (enfa, nfa, dfa1, dfa2) as Graphviz to a path")
      ->type_name("STAGE PATH");
  decide->add_option("--oracle", oracle, "Cross-check against brute-force semantics up to this word length");

  auto* bench = app.add_subcommand("bench", "Time the procedure on generated equivalent pairs");
  kadec::BenchOptions options;
  double timeout = 0;
  std::string csv_path;
  bench->add_option("--nodes", options.nodes, "Nodes per generated expression")->required()->check(CLI::PositiveNumber);
  bench->add_option("--vars", options.vars, "Maximum number of distinct variables")
      ->required()
      ->check(CLI::PositiveNumber);
  bench->add_option("--pairs", options.pairs, "Number of pairs")->required();
  bench->add_option("--seed", options.seed, "Seed")->required();
  bench->add_option("--timeout", timeout, "Per-pair time limit in seconds")->check(CLI::PositiveNumber);
  bench->add_option("--csv", csv_path, "Per-pair CSV output");

  CLI11_PARSE(app, argc, argv);

  if (*decide) return run_decide(text1, text2, dumps, oracle);
  if (timeout > 0) options.timeout = std::chrono::duration<double>(timeout);
  return run_bench(options, csv_path);
}
