#include <catch_amalgamated.hpp>

#include <sstream>

#include "kadec/lang.hpp"
#include "kadec/pipeline.hpp"
#include "testing.hpp"

using namespace kadec;

namespace {

Word w(std::string_view s) {
  Word out;
  for (char ch : s) out.push_back(static_cast<Label>(ch - 'a'));
  return out;
}

bool equivalent(std::string_view x, std::string_view y) { return decide_kleene(parse(x), parse(y)).is_equivalent(); }

bool labels_below(const Regex& x, Label bound) { return x.label_bound() <= bound; }

}  // namespace

TEST_CASE("regex_to_dfa: examples") {
  const Dfa none = regex_to_dfa(Regex::zero());
  for (const Word& v : testing::all_words(testing::letters(2), 4)) CHECK_FALSE(run_dfa(none, v));
  const Dfa star = regex_to_dfa(parse("a*"));
  for (std::size_t n = 0; n <= 4; ++n) CHECK(run_dfa(star, Word(n, 0)));

  PipelineTrace trace;
  const Dfa d = regex_to_dfa(parse("((a+1)*0+b)*"), &trace);
  CHECK(trace.simplified == parse("b*"));
  CHECK(trace.strict == parse("b*"));
  CHECK(trace.enfa.size == 3);
  CHECK(trace.nfa.size == 3);
  CHECK(trace.det.dfa.size == d.size);
  CHECK(trace.det.rho.size() == d.size);
}

TEST_CASE("regex_to_dfa agrees with the language") {
  SplitMix64 rng(127);
  const auto words = testing::all_words(testing::letters(3), 4);
  for (int i = 0; i < 400; ++i) {
    const Regex x = testing::random_small(rng, 10, 3);
    INFO(print(x));
    const Dfa d = regex_to_dfa(x);
    for (const Word& v : words) CHECK(run_dfa(d, v) == matches(x, v));
  }
}

TEST_CASE("decide_kleene: identities") {
  CHECK(equivalent("a(ba)*", "(ab)*a"));
  CHECK(equivalent("(a+b)*", "a*(ba*)*"));
  CHECK(equivalent("a*", "a*a*"));
  CHECK(equivalent("a*", "(a*)*"));
  CHECK(equivalent("a*", "(a+1)*"));
  CHECK(equivalent("1+aa*", "a*"));
  CHECK(equivalent("0*", "1"));
  CHECK(equivalent("a0", "0"));
  CHECK_FALSE(equivalent("a*", "aa*"));
}

TEST_CASE("decide_kleene: counter-examples") {
  CHECK(decide_kleene(Regex::one(), Regex::zero()) == Verdict::counter_example(Word{}));
  const Verdict v = decide_kleene(parse("ab"), parse("a"));
  REQUIRE_FALSE(v.is_equivalent());
  CHECK((v.word() == w("a") || v.word() == w("ab")));
  // Letters missing on one side.
  const Verdict u = decide_kleene(parse("a*"), parse("(a+b)*"));
  REQUIRE_FALSE(u.is_equivalent());
  CHECK(matches(parse("a*"), u.word()) != matches(parse("(a+b)*"), u.word()));
  CHECK(decide_kleene(parse("v40"), parse("v40")).is_equivalent());
}

TEST_CASE("decide_kleene agrees with the derivative oracle") {
  SplitMix64 rng(131);
  int equal = 0;
  for (int i = 0; i < 500; ++i) {
    const Regex x = testing::random_small(rng, 10, 3);
    const Regex y = i % 3 == 0 ? ssf(testing::random_small(rng, 10, 3)) : testing::random_small(rng, 10, 3);
    INFO(print(x) << " vs " << print(y));
    const std::size_t bound = regex_to_dfa(x).size * regex_to_dfa(y).size - 1;
    const Verdict v = decide_kleene(x, y);
    const auto witness = distinguishing_word(x, y, bound);
    CHECK(v.is_equivalent() == !witness.has_value());
    if (!v.is_equivalent()) CHECK(matches(x, v.word()) != matches(y, v.word()));
    if (v.is_equivalent()) ++equal;
  }
  CHECK(equal > 20);
}

TEST_CASE("decide_kleene: reflexive, symmetric, invariant under normalization") {
  SplitMix64 rng(137);
  for (int i = 0; i < 300; ++i) {
    const Regex x = testing::random_small(rng, 12, 3);
    const Regex y = testing::random_small(rng, 12, 3);
    INFO(print(x) << " vs " << print(y));
    CHECK(decide_kleene(x, x).is_equivalent());
    const bool kind = decide_kleene(x, y).is_equivalent();
    CHECK(decide_kleene(y, x).is_equivalent() == kind);
    CHECK(decide_kleene(simplify(x), y).is_equivalent() == kind);
    CHECK(decide_kleene(x, ssf(y)).is_equivalent() == kind);
    CHECK(decide_kleene(ssf(simplify(x)), simplify(y)).is_equivalent() == kind);
    CHECK(decide_kleene(x, simplify(ssf(x))).is_equivalent());
  }
}

TEST_CASE("pad_pair and gen_pair") {
  const GeneratedPair p = pad_pair(parse("a+b*"), parse("abc"), 3);
  CHECK(print(p.left) == "a+b*+(a+b+c)*");
  CHECK(print(p.right) == "abc+(a+b+c)*");
  CHECK(p.pad_nodes == 7);
  CHECK(full_expression(1) == parse("a*"));

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const GeneratedPair g = gen_pair(30, 4, seed);
    const GeneratedPair h = gen_pair(30, 4, seed);
    CHECK(g.left == h.left);
    CHECK(g.right == h.right);
    CHECK(g.raw_left.size() == 30);
    CHECK(g.raw_right.size() == 30);
    CHECK(g.left.size() == 30 + g.pad_nodes);
    CHECK(labels_below(g.raw_left, 4));
    CHECK(g.raw_left.count(RegexKind::Zero) + g.raw_left.count(RegexKind::One) == 0);
    CHECK(decide_kleene(g.left, g.right).is_equivalent());
  }
  CHECK_FALSE(gen_pair(30, 4, 1).left == gen_pair(30, 4, 2).left);
  SplitMix64 rng(1);
  CHECK(random_regex(rng, 2, 3).is(RegexKind::Star));
  CHECK_THROWS_AS(random_regex(rng, 0, 3), std::invalid_argument);
}

TEST_CASE("summarize") {
  CHECK(summarize({}).count == 0);
  std::vector<double> v;
  for (int i = 1; i <= 100; ++i) v.push_back(i);
  const BenchStats s = summarize(v);
  CHECK(s.count == 100);
  CHECK(s.mean == Catch::Approx(50.5));
  CHECK(s.median == 50);
  CHECK(s.p90 == 90);
  CHECK(s.p99 == 99);
  CHECK(s.max == 100);
  const BenchStats t = summarize({3.0, 1.0, 2.0});
  CHECK(t.median == 2.0);
  CHECK(t.p90 == 3.0);
}

TEST_CASE("bench: statistics and CSV") {
  BenchOptions empty;
  empty.pairs = 0;
  const BenchReport none = bench(empty);
  CHECK(none.rows.empty());
  CHECK(none.stats.count == 0);

  BenchOptions opt;
  opt.nodes = 40;
  opt.vars = 4;
  opt.pairs = 30;
  opt.seed = 5;
  const BenchReport r = bench(opt);
  REQUIRE(r.rows.size() == 30);
  CHECK(r.stats.count == 30);
  double min = r.rows[0].millis / 1000;
  for (const BenchRow& row : r.rows) {
    CHECK(row.verdict == "equivalent");
    min = std::min(min, row.millis / 1000);
  }
  CHECK(min <= r.stats.median);
  CHECK(r.stats.median <= r.stats.p90);
  CHECK(r.stats.p90 <= r.stats.p99);
  CHECK(r.stats.p99 <= r.stats.max);
  CHECK(r.rows[3].seed == pair_seed(5, 3));

  std::ostringstream csv;
  write_csv(csv, r.rows);
  std::istringstream lines(csv.str());
  std::string line;
  std::getline(lines, line);
  CHECK(line == "index,seed,nodes,vars,millis,verdict");
  std::size_t count = 0;
  while (std::getline(lines, line)) {
    CHECK(line.starts_with(std::to_string(count) + "," + std::to_string(r.rows[count].seed) + ",40,4,"));
    CHECK(line.ends_with(",equivalent"));
    ++count;
  }
  CHECK(count == 30);

  std::ostringstream table;
  write_stats(table, opt, r.stats);
  CHECK(table.str().find("mean") != std::string::npos);
  CHECK(table.str().find('>') == std::string::npos);
}

TEST_CASE("bench: timeouts are censored") {
  BenchOptions opt;
  opt.nodes = 60;
  opt.vars = 5;
  opt.pairs = 3;
  opt.timeout = std::chrono::duration<double>(0);
  const BenchReport r = bench(opt);
  CHECK(r.stats.timeouts == 3);
  for (const BenchRow& row : r.rows) CHECK(row.verdict == "timeout");
  std::ostringstream table;
  write_stats(table, opt, r.stats);
  CHECK(table.str().find('>') != std::string::npos);
}
