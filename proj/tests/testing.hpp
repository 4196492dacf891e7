#pragma once

// Generators and independent oracles shared by the test suites. Nothing
// here calls into the automata pipeline.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "kadec/automata.hpp"
#include "kadec/kamat.hpp"
#include "kadec/lang.hpp"
#include "kadec/pipeline.hpp"
#include "kadec/regex.hpp"

namespace kadec::testing {

/// Random expression with exactly `nodes` nodes. Unlike the benchmark
/// generator, leaves include 0 and 1 so that the simplifier and the strict
/// star form see degenerate shapes.
inline Regex random_term(SplitMix64& rng, std::size_t nodes, Label vars) {
  if (nodes <= 1) {
    const auto r = rng.below(vars + 2);
    if (r == vars) return Regex::zero();
    if (r == vars + 1) return Regex::one();
    return Regex::var(static_cast<Label>(r));
  }
  const auto choice = nodes == 2 ? 2 : rng.below(3);
  if (choice == 2) return Regex::star(random_term(rng, nodes - 1, vars));
  const std::size_t left = 1 + static_cast<std::size_t>(rng.below(nodes - 2));
  Regex l = random_term(rng, left, vars);
  Regex r = random_term(rng, nodes - 1 - left, vars);
  return choice == 0 ? Regex::plus(l, r) : Regex::dot(l, r);
}

/// Between 1 and max_nodes nodes.
inline Regex random_small(SplitMix64& rng, std::size_t max_nodes, Label vars) {
  return random_term(rng, 1 + static_cast<std::size_t>(rng.below(max_nodes)), vars);
}

/// Every word over `sigma` of length <= maxlen, shortlex order.
inline std::vector<Word> all_words(std::span<const Label> sigma, std::size_t maxlen) {
  std::vector<Word> out{Word{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= maxlen && !sigma.empty(); ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (Label a : sigma) {
        Word w = out[i];
        w.push_back(a);
        out.push_back(std::move(w));
      }
    }
    begin = end;
  }
  return out;
}

inline std::vector<Label> letters(Label n) {
  std::vector<Label> v(n);
  for (Label a = 0; a < n; ++a) v[a] = a;
  return v;
}

/// Membership by forward sets of end positions: ends(x, i) is the set of j
/// such that x matches w[i, j). Independent of lang::matches.
class EndsMatcher {
 public:
  explicit EndsMatcher(std::span<const Label> w) : w_(w) {}

  bool accepts(const Regex& x) {
    auto e = ends(x, 0);
    return std::find(e.begin(), e.end(), w_.size()) != e.end();
  }

 private:
  std::set<std::size_t> ends(const Regex& x, std::size_t i) {
    std::set<std::size_t> r;
    switch (x.kind()) {
      case RegexKind::Zero:
        break;
      case RegexKind::One:
        r.insert(i);
        break;
      case RegexKind::Var:
        if (i < w_.size() && w_[i] == x.label()) r.insert(i + 1);
        break;
      case RegexKind::Plus: {
        r = ends(x.left(), i);
        auto s = ends(x.right(), i);
        r.insert(s.begin(), s.end());
        break;
      }
      case RegexKind::Dot:
        for (std::size_t k : ends(x.left(), i)) {
          auto s = ends(x.right(), k);
          r.insert(s.begin(), s.end());
        }
        break;
      case RegexKind::Star: {
        // Least fixpoint: reachable positions by iterating the body.
        std::vector<std::size_t> todo{i};
        r.insert(i);
        while (!todo.empty()) {
          const std::size_t k = todo.back();
          todo.pop_back();
          for (std::size_t j : ends(x.left(), k)) {
            if (r.insert(j).second) todo.push_back(j);
          }
        }
        break;
      }
    }
    return r;
  }

  std::span<const Label> w_;
};

/// Reflexive-transitive closure by Floyd-Warshall.
inline kamat::BoolMatrix closure_fw(const kamat::BoolMatrix& m) {
  const std::size_t n = m.rows();
  kamat::BoolMatrix r = m;
  for (std::size_t i = 0; i < n; ++i) r(i, i) = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (r(i, k) && r(k, j)) r(i, j) = true;
  return r;
}

inline kamat::BoolMatrix random_bool_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols,
                                            std::uint64_t density_percent = 35) {
  kamat::BoolMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.below(100) < density_percent;
  return m;
}

inline Nfa random_nfa(SplitMix64& rng, std::size_t size, Label labels) {
  Nfa a;
  a.size = size;
  a.labels = labels;
  a.delta.assign(labels, std::vector<StateSet>(size, StateSet(size)));
  for (Label l = 0; l < labels; ++l)
    for (State s = 0; s < size; ++s)
      for (State t = 0; t < size; ++t)
        if (rng.below(100) < 25) a.delta[l][s].insert(t);
  a.initial = StateSet(size);
  a.final = StateSet(size);
  for (State s = 0; s < size; ++s) {
    if (rng.below(100) < 30) a.initial.insert(s);
    if (rng.below(100) < 40) a.final.insert(s);
  }
  return a;
}

inline Dfa random_dfa(SplitMix64& rng, std::size_t size, Label labels) {
  Dfa a;
  a.size = size;
  a.labels = labels;
  a.delta.assign(labels, std::vector<State>(size, 0));
  for (Label l = 0; l < labels; ++l)
    for (State s = 0; s < size; ++s) a.delta[l][s] = static_cast<State>(rng.below(size));
  a.initial = static_cast<State>(rng.below(size));
  a.final = StateSet(size);
  for (State s = 0; s < size; ++s)
    if (rng.below(2) == 0) a.final.insert(s);
  return a;
}

/// Same language by construction: states renamed by a permutation, plus an
/// unreachable copy of a few states.
inline Dfa scrambled_copy(SplitMix64& rng, const Dfa& a, std::size_t extra) {
  const std::size_t n = a.size + extra;
  std::vector<State> perm(n);
  for (State s = 0; s < n; ++s) perm[s] = s;
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
  Dfa b;
  b.size = n;
  b.labels = a.labels;
  b.delta.assign(a.labels, std::vector<State>(n, 0));
  b.final = StateSet(n);
  for (State s = 0; s < n; ++s) {
    const State orig = s < a.size ? s : static_cast<State>(rng.below(a.size));
    for (Label l = 0; l < a.labels; ++l) b.delta[l][perm[s]] = perm[a.delta[l][orig]];
    if (a.final.contains(orig)) b.final.insert(perm[s]);
  }
  b.initial = perm[a.initial];
  return b;
}

/// Exhaustive comparison of two DFAs on all words up to maxlen.
inline std::optional<Word> brute_difference(const Dfa& a, const Dfa& b, std::size_t maxlen) {
  const Label labels = std::max(a.labels, b.labels);
  for (const Word& w : all_words(letters(labels), maxlen)) {
    if (run_dfa(a, w) != run_dfa(b, w)) return w;
  }
  return std::nullopt;
}

/// Shortest distinguishing word by breadth-first search over the
/// synchronous product, where a letter a DFA does not know leads to a dead
/// state. Covers every word, so the shortest witness is at most
/// (n1 + 1)(n2 + 1) - 1 letters long.
inline std::optional<Word> product_difference(const Dfa& a, const Dfa& b) {
  const Label labels = std::max(a.labels, b.labels);
  const State dead_a = static_cast<State>(a.size), dead_b = static_cast<State>(b.size);
  auto step = [](const Dfa& d, State dead, State s, Label l) { return s == dead || l >= d.labels ? dead : d.delta[l][s]; };
  auto accepting = [](const Dfa& d, State dead, State s) { return s != dead && d.final.contains(s); };
  const std::size_t width = b.size + 1;
  std::vector<std::optional<std::pair<std::size_t, Label>>> parent((a.size + 1) * width);
  std::vector<bool> seen((a.size + 1) * width, false);
  std::vector<std::size_t> queue{a.initial * width + b.initial};
  seen[queue[0]] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t cur = queue[head];
    const State s = static_cast<State>(cur / width), t = static_cast<State>(cur % width);
    if (accepting(a, dead_a, s) != accepting(b, dead_b, t)) {
      Word w;
      for (std::size_t c = cur; parent[c]; c = parent[c]->first) w.push_back(parent[c]->second);
      std::reverse(w.begin(), w.end());
      return w;
    }
    for (Label l = 0; l < labels; ++l) {
      const std::size_t next = step(a, dead_a, s, l) * width + step(b, dead_b, t, l);
      if (!seen[next]) {
        seen[next] = true;
        parent[next] = std::make_pair(cur, l);
        queue.push_back(next);
      }
    }
  }
  return std::nullopt;
}

}  // namespace kadec::testing
