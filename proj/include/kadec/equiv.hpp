#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "kadec/automata.hpp"
#include "kadec/kamat.hpp"
#include "kadec/lang.hpp"

namespace kadec {

/// Disjoint-set forest with path compression and union by rank.
class DisjointSet {
 public:
  explicit DisjointSet(std::size_t n = 0);

  std::size_t size() const { return parent_.size(); }
  /// Representative of s; compresses the whole path to the root.
  State find(State s);
  /// Representative of s without modifying the forest.
  State root(State s) const;
  /// Merges the classes of s and t. Returns false if they were already one.
  bool unite(State s, State t);

  const std::vector<State>& parents() const { return parent_; }
  const std::vector<std::size_t>& ranks() const { return rank_; }

 private:
  void check(State s) const;

  std::vector<State> parent_;
  std::vector<std::size_t> rank_;
};

/// Outcome of an equivalence check: either equivalent, or a word accepted
/// by exactly one side.
class Verdict {
 public:
  static Verdict equivalent() { return Verdict(std::nullopt); }
  static Verdict counter_example(Word w) { return Verdict(std::move(w)); }

  bool is_equivalent() const { return !word_.has_value(); }
  /// Requires !is_equivalent().
  const Word& word() const { return word_.value(); }

  friend bool operator==(const Verdict&, const Verdict&) = default;

 private:
  explicit Verdict(std::optional<Word> w) : word_(std::move(w)) {}
  std::optional<Word> word_;
};

/// Disjoint union of two DFAs over max(labels) letters. A component that
/// lacks some letters gets an extra non-accepting sink receiving them.
/// States [0, first_size) come from the first DFA, the rest from the second.
struct ProductDfa {
  std::size_t size = 0;
  std::size_t first_size = 0;
  Label labels = 0;
  std::vector<std::vector<State>> delta;  // [label][state]
  StateSet final;
  State first_initial = 0;
  State second_initial = 0;
};

ProductDfa disjoint_union(const Dfa& a, const Dfa& b);

kamat::BoolMatrix transition_matrix(const ProductDfa& p, Label label);
/// [u1 0] and [0 u2].
kamat::BoolMatrix first_initial_row(const ProductDfa& p);
kamat::BoolMatrix second_initial_row(const ProductDfa& p);
kamat::BoolMatrix final_column(const ProductDfa& p);

/// Full record of a Hopcroft-Karp run, for inspection and algebraic checks.
struct EquivRun {
  Verdict verdict = Verdict::equivalent();
  ProductDfa product;
  DisjointSet classes;
  /// Pairs whose classes were merged, in order.
  std::vector<std::pair<State, State>> merged;
  /// Popped pairs that were already related.
  std::vector<std::pair<State, State>> skipped;
};

/// Hopcroft-Karp on the disjoint union, depth first, successors visited in
/// increasing label order. Each non-skipped step merges two classes, so
/// there are at most size - 1 merges.
EquivRun dfa_equiv_run(const Dfa& a, const Dfa& b, const Deadline* deadline = nullptr);

Verdict dfa_equiv(const Dfa& a, const Dfa& b, const Deadline* deadline = nullptr);

/// Y[i][j] = 1 iff i and j are in the same class.
kamat::BoolMatrix equivalence_matrix(const DisjointSet& d);

}  // namespace kadec
