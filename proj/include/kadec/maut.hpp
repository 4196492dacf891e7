#pragma once

// Automata as matrices over regular expressions: an automaton <u, M, v>
// denotes the expression u.M*.v. This is the algebraic counterpart of the
// efficient pipeline and is only used to cross-check it.

#include <cstddef>
#include <set>
#include <utility>

#include "kadec/automata.hpp"
#include "kadec/kamat.hpp"
#include "kadec/regex.hpp"

namespace kadec::maut {

/// Entries are combined with the simplifying instance, so that adding a
/// transition to an empty cell stores the bare label.
using RegexMatrix = kamat::Matrix<kamat::SimplifyingRegexKA>;

struct Maut {
  std::size_t size = 0;
  RegexMatrix initial;  // 1 x size
  RegexMatrix delta;    // size x size
  RegexMatrix final;    // size x 1
};

/// Construction accumulator: a square transition matrix that grows.
class PreMaut {
 public:
  /// Two states, no transitions.
  PreMaut() : PreMaut(2) {}
  explicit PreMaut(std::size_t size) : delta_(size, size) {}

  std::size_t size() const { return delta_.rows(); }
  const RegexMatrix& delta() const { return delta_; }

  /// delta += mx_point(i, f, x)
  PreMaut add(const Regex& x, std::size_t i, std::size_t f) const;
  /// Appends a zero row and column; returns the new state (the old size).
  std::pair<std::size_t, PreMaut> incr() const;

  /// Same recursion and traversal order as PreENfa::build, so that state
  /// numbers agree with the efficient construction.
  PreMaut build(const Regex& x, std::size_t i, std::size_t f) const;

  /// Unit vectors on i and f around the accumulated matrix.
  Maut to_maut(std::size_t i, std::size_t f) const;

 private:
  explicit PreMaut(RegexMatrix delta) : delta_(std::move(delta)) {}

  RegexMatrix delta_;
};

/// The single entry of u.M*.v, simplified.
Regex maut_eval(const Maut& a);

Maut regex_to_maut(const Regex& x);

/// One on each epsilon edge, the letter on each labelled edge, summed.
Maut enfa_to_maut(const ENfa& a);
Maut nfa_to_maut(const Nfa& a);
Maut dfa_to_maut(const Dfa& a);

/// Atoms of an entry: its summands, where every summand must be One or a
/// variable. The label used for One is atom_one.
inline constexpr long long atom_one = -1;
std::set<long long> atoms(const Regex& entry);

/// Entry-wise atom-set equality of two matricial automata.
bool same_atoms(const Maut& a, const Maut& b);

}  // namespace kadec::maut
