#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "kadec/kamat.hpp"
#include "kadec/regex.hpp"

namespace kadec {

using State = std::uint32_t;

/// Set of states of one automaton, as a bitset over [0, universe).
/// Equal sets over the same universe have identical word vectors, which is
/// the canonical key used during determinization.
class StateSet {
 public:
  StateSet() = default;
  explicit StateSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const { return universe_; }

  void insert(State s) {
    check(s);
    words_[s >> 6] |= std::uint64_t{1} << (s & 63);
  }
  bool contains(State s) const { return s < universe_ && ((words_[s >> 6] >> (s & 63)) & 1) != 0; }

  StateSet& operator|=(const StateSet& other);
  bool intersects(const StateSet& other) const;
  bool empty() const;
  std::size_t count() const;

  /// Sorted list of members.
  std::vector<State> to_vector() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = __builtin_ctzll(bits);
        f(static_cast<State>(w * 64 + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

  std::span<const std::uint64_t> words() const { return words_; }

  friend bool operator==(const StateSet&, const StateSet&) = default;

  struct Hash {
    std::size_t operator()(const StateSet& s) const;
  };

 private:
  void check(State s) const {
    if (s >= universe_) throw std::out_of_range("state " + std::to_string(s) + " outside set universe");
  }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Automaton with epsilon transitions, one initial and one accepting state.
struct ENfa {
  std::size_t size = 0;
  Label labels = 0;
  std::vector<StateSet> eps;                 // [state]
  std::vector<std::vector<StateSet>> delta;  // [label][state]
  State initial = 0;
  State final = 1;
};

struct Nfa {
  std::size_t size = 0;
  Label labels = 0;
  std::vector<std::vector<StateSet>> delta;  // [label][state]
  StateSet initial;
  StateSet final;
};

/// Complete deterministic automaton.
struct Dfa {
  std::size_t size = 0;
  Label labels = 0;
  std::vector<std::vector<State>> delta;  // [label][state]
  State initial = 0;
  StateSet final;
};

/// DFA state index -> the NFA state set it stands for.
using SubsetMap = std::vector<StateSet>;

struct Determinized {
  Dfa dfa;
  SubsetMap rho;
};

class Timeout : public std::runtime_error {
 public:
  Timeout() : std::runtime_error("deadline exceeded") {}
};

/// Cooperative time limit polled by the long-running loops.
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;
  explicit Deadline(Clock::duration budget) : end_(Clock::now() + budget) {}
  void check() const {
    if (Clock::now() > end_) throw Timeout();
  }

 private:
  Clock::time_point end_;
};

/// Accumulator for the construction: states and transitions are only ever
/// added. Duplicate transitions collapse because targets are sets.
class PreENfa {
 public:
  /// Two states, no transitions.
  PreENfa() : PreENfa(2) {}
  explicit PreENfa(std::size_t size);

  std::size_t size() const { return eps_.size(); }
  void add_one(State i, State f);
  void add_var(Label a, State i, State f);
  /// Appends a fresh state and returns it.
  State incr();

  /// Inserts an automaton for x between i and f.
  void build(const Regex& x, State i, State f);

  ENfa to_enfa(State initial, State final, Label labels) const;

 private:
  void check(State s) const;

  std::vector<std::vector<State>> eps_;                // [state]
  std::vector<std::vector<std::vector<State>>> delta_;  // [label][state], grown on demand
};

/// Follow-automaton style construction between states 0 and 1.
/// Size is 2 + number of Dot nodes + number of Star nodes.
ENfa regex_to_enfa(const Regex& x);

bool check_eps_acyclic(const ENfa& a);

/// Replaces epsilon paths by their reflexive-transitive closure. Requires an
/// acyclic epsilon graph; throws std::logic_error on a cycle.
Nfa enfa_to_nfa(const ENfa& a);

bool run_enfa(const ENfa& a, std::span<const Label> w);
bool run_nfa(const Nfa& a, std::span<const Label> w);
bool run_dfa(const Dfa& a, std::span<const Label> w);

/// Subset construction over accessible subsets, depth first. The initial
/// DFA state is 0; the empty subset, if reached, is an ordinary sink.
Determinized nfa_to_dfa(const Nfa& a, const Deadline* deadline = nullptr);

// Boolean-matrix views, for algebraic checks.

/// X[s][j] = 1 iff j is in rho(s).
kamat::BoolMatrix decoding_matrix(const SubsetMap& rho, std::size_t nfa_size);
kamat::BoolMatrix transition_matrix(const Nfa& a, Label label);
kamat::BoolMatrix transition_matrix(const Dfa& a, Label label);
kamat::BoolMatrix initial_row(const Nfa& a);
kamat::BoolMatrix initial_row(const Dfa& a);
kamat::BoolMatrix final_column(const Nfa& a);
kamat::BoolMatrix final_column(const Dfa& a);

// Graphviz export. States are listed by index, then edges by source state,
// epsilon first, then by label and target.
std::string to_dot(const ENfa& a, const std::string& name = "enfa");
std::string to_dot(const Nfa& a, const std::string& name = "nfa");
std::string to_dot(const Dfa& a, const std::string& name = "dfa");

}  // namespace kadec
