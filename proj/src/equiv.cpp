#include "kadec/equiv.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace kadec {

DisjointSet::DisjointSet(std::size_t n) : parent_(n), rank_(n, 0) {
  std::iota(parent_.begin(), parent_.end(), State{0});
}

void DisjointSet::check(State s) const {
  if (s >= parent_.size()) throw std::out_of_range("element " + std::to_string(s) + " outside disjoint set");
}

State DisjointSet::root(State s) const {
  check(s);
  while (parent_[s] != s) s = parent_[s];
  return s;
}

State DisjointSet::find(State s) {
  const State r = root(s);
  while (parent_[s] != r) {
    const State next = parent_[s];
    parent_[s] = r;
    s = next;
  }
  return r;
}

bool DisjointSet::unite(State s, State t) {
  State rs = find(s);
  State rt = find(t);
  if (rs == rt) return false;
  if (rank_[rs] < rank_[rt]) std::swap(rs, rt);
  parent_[rt] = rs;
  if (rank_[rs] == rank_[rt]) ++rank_[rs];
  return true;
}

// Disjoint union

namespace {

// Copies one DFA into the product at the given offset, routing letters it
// does not know to a fresh sink.
void embed(const Dfa& a, State offset, Label labels, ProductDfa& p) {
  const bool needs_sink = a.labels < labels;
  const State sink = offset + static_cast<State>(a.size);
  for (Label l = 0; l < labels; ++l) {
    for (State s = 0; s < a.size; ++s) {
      p.delta[l][offset + s] = l < a.labels ? offset + a.delta[l][s] : sink;
    }
    if (needs_sink) p.delta[l][sink] = sink;
  }
  a.final.for_each([&](State s) { p.final.insert(offset + s); });
}

std::size_t component_size(const Dfa& a, Label labels) { return a.size + (a.labels < labels ? 1 : 0); }

}  // namespace

ProductDfa disjoint_union(const Dfa& a, const Dfa& b) {
  ProductDfa p;
  p.labels = std::max(a.labels, b.labels);
  p.first_size = component_size(a, p.labels);
  p.size = p.first_size + component_size(b, p.labels);
  p.delta.assign(p.labels, std::vector<State>(p.size, 0));
  p.final = StateSet(p.size);
  embed(a, 0, p.labels, p);
  embed(b, static_cast<State>(p.first_size), p.labels, p);
  p.first_initial = a.initial;
  p.second_initial = static_cast<State>(p.first_size) + b.initial;
  return p;
}

kamat::BoolMatrix transition_matrix(const ProductDfa& p, Label label) {
  kamat::BoolMatrix m(p.size, p.size);
  if (label >= p.labels) return m;
  for (State s = 0; s < p.size; ++s) m(s, p.delta[label][s]) = true;
  return m;
}

kamat::BoolMatrix first_initial_row(const ProductDfa& p) {
  kamat::BoolMatrix u(1, p.size);
  u(0, p.first_initial) = true;
  return u;
}

kamat::BoolMatrix second_initial_row(const ProductDfa& p) {
  kamat::BoolMatrix u(1, p.size);
  u(0, p.second_initial) = true;
  return u;
}

kamat::BoolMatrix final_column(const ProductDfa& p) {
  kamat::BoolMatrix v(p.size, 1);
  p.final.for_each([&](State s) { v(s, 0) = true; });
  return v;
}

// Hopcroft-Karp

EquivRun dfa_equiv_run(const Dfa& a, const Dfa& b, const Deadline* deadline) {
  EquivRun run;
  run.product = disjoint_union(a, b);
  const ProductDfa& p = run.product;
  run.classes = DisjointSet(p.size);

  // Access words are kept as a tree of (parent, letter) links.
  struct TraceNode {
    std::size_t parent;
    Label letter;
  };
  constexpr std::size_t no_parent = static_cast<std::size_t>(-1);
  std::vector<TraceNode> trace;
  struct Task {
    State s, t;
    std::size_t trace;
  };
  std::vector<Task> stack{{p.first_initial, p.second_initial, no_parent}};

  auto word_of = [&](std::size_t node) {
    Word w;
    for (; node != no_parent; node = trace[node].parent) w.push_back(trace[node].letter);
    std::reverse(w.begin(), w.end());
    return w;
  };

  std::size_t steps = 0;
  while (!stack.empty()) {
    if (deadline != nullptr && (++steps & 255) == 0) deadline->check();
    const Task task = stack.back();
    stack.pop_back();
    if (run.classes.find(task.s) == run.classes.find(task.t)) {
      run.skipped.emplace_back(task.s, task.t);
      continue;
    }
    if (p.final.contains(task.s) != p.final.contains(task.t)) {
      run.verdict = Verdict::counter_example(word_of(task.trace));
      return run;
    }
    run.classes.unite(task.s, task.t);
    run.merged.emplace_back(task.s, task.t);
    // Pushed in reverse so that the smallest letter is explored first.
    for (Label l = p.labels; l-- > 0;) {
      trace.push_back({task.trace, l});
      stack.push_back({p.delta[l][task.s], p.delta[l][task.t], trace.size() - 1});
    }
  }
  run.verdict = Verdict::equivalent();
  return run;
}

Verdict dfa_equiv(const Dfa& a, const Dfa& b, const Deadline* deadline) {
  return dfa_equiv_run(a, b, deadline).verdict;
}

kamat::BoolMatrix equivalence_matrix(const DisjointSet& d) {
  const std::size_t n = d.size();
  std::vector<State> roots(n);
  for (State i = 0; i < n; ++i) roots[i] = d.root(i);
  kamat::BoolMatrix y(n, n);
  for (State i = 0; i < n; ++i)
    for (State j = 0; j < n; ++j) y(i, j) = roots[i] == roots[j];
  return y;
}

}  // namespace kadec
