#include "kadec/automata.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_map>

namespace kadec {

// StateSet

StateSet& StateSet::operator|=(const StateSet& other) {
  if (other.universe_ != universe_) throw std::invalid_argument("state sets over different universes");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

bool StateSet::intersects(const StateSet& other) const {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t w = 0; w < n; ++w) {
    if ((words_[w] & other.words_[w]) != 0) return true;
  }
  return false;
}

bool StateSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t StateSet::count() const {
  std::size_t n = 0;
  for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::vector<State> StateSet::to_vector() const {
  std::vector<State> out;
  for_each([&](State s) { out.push_back(s); });
  return out;
}

std::size_t StateSet::Hash::operator()(const StateSet& s) const {
  std::uint64_t h = 0xcbf29ce484222325ULL ^ s.universe_;
  for (std::uint64_t w : s.words_) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

// Construction

PreENfa::PreENfa(std::size_t size) : eps_(size) {}

void PreENfa::check(State s) const {
  if (s >= size()) throw std::out_of_range("state " + std::to_string(s) + " outside accumulator");
}

void PreENfa::add_one(State i, State f) {
  check(i);
  check(f);
  eps_[i].push_back(f);
}

void PreENfa::add_var(Label a, State i, State f) {
  check(i);
  check(f);
  if (delta_.size() <= a) delta_.resize(static_cast<std::size_t>(a) + 1);
  auto& row = delta_[a];
  if (row.size() <= i) row.resize(static_cast<std::size_t>(i) + 1);
  row[i].push_back(f);
}

State PreENfa::incr() {
  eps_.emplace_back();
  return static_cast<State>(eps_.size() - 1);
}

void PreENfa::build(const Regex& x, State i, State f) {
  switch (x.kind()) {
    case RegexKind::Zero:
      break;
    case RegexKind::One:
      add_one(i, f);
      break;
    case RegexKind::Var:
      add_var(x.label(), i, f);
      break;
    case RegexKind::Plus:
      build(x.right(), i, f);
      build(x.left(), i, f);
      break;
    case RegexKind::Dot: {
      const State p = incr();
      build(x.right(), p, f);
      build(x.left(), i, p);
      break;
    }
    case RegexKind::Star: {
      const State p = incr();
      add_one(p, f);
      build(x.left(), p, p);
      add_one(i, p);
      break;
    }
  }
}

ENfa PreENfa::to_enfa(State initial, State final, Label labels) const {
  check(initial);
  check(final);
  if (delta_.size() > labels) throw std::invalid_argument("label count smaller than labels in use");
  ENfa a;
  a.size = size();
  a.labels = labels;
  a.initial = initial;
  a.final = final;
  a.eps.assign(a.size, StateSet(a.size));
  for (std::size_t s = 0; s < a.size; ++s) {
    for (State t : eps_[s]) a.eps[s].insert(t);
  }
  a.delta.assign(labels, std::vector<StateSet>(a.size, StateSet(a.size)));
  for (std::size_t l = 0; l < delta_.size(); ++l) {
    for (std::size_t s = 0; s < delta_[l].size(); ++s) {
      for (State t : delta_[l][s]) a.delta[l][s].insert(t);
    }
  }
  return a;
}

ENfa regex_to_enfa(const Regex& x) {
  PreENfa acc;
  acc.build(x, 0, 1);
  return acc.to_enfa(0, 1, x.label_bound());
}

// Epsilon removal

namespace {

enum class Color : std::uint8_t { White, Grey, Black };

// Iterative post-order DFS over epsilon edges. Calls finish(s) once every
// successor of s is finished; returns false on a back edge.
template <class Finish>
bool eps_postorder(const ENfa& a, Finish&& finish) {
  std::vector<Color> color(a.size, Color::White);
  std::vector<std::pair<State, std::vector<State>>> stack;
  for (State root = 0; root < a.size; ++root) {
    if (color[root] != Color::White) continue;
    color[root] = Color::Grey;
    stack.emplace_back(root, a.eps[root].to_vector());
    while (!stack.empty()) {
      auto& [s, pending] = stack.back();
      if (pending.empty()) {
        color[s] = Color::Black;
        finish(s);
        stack.pop_back();
        continue;
      }
      const State t = pending.back();
      pending.pop_back();
      if (color[t] == Color::Grey) return false;
      if (color[t] == Color::White) {
        color[t] = Color::Grey;
        stack.emplace_back(t, a.eps[t].to_vector());
      }
    }
  }
  return true;
}

StateSet eps_closure_general(const ENfa& a, StateSet current) {
  std::vector<State> todo = current.to_vector();
  while (!todo.empty()) {
    const State s = todo.back();
    todo.pop_back();
    a.eps[s].for_each([&](State t) {
      if (!current.contains(t)) {
        current.insert(t);
        todo.push_back(t);
      }
    });
  }
  return current;
}

}  // namespace

bool check_eps_acyclic(const ENfa& a) {
  return eps_postorder(a, [](State) {});
}

Nfa enfa_to_nfa(const ENfa& a) {
  // Post-order guarantees every successor's closure is already known.
  std::vector<StateSet> closure(a.size);
  const bool acyclic = eps_postorder(a, [&](State s) {
    StateSet c(a.size);
    c.insert(s);
    a.eps[s].for_each([&](State t) { c |= closure[t]; });
    closure[s] = std::move(c);
  });
  if (!acyclic) throw std::logic_error("enfa_to_nfa: epsilon transitions contain a cycle");

  Nfa n;
  n.size = a.size;
  n.labels = a.labels;
  n.delta.assign(a.labels, std::vector<StateSet>(a.size, StateSet(a.size)));
  for (Label l = 0; l < a.labels; ++l) {
    for (State s = 0; s < a.size; ++s) {
      a.delta[l][s].for_each([&](State t) { n.delta[l][s] |= closure[t]; });
    }
  }
  n.initial = closure[a.initial];
  n.final = StateSet(a.size);
  n.final.insert(a.final);
  return n;
}

// Simulation

bool run_enfa(const ENfa& a, std::span<const Label> w) {
  StateSet current(a.size);
  current.insert(a.initial);
  current = eps_closure_general(a, std::move(current));
  for (Label l : w) {
    if (l >= a.labels) return false;
    StateSet next(a.size);
    current.for_each([&](State s) { next |= a.delta[l][s]; });
    current = eps_closure_general(a, std::move(next));
  }
  return current.contains(a.final);
}

bool run_nfa(const Nfa& a, std::span<const Label> w) {
  StateSet current = a.initial;
  for (Label l : w) {
    if (l >= a.labels) return false;
    StateSet next(a.size);
    current.for_each([&](State s) { next |= a.delta[l][s]; });
    current = std::move(next);
  }
  return current.intersects(a.final);
}

bool run_dfa(const Dfa& a, std::span<const Label> w) {
  State s = a.initial;
  for (Label l : w) {
    if (l >= a.labels) return false;
    s = a.delta[l][s];
  }
  return a.final.contains(s);
}

// Determinization

Determinized nfa_to_dfa(const Nfa& a, const Deadline* deadline) {
  Determinized out;
  std::unordered_map<StateSet, State, StateSet::Hash> index;
  std::vector<State> stack;
  std::vector<std::vector<State>> rows;  // [dfa state][label]

  auto discover = [&](StateSet s) -> State {
    auto [it, fresh] = index.try_emplace(std::move(s), static_cast<State>(out.rho.size()));
    if (fresh) {
      out.rho.push_back(it->first);
      rows.emplace_back(a.labels, 0);
      stack.push_back(it->second);
    }
    return it->second;
  };

  discover(a.initial);
  std::size_t steps = 0;
  while (!stack.empty()) {
    if (deadline != nullptr && (++steps & 63) == 0) deadline->check();
    const State d = stack.back();
    stack.pop_back();
    for (Label l = 0; l < a.labels; ++l) {
      StateSet next(a.size);
      out.rho[d].for_each([&](State s) { next |= a.delta[l][s]; });
      const State t = discover(std::move(next));
      rows[d][l] = t;
    }
  }

  Dfa& dfa = out.dfa;
  dfa.size = out.rho.size();
  dfa.labels = a.labels;
  dfa.initial = 0;
  dfa.delta.assign(a.labels, std::vector<State>(dfa.size, 0));
  for (State d = 0; d < dfa.size; ++d) {
    for (Label l = 0; l < a.labels; ++l) dfa.delta[l][d] = rows[d][l];
  }
  dfa.final = StateSet(dfa.size);
  for (State d = 0; d < dfa.size; ++d) {
    if (out.rho[d].intersects(a.final)) dfa.final.insert(d);
  }
  return out;
}

// Matrix views

kamat::BoolMatrix decoding_matrix(const SubsetMap& rho, std::size_t nfa_size) {
  kamat::BoolMatrix x(rho.size(), nfa_size);
  for (std::size_t s = 0; s < rho.size(); ++s) {
    rho[s].for_each([&](State j) { x(s, j) = true; });
  }
  return x;
}

kamat::BoolMatrix transition_matrix(const Nfa& a, Label label) {
  kamat::BoolMatrix m(a.size, a.size);
  if (label >= a.labels) return m;
  for (State s = 0; s < a.size; ++s) {
    a.delta[label][s].for_each([&](State t) { m(s, t) = true; });
  }
  return m;
}

kamat::BoolMatrix transition_matrix(const Dfa& a, Label label) {
  kamat::BoolMatrix m(a.size, a.size);
  if (label >= a.labels) return m;
  for (State s = 0; s < a.size; ++s) m(s, a.delta[label][s]) = true;
  return m;
}

kamat::BoolMatrix initial_row(const Nfa& a) {
  kamat::BoolMatrix u(1, a.size);
  a.initial.for_each([&](State s) { u(0, s) = true; });
  return u;
}

kamat::BoolMatrix initial_row(const Dfa& a) {
  kamat::BoolMatrix u(1, a.size);
  u(0, a.initial) = true;
  return u;
}

kamat::BoolMatrix final_column(const Nfa& a) {
  kamat::BoolMatrix v(a.size, 1);
  a.final.for_each([&](State s) { v(s, 0) = true; });
  return v;
}

kamat::BoolMatrix final_column(const Dfa& a) {
  kamat::BoolMatrix v(a.size, 1);
  a.final.for_each([&](State s) { v(s, 0) = true; });
  return v;
}

// DOT

namespace {

void dot_header(std::ostringstream& out, const std::string& name, std::size_t size,
                const std::vector<State>& initial, const auto& accepting) {
  out << "digraph " << name << " {\n";
  out << "  rankdir=LR;\n";
  out << "  start [shape=point];\n";
  for (State s = 0; s < size; ++s) {
    out << "  " << s << " [shape=" << (accepting(s) ? "doublecircle" : "circle") << "];\n";
  }
  for (State s : initial) out << "  start -> " << s << ";\n";
}

void dot_edge(std::ostringstream& out, State s, State t, const std::string& label) {
  out << "  " << s << " -> " << t << " [label=\"" << label << "\"];\n";
}

}  // namespace

std::string to_dot(const ENfa& a, const std::string& name) {
  std::ostringstream out;
  dot_header(out, name, a.size, {a.initial}, [&](State s) { return s == a.final; });
  for (State s = 0; s < a.size; ++s) {
    a.eps[s].for_each([&](State t) { dot_edge(out, s, t, "ε"); });
    for (Label l = 0; l < a.labels; ++l) {
      a.delta[l][s].for_each([&](State t) { dot_edge(out, s, t, label_name(l)); });
    }
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const Nfa& a, const std::string& name) {
  std::ostringstream out;
  dot_header(out, name, a.size, a.initial.to_vector(), [&](State s) { return a.final.contains(s); });
  for (State s = 0; s < a.size; ++s) {
    for (Label l = 0; l < a.labels; ++l) {
      a.delta[l][s].for_each([&](State t) { dot_edge(out, s, t, label_name(l)); });
    }
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const Dfa& a, const std::string& name) {
  std::ostringstream out;
  dot_header(out, name, a.size, {a.initial}, [&](State s) { return a.final.contains(s); });
  for (State s = 0; s < a.size; ++s) {
    for (Label l = 0; l < a.labels; ++l) dot_edge(out, s, a.delta[l][s], label_name(l));
  }
  out << "}\n";
  return out.str();
}

}  // namespace kadec
