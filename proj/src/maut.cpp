#include "kadec/maut.hpp"

#include <stdexcept>

namespace kadec::maut {

using K = kamat::SimplifyingRegexKA;

PreMaut PreMaut::add(const Regex& x, std::size_t i, std::size_t f) const {
  if (i >= size() || f >= size()) throw std::out_of_range("pre_add: state outside accumulator");
  return PreMaut(kamat::mx_plus(delta_, kamat::mx_point<K>(size(), size(), i, f, x)));
}

std::pair<std::size_t, PreMaut> PreMaut::incr() const {
  const std::size_t n = size();
  return {n, PreMaut(kamat::mx_blocks(delta_, kamat::mx_zero<K>(n, 1), kamat::mx_zero<K>(1, n),
                                      kamat::mx_zero<K>(1, 1)))};
}

PreMaut PreMaut::build(const Regex& x, std::size_t i, std::size_t f) const {
  switch (x.kind()) {
    case RegexKind::Zero:
      return *this;
    case RegexKind::One:
    case RegexKind::Var:
      return add(x, i, f);
    case RegexKind::Plus:
      return build(x.right(), i, f).build(x.left(), i, f);
    case RegexKind::Dot: {
      auto [p, acc] = incr();
      return acc.build(x.right(), p, f).build(x.left(), i, p);
    }
    case RegexKind::Star: {
      auto [p, acc] = incr();
      return acc.add(Regex::one(), p, f).build(x.left(), p, p).add(Regex::one(), i, p);
    }
  }
  return *this;
}

Maut PreMaut::to_maut(std::size_t i, std::size_t f) const {
  return Maut{size(), kamat::mx_point<K>(1, size(), 0, i, Regex::one()), delta_,
              kamat::mx_point<K>(size(), 1, f, 0, Regex::one())};
}

Regex maut_eval(const Maut& a) {
  const RegexMatrix r = kamat::mx_dot(kamat::mx_dot(a.initial, kamat::mx_star(a.delta)), a.final);
  return simplify(kamat::mx_to_scal(r));
}

Maut regex_to_maut(const Regex& x) { return PreMaut().build(x, 0, 1).to_maut(0, 1); }

namespace {

RegexMatrix labelled_delta(std::size_t size, Label labels, const auto& successors) {
  RegexMatrix m(size, size);
  for (Label l = 0; l < labels; ++l) {
    for (State s = 0; s < size; ++s) {
      successors(l, s, [&](State t) { m(s, t) = K::plus(m(s, t), Regex::var(l)); });
    }
  }
  return m;
}

RegexMatrix unit_row(std::size_t size, const StateSet& states) {
  RegexMatrix u(1, size);
  states.for_each([&](State s) { u(0, s) = Regex::one(); });
  return u;
}

RegexMatrix unit_column(std::size_t size, const StateSet& states) {
  RegexMatrix v(size, 1);
  states.for_each([&](State s) { v(s, 0) = Regex::one(); });
  return v;
}

}  // namespace

Maut enfa_to_maut(const ENfa& a) {
  RegexMatrix m = labelled_delta(a.size, a.labels, [&](Label l, State s, auto&& emit) { a.delta[l][s].for_each(emit); });
  for (State s = 0; s < a.size; ++s) {
    a.eps[s].for_each([&](State t) { m(s, t) = K::plus(m(s, t), Regex::one()); });
  }
  return Maut{a.size, kamat::mx_point<K>(1, a.size, 0, a.initial, Regex::one()), std::move(m),
              kamat::mx_point<K>(a.size, 1, a.final, 0, Regex::one())};
}

Maut nfa_to_maut(const Nfa& a) {
  RegexMatrix m = labelled_delta(a.size, a.labels, [&](Label l, State s, auto&& emit) { a.delta[l][s].for_each(emit); });
  return Maut{a.size, unit_row(a.size, a.initial), std::move(m), unit_column(a.size, a.final)};
}

Maut dfa_to_maut(const Dfa& a) {
  RegexMatrix m = labelled_delta(a.size, a.labels, [&](Label l, State s, auto&& emit) { emit(a.delta[l][s]); });
  return Maut{a.size, kamat::mx_point<K>(1, a.size, 0, a.initial, Regex::one()), std::move(m),
              unit_column(a.size, a.final)};
}

std::set<long long> atoms(const Regex& entry) {
  std::set<long long> out;
  switch (entry.kind()) {
    case RegexKind::Zero:
      break;
    case RegexKind::One:
      out.insert(atom_one);
      break;
    case RegexKind::Var:
      out.insert(static_cast<long long>(entry.label()));
      break;
    case RegexKind::Plus: {
      out = atoms(entry.left());
      auto rest = atoms(entry.right());
      out.insert(rest.begin(), rest.end());
      break;
    }
    default:
      throw std::invalid_argument("atoms: entry is not a sum of atoms: " + print(entry));
  }
  return out;
}

bool same_atoms(const Maut& a, const Maut& b) {
  auto eq = [](const Regex& x, const Regex& y) { return atoms(x) == atoms(y); };
  return a.size == b.size && a.initial.equals(b.initial, eq) && a.delta.equals(b.delta, eq) &&
         a.final.equals(b.final, eq);
}

}  // namespace kadec::maut
