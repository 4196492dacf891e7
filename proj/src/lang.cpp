#include "kadec/lang.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <unordered_map>
#include <unordered_set>

namespace kadec {

std::string word_to_string(std::span<const Label> w) {
  if (w.empty()) return "ε";
  std::string out;
  for (Label a : w) out += label_name(a);
  return out;
}

std::vector<Label> alphabet(const Regex& x) {
  std::set<Label> seen;
  std::unordered_set<const void*> visited;
  std::function<void(const Regex&)> go = [&](const Regex& e) {
    if (!visited.insert(e.id()).second) return;
    switch (e.kind()) {
      case RegexKind::Var:
        seen.insert(e.label());
        break;
      case RegexKind::Plus:
      case RegexKind::Dot:
        go(e.left());
        go(e.right());
        break;
      case RegexKind::Star:
        go(e.left());
        break;
      default:
        break;
    }
  };
  go(x);
  return {seen.begin(), seen.end()};
}

namespace {

class Matcher {
 public:
  explicit Matcher(std::span<const Label> w) : w_(w) {}

  // Does e match the factor w[i, j)?
  bool run(const Regex& e, std::size_t i, std::size_t j) {
    Key key{e.id(), i, j};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool r = false;
    switch (e.kind()) {
      case RegexKind::Zero:
        break;
      case RegexKind::One:
        r = i == j;
        break;
      case RegexKind::Var:
        r = j == i + 1 && w_[i] == e.label();
        break;
      case RegexKind::Plus:
        r = run(e.left(), i, j) || run(e.right(), i, j);
        break;
      case RegexKind::Dot:
        for (std::size_t k = i; k <= j && !r; ++k) r = run(e.left(), i, k) && run(e.right(), k, j);
        break;
      case RegexKind::Star:
        // First iteration consumes a non-empty prefix.
        r = i == j;
        for (std::size_t k = i + 1; k <= j && !r; ++k) r = run(e.left(), i, k) && run(e, k, j);
        break;
    }
    memo_.emplace(key, r);
    return r;
  }

 private:
  struct Key {
    const void* node;
    std::size_t i, j;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      std::size_t h = std::hash<const void*>{}(k.node);
      h ^= (k.i * 0x9e3779b97f4a7c15ULL) + (h << 6) + (h >> 2);
      h ^= (k.j * 0xc2b2ae3d27d4eb4fULL) + (h << 6) + (h >> 2);
      return h;
    }
  };

  std::span<const Label> w_;
  std::unordered_map<Key, bool, KeyHash> memo_;
};

// Derivatives identified modulo ACI of + and associativity of concatenation.

int compare(const Regex& x, const Regex& y) {
  if (x.id() == y.id()) return 0;
  if (x.kind() != y.kind()) return x.kind() < y.kind() ? -1 : 1;
  switch (x.kind()) {
    case RegexKind::Zero:
    case RegexKind::One:
      return 0;
    case RegexKind::Var:
      return x.label() == y.label() ? 0 : (x.label() < y.label() ? -1 : 1);
    case RegexKind::Plus:
    case RegexKind::Dot:
      if (int c = compare(x.left(), y.left()); c != 0) return c;
      return compare(x.right(), y.right());
    case RegexKind::Star:
      return compare(x.left(), y.left());
  }
  return 0;
}

void summands(const Regex& x, std::vector<Regex>& out) {
  if (x.is(RegexKind::Plus)) {
    summands(x.left(), out);
    summands(x.right(), out);
  } else if (!x.is(RegexKind::Zero)) {
    out.push_back(x);
  }
}

Regex aci_plus(const Regex& x, const Regex& y) {
  std::vector<Regex> terms;
  summands(x, terms);
  summands(y, terms);
  if (terms.empty()) return Regex::zero();
  std::sort(terms.begin(), terms.end(), [](const Regex& a, const Regex& b) { return compare(a, b) < 0; });
  terms.erase(std::unique(terms.begin(), terms.end(), [](const Regex& a, const Regex& b) { return compare(a, b) == 0; }),
              terms.end());
  Regex r = terms.front();
  for (std::size_t i = 1; i < terms.size(); ++i) r = Regex::plus(r, terms[i]);
  return r;
}

Regex assoc_dot(const Regex& x, const Regex& y) {
  if (x.is(RegexKind::Zero) || y.is(RegexKind::Zero)) return Regex::zero();
  if (x.is(RegexKind::One)) return y;
  if (y.is(RegexKind::One)) return x;
  if (x.is(RegexKind::Dot)) return assoc_dot(x.left(), assoc_dot(x.right(), y));
  return Regex::dot(x, y);
}

Regex normalize(const Regex& x) {
  switch (x.kind()) {
    case RegexKind::Plus:
      return aci_plus(normalize(x.left()), normalize(x.right()));
    case RegexKind::Dot:
      return assoc_dot(normalize(x.left()), normalize(x.right()));
    case RegexKind::Star: {
      Regex b = normalize(x.left());
      return b.is(RegexKind::Zero) || b.is(RegexKind::One) ? Regex::one() : Regex::star(b);
    }
    default:
      return x;
  }
}

Regex derivative(const Regex& x, Label a) {
  switch (x.kind()) {
    case RegexKind::Zero:
    case RegexKind::One:
      return Regex::zero();
    case RegexKind::Var:
      return x.label() == a ? Regex::one() : Regex::zero();
    case RegexKind::Plus:
      return aci_plus(derivative(x.left(), a), derivative(x.right(), a));
    case RegexKind::Dot: {
      Regex first = assoc_dot(derivative(x.left(), a), x.right());
      return nullable(x.left()) ? aci_plus(first, derivative(x.right(), a)) : first;
    }
    case RegexKind::Star:
      return assoc_dot(derivative(x.left(), a), x);
  }
  return Regex::zero();
}

}  // namespace

bool matches(const Regex& x, std::span<const Label> w) { return Matcher(w).run(x, 0, w.size()); }

std::set<Word> enumerate(const Regex& x, std::size_t maxlen) {
  const std::vector<Label> sigma = alphabet(x);
  std::set<Word> out;
  Word w;
  // Odometer over all words of each length.
  for (std::size_t len = 0; len <= maxlen; ++len) {
    if (len > 0 && sigma.empty()) break;
    std::vector<std::size_t> digits(len, 0);
    for (;;) {
      w.resize(len);
      for (std::size_t i = 0; i < len; ++i) w[i] = sigma[digits[i]];
      if (matches(x, w)) out.insert(w);
      std::size_t i = len;
      while (i > 0 && ++digits[i - 1] == sigma.size()) digits[--i] = 0;
      if (i == 0) break;
    }
  }
  return out;
}

std::optional<Word> distinguishing_word(const Regex& x, const Regex& y, std::size_t maxlen) {
  std::vector<Label> sigma = alphabet(x);
  for (Label a : alphabet(y)) sigma.push_back(a);
  std::sort(sigma.begin(), sigma.end());
  sigma.erase(std::unique(sigma.begin(), sigma.end()), sigma.end());

  struct Entry {
    Regex x, y;
    Word w;
  };
  std::deque<Entry> queue;
  std::unordered_set<std::string> seen;
  auto visit = [&](Regex dx, Regex dy, Word w) {
    if (seen.insert(print(dx) + "|" + print(dy)).second) queue.push_back({std::move(dx), std::move(dy), std::move(w)});
  };
  visit(normalize(x), normalize(y), {});
  // FIFO with letters in increasing order yields shortlex order.
  while (!queue.empty()) {
    Entry e = std::move(queue.front());
    queue.pop_front();
    if (nullable(e.x) != nullable(e.y)) return e.w;
    if (e.w.size() == maxlen) continue;
    for (Label a : sigma) {
      Word next = e.w;
      next.push_back(a);
      visit(derivative(e.x, a), derivative(e.y, a), std::move(next));
    }
  }
  return std::nullopt;
}

}  // namespace kadec
