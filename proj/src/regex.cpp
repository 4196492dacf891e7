#include "kadec/regex.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <unordered_map>

namespace kadec {

const std::shared_ptr<const Regex::Node>& Regex::zero_node() {
  static const auto node = std::make_shared<const Node>();
  return node;
}

Regex::Regex() : node_(zero_node()) {}

Regex Regex::zero() { return Regex(); }

Regex Regex::one() {
  static const auto node = std::make_shared<const Node>(Node{RegexKind::One, 0, nullptr, nullptr});
  return Regex(node);
}

Regex Regex::var(Label a) {
  return Regex(std::make_shared<const Node>(Node{RegexKind::Var, a, nullptr, nullptr}));
}

Regex Regex::plus(Regex x, Regex y) {
  return Regex(std::make_shared<const Node>(
      Node{RegexKind::Plus, 0, std::move(x.node_), std::move(y.node_)}));
}

Regex Regex::dot(Regex x, Regex y) {
  return Regex(std::make_shared<const Node>(
      Node{RegexKind::Dot, 0, std::move(x.node_), std::move(y.node_)}));
}

Regex Regex::star(Regex x) {
  return Regex(std::make_shared<const Node>(Node{RegexKind::Star, 0, std::move(x.node_), nullptr}));
}

std::size_t Regex::size() const {
  switch (kind()) {
    case RegexKind::Zero:
    case RegexKind::One:
    case RegexKind::Var:
      return 1;
    case RegexKind::Plus:
    case RegexKind::Dot:
      return 1 + left().size() + right().size();
    case RegexKind::Star:
      return 1 + left().size();
  }
  return 1;
}

std::size_t Regex::count(RegexKind k) const {
  std::size_t n = kind() == k ? 1 : 0;
  if (is(RegexKind::Plus) || is(RegexKind::Dot)) {
    n += left().count(k) + right().count(k);
  } else if (is(RegexKind::Star)) {
    n += left().count(k);
  }
  return n;
}

Label Regex::label_bound() const {
  // Visited set keeps this linear on shared DAGs.
  std::unordered_map<const void*, Label> memo;
  std::function<Label(const Regex&)> go = [&](const Regex& x) -> Label {
    if (auto it = memo.find(x.id()); it != memo.end()) return it->second;
    Label r = 0;
    switch (x.kind()) {
      case RegexKind::Zero:
      case RegexKind::One:
        break;
      case RegexKind::Var:
        r = x.label() + 1;
        break;
      case RegexKind::Plus:
      case RegexKind::Dot:
        r = std::max(go(x.left()), go(x.right()));
        break;
      case RegexKind::Star:
        r = go(x.left());
        break;
    }
    memo.emplace(x.id(), r);
    return r;
  };
  return go(*this);
}

bool operator==(const Regex& x, const Regex& y) {
  if (x.node_ == y.node_) return true;
  if (x.kind() != y.kind()) return false;
  switch (x.kind()) {
    case RegexKind::Zero:
    case RegexKind::One:
      return true;
    case RegexKind::Var:
      return x.label() == y.label();
    case RegexKind::Plus:
    case RegexKind::Dot:
      return x.left() == y.left() && x.right() == y.right();
    case RegexKind::Star:
      return x.left() == y.left();
  }
  return false;
}

// Parsing

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Regex parse_all() {
    Regex x = expr();
    skip_space();
    if (pos_ != text_.size()) {
      throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    }
    return x;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  int peek() {
    skip_space();
    return pos_ < text_.size() ? static_cast<unsigned char>(text_[pos_]) : -1;
  }

  static bool starts_atom(int c) {
    return c == '0' || c == '1' || c == '(' || (c >= 'a' && c <= 'z');
  }

  Regex expr() {
    Regex x = term();
    while (peek() == '+') {
      ++pos_;
      x = Regex::plus(std::move(x), term());
    }
    return x;
  }

  Regex term() {
    Regex x = factor();
    for (;;) {
      int c = peek();
      if (c == '.') {
        ++pos_;
        x = Regex::dot(std::move(x), factor());
      } else if (starts_atom(c)) {
        x = Regex::dot(std::move(x), factor());
      } else {
        return x;
      }
    }
  }

  Regex factor() {
    Regex x = atom();
    while (peek() == '*') {
      ++pos_;
      x = Regex::star(std::move(x));
    }
    return x;
  }

  Regex atom() {
    int c = peek();
    if (c < 0) throw ParseError("unexpected end of input", pos_);
    if (c == '0') {
      ++pos_;
      return Regex::zero();
    }
    if (c == '1') {
      ++pos_;
      return Regex::one();
    }
    if (c == '(') {
      std::size_t open = pos_++;
      Regex x = expr();
      if (peek() != ')') throw ParseError("unbalanced '(' opened at position " + std::to_string(open), pos_);
      ++pos_;
      return x;
    }
    if (c == 'v' && pos_ + 1 < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      std::size_t start = ++pos_;
      std::uint64_t n = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        n = n * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
        if (n > 0xffffffffu) throw ParseError("variable index too large", start);
        ++pos_;
      }
      return Regex::var(static_cast<Label>(n));
    }
    if (c >= 'a' && c <= 'z') {
      ++pos_;
      return Regex::var(static_cast<Label>(c - 'a'));
    }
    throw ParseError(std::string("unexpected '") + static_cast<char>(c) + "'", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Binding strength: Plus < Dot < Star < atoms.
int precedence(const Regex& x) {
  switch (x.kind()) {
    case RegexKind::Plus:
      return 0;
    case RegexKind::Dot:
      return 1;
    case RegexKind::Star:
      return 2;
    default:
      return 3;
  }
}

void print_into(const Regex& x, int min_prec, std::string& out) {
  bool parens = precedence(x) < min_prec;
  if (parens) out += '(';
  switch (x.kind()) {
    case RegexKind::Zero:
      out += '0';
      break;
    case RegexKind::One:
      out += '1';
      break;
    case RegexKind::Var:
      out += label_name(x.label());
      break;
    case RegexKind::Plus:
      print_into(x.left(), 0, out);
      out += '+';
      print_into(x.right(), 1, out);
      break;
    case RegexKind::Dot: {
      print_into(x.left(), 1, out);
      std::string rhs;
      print_into(x.right(), 2, rhs);
      // "v" or "v12" followed by a digit would lex as a single variable.
      char last = out.back();
      if (std::isdigit(static_cast<unsigned char>(rhs.front())) &&
          (last == 'v' || std::isdigit(static_cast<unsigned char>(last)))) {
        out += '.';
      }
      out += rhs;
      break;
    }
    case RegexKind::Star:
      print_into(x.left(), 2, out);
      out += '*';
      break;
  }
  if (parens) out += ')';
}

Regex smart_plus(const Regex& x, const Regex& y) {
  if (x.is(RegexKind::Zero)) return y;
  if (y.is(RegexKind::Zero)) return x;
  return Regex::plus(x, y);
}

Regex smart_dot(const Regex& x, const Regex& y) {
  if (x.is(RegexKind::Zero) || y.is(RegexKind::Zero)) return Regex::zero();
  if (x.is(RegexKind::One)) return y;
  if (y.is(RegexKind::One)) return x;
  return Regex::dot(x, y);
}

Regex smart_star(const Regex& x) {
  if (x.is(RegexKind::Zero)) return Regex::one();
  return Regex::star(x);
}

Regex ssf_rec(const Regex& x);

// Star-normal-form "circle": a non-nullable expression e° with (e°)* = e*.
Regex circle(const Regex& x) {
  switch (x.kind()) {
    case RegexKind::Zero:
    case RegexKind::One:
      return Regex::zero();
    case RegexKind::Var:
      return x;
    case RegexKind::Plus:
      return smart_plus(circle(x.left()), circle(x.right()));
    case RegexKind::Dot:
      if (nullable(x.left()) && nullable(x.right())) {
        return smart_plus(circle(x.left()), circle(x.right()));
      }
      return smart_dot(ssf_rec(x.left()), ssf_rec(x.right()));
    case RegexKind::Star:
      return circle(x.left());
  }
  return x;
}

Regex ssf_rec(const Regex& x) {
  switch (x.kind()) {
    case RegexKind::Zero:
    case RegexKind::One:
    case RegexKind::Var:
      return x;
    case RegexKind::Plus:
      return smart_plus(ssf_rec(x.left()), ssf_rec(x.right()));
    case RegexKind::Dot:
      return smart_dot(ssf_rec(x.left()), ssf_rec(x.right()));
    case RegexKind::Star:
      return smart_star(circle(x.left()));
  }
  return x;
}

}  // namespace

Regex parse(std::string_view text) { return Parser(text).parse_all(); }

std::string label_name(Label a) {
  if (a < 26) return std::string(1, static_cast<char>('a' + a));
  return "v" + std::to_string(a);
}

std::string print(const Regex& x) {
  std::string out;
  print_into(x, 0, out);
  return out;
}

bool nullable(const Regex& x) {
  switch (x.kind()) {
    case RegexKind::Zero:
    case RegexKind::Var:
      return false;
    case RegexKind::One:
    case RegexKind::Star:
      return true;
    case RegexKind::Plus:
      return nullable(x.left()) || nullable(x.right());
    case RegexKind::Dot:
      return nullable(x.left()) && nullable(x.right());
  }
  return false;
}

Regex simplify(const Regex& x) {
  std::unordered_map<const void*, Regex> memo;
  std::function<Regex(const Regex&)> go = [&](const Regex& e) -> Regex {
    if (auto it = memo.find(e.id()); it != memo.end()) return it->second;
    Regex r = e;
    switch (e.kind()) {
      case RegexKind::Zero:
      case RegexKind::One:
      case RegexKind::Var:
        break;
      case RegexKind::Plus:
      case RegexKind::Dot: {
        Regex l = go(e.left());
        Regex rr = go(e.right());
        if (e.is(RegexKind::Plus)) {
          r = (l.id() == e.left().id() && rr.id() == e.right().id() && !l.is(RegexKind::Zero) &&
               !rr.is(RegexKind::Zero))
                  ? e
                  : smart_plus(l, rr);
        } else {
          bool unchanged = l.id() == e.left().id() && rr.id() == e.right().id();
          bool redex = l.is(RegexKind::Zero) || rr.is(RegexKind::Zero) || l.is(RegexKind::One) ||
                       rr.is(RegexKind::One);
          r = unchanged && !redex ? e : smart_dot(l, rr);
        }
        break;
      }
      case RegexKind::Star: {
        Regex b = go(e.left());
        r = b.id() == e.left().id() && !b.is(RegexKind::Zero) ? e : smart_star(b);
        break;
      }
    }
    memo.emplace(e.id(), r);
    return r;
  };
  return go(x);
}

Regex ssf(const Regex& x) { return ssf_rec(x); }

bool is_strict_star_form(const Regex& x) {
  switch (x.kind()) {
    case RegexKind::Zero:
    case RegexKind::One:
    case RegexKind::Var:
      return true;
    case RegexKind::Plus:
    case RegexKind::Dot:
      return is_strict_star_form(x.left()) && is_strict_star_form(x.right());
    case RegexKind::Star:
      return !nullable(x.left()) && is_strict_star_form(x.left());
  }
  return true;
}

}  // namespace kadec
