#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace kadec {

/// Letters are numbered variables. 0..25 print as a..z, larger ones as v<N>.
using Label = std::uint32_t;

enum class RegexKind : std::uint8_t { Zero, One, Var, Plus, Dot, Star };

/// Immutable regular expression over numbered variables.
///
/// Nodes are reference counted and shared, so copies are cheap and
/// subterms produced by symbolic computations (matrix star) form a DAG.
/// operator== is structural equality, not language equivalence.
class Regex {
 public:
  Regex();  // Zero

  static Regex zero();
  static Regex one();
  static Regex var(Label a);
  static Regex plus(Regex x, Regex y);
  static Regex dot(Regex x, Regex y);
  static Regex star(Regex x);

  RegexKind kind() const;
  bool is(RegexKind k) const { return kind() == k; }
  /// Only meaningful for Var.
  Label label() const;
  /// First operand of Plus/Dot, body of Star.
  Regex left() const;
  /// Second operand of Plus/Dot.
  Regex right() const;

  /// Identity of the underlying node; used as a memoization key.
  const void* id() const { return node_.get(); }

  /// Number of nodes of the tree (shared subterms are counted once per use).
  std::size_t size() const;
  /// Number of nodes satisfying the given kind.
  std::size_t count(RegexKind k) const;
  /// 1 + the largest label occurring in the expression, 0 if there is none.
  Label label_bound() const;

  friend bool operator==(const Regex& x, const Regex& y);

 private:
  struct Node;
  static const std::shared_ptr<const Node>& zero_node();
  explicit Regex(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct Regex::Node {
  RegexKind kind = RegexKind::Zero;
  Label label = 0;
  std::shared_ptr<const Node> left;
  std::shared_ptr<const Node> right;
};

inline RegexKind Regex::kind() const { return node_->kind; }
inline Label Regex::label() const { return node_->label; }
inline Regex Regex::left() const { return Regex(node_->left); }
inline Regex Regex::right() const { return Regex(node_->right); }

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses `expr := term ('+' term)*`, `term := factor ('.'? factor)*`,
/// `factor := atom '*'*`, `atom := '0' | '1' | letter | 'v' digits | '(' expr ')'`.
/// Plus and concatenation associate to the left.
Regex parse(std::string_view text);

/// Prints with minimal parentheses, so that parse(print(x)) == x.
std::string print(const Regex& x);

std::string label_name(Label a);

/// Whether the empty word belongs to the language.
bool nullable(const Regex& x);

/// Bottom-up normal form for x.0 -> 0, 0.x -> 0, x+0 -> x, 0+x -> x,
/// x.1 -> x, 1.x -> x, 0* -> 1. Shared subterms stay shared.
Regex simplify(const Regex& x);

/// Strict star form: a language-equivalent expression whose starred
/// subterms never accept the empty word. The result is also simplified.
Regex ssf(const Regex& x);

bool is_strict_star_form(const Regex& x);

}  // namespace kadec
