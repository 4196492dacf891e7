#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "kadec/regex.hpp"

namespace kadec {

/// A finite word; the empty vector is the empty word.
using Word = std::vector<Label>;

/// Concatenated letter names, "ε" for the empty word.
std::string word_to_string(std::span<const Label> w);

/// Sorted distinct labels occurring in x.
std::vector<Label> alphabet(const Regex& x);

/// Membership of w in the language of x, by memoized decomposition of w
/// into factors. Deliberately naive: this is the reference semantics the
/// automata pipeline is tested against.
bool matches(const Regex& x, std::span<const Label> w);

/// All words of length <= maxlen over alphabet(x) that belong to x.
std::set<Word> enumerate(const Regex& x, std::size_t maxlen);

/// Shortest word of length <= maxlen that belongs to exactly one of the two
/// languages, lexicographically least among the shortest ones, over the
/// union of both alphabets. Absent when no such word exists within the bound.
///
/// Explores pairs of Brzozowski derivatives breadth-first, identifying
/// derivatives up to associativity, commutativity and idempotence of +, so
/// large bounds stay cheap.
std::optional<Word> distinguishing_word(const Regex& x, const Regex& y, std::size_t maxlen);

}  // namespace kadec
