#pragma once

// Words and strings over a quiver, and the string modules they define.
//
// A word w = w_n ... w_1 is stored first-letter-first: letters[0] is w_1, the
// letter read first when walking the word from its start vertex. This matches
// the traversal order used for paths. Text rendering follows the usual
// right-to-left notation, e.g. "a1 b0^-1" for w_2 = a1, w_1 = b0^-1.

#include "sbc/quiver.hpp"
#include "sbc/representation.hpp"

#include <compare>
#include <string>
#include <vector>

namespace sbc {

struct Letter {
  int arrow = 0;
  bool inverse = false;

  Letter inverted() const { return Letter{arrow, !inverse}; }

  friend auto operator<=>(const Letter&, const Letter&) = default;
  friend bool operator==(const Letter&, const Letter&) = default;
};

int letter_source(const Quiver& q, const Letter& l);
int letter_target(const Quiver& q, const Letter& l);

struct Word {
  int base = 0;                 // start vertex s(w_1), or the vertex of an empty word
  std::vector<Letter> letters;  // w_1 first

  int length() const { return static_cast<int>(letters.size()); }
  bool empty() const { return letters.empty(); }

  friend bool operator==(const Word&, const Word&) = default;
};

/// Validates endpoints and the no-cancellation rule. `base` is required for an
/// empty word and must agree with s(w_1) otherwise.
Word make_word(const Quiver& q, std::vector<Letter> letters, std::optional<int> base = std::nullopt);

int word_start(const Quiver& q, const Word& w);
int word_end(const Quiver& q, const Word& w);

Word inverse(const Quiver& q, const Word& w);

/// Total order used for canonical representatives: letters compared by arrow
/// name then direction (direct first), from w_1 onwards; empty words by vertex.
bool word_less(const Quiver& q, const Word& a, const Word& b);

/// The smaller of w and its inverse.
Word canonical(const Quiver& q, const Word& w);

/// Every maximal direct or inverse run of w, and each of its subpaths, appears
/// in B.
bool is_string(const Word& w, const CoalgebraPresentation& b);

/// The type-A representation of a word: basis v_0..v_n with v_i at the end of
/// w_i, a direct letter sending v_{i-1} to v_i, an inverse letter sending v_i
/// to v_{i-1}. Within a vertex, basis vectors are ordered by position.
Representation string_module(const Quiver& q, const Word& w);

/// Canonical strings with at most `max_letters` letters, ordered by length,
/// then by word_less.
std::vector<Word> enumerate_strings(const CoalgebraPresentation& b, int max_letters);

/// Right-to-left text form, e.g. "b^-1 a b^-1 a"; empty words render as "e_<v>".
std::string render_word(const Quiver& q, const Word& w);
/// Parses render_word output. Throws ParseError on malformed text and
/// DomainError on invalid words.
Word parse_word(const Quiver& q, const std::string& text);

}  // namespace sbc
