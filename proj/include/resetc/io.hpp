#pragma once

#include <string>
#include <string_view>

#include "resetc/dfa.hpp"

namespace resetc::io {

/// An automaton plus the display names of its letters (one character each, index order).
struct AutomatonDocument {
  Dfa dfa;
  std::string letters;

  friend bool operator==(const AutomatonDocument&, const AutomatonDocument&) = default;
};

/// Default names "ab...": the first `alphabet_size` lowercase letters.
std::string default_letters(std::size_t alphabet_size);

/// Parses the one-line JSON automaton format:
///   {"states":N,"alphabet":["a","b"],"transitions":[[..],..],"initial":q,"finals":[..]}
/// `initial` and `finals` are optional but must appear together. Throws Errc::parse.
AutomatonDocument parse(std::string_view text);

/// Canonical form: fixed key order, no whitespace, finals sorted.
std::string serialize(const AutomatonDocument& doc);

inline std::string serialize(const Dfa& dfa) {
  return serialize(AutomatonDocument{dfa, default_letters(dfa.alphabet_size())});
}

std::string word_to_string(const Word& w, std::string_view letters);

/// Throws Errc::invalid_word on a character not in `letters`.
Word parse_word(std::string_view text, std::string_view letters);

/// Graphviz rendering; parallel edges between two states share one "a,b" label.
std::string to_dot(const Dfa& dfa, std::string_view letters);

inline std::string to_dot(const AutomatonDocument& doc) { return to_dot(doc.dfa, doc.letters); }

}  // namespace resetc::io
