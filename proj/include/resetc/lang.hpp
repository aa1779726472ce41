#pragma once

#include <optional>
#include <vector>

#include "resetc/dfa.hpp"

namespace resetc {

/// Finite set of nonempty words F; stands for the factor ideal Σ*FΣ*.
/// Duplicates and words containing another member as a factor are pruned on construction.
class FactorSet {
 public:
  FactorSet(std::size_t alphabet_size, std::vector<Word> words);

  std::size_t alphabet_size() const { return alphabet_size_; }
  const std::vector<Word>& words() const { return words_; }

 private:
  std::size_t alphabet_size_;
  std::vector<Word> words_;
};

/// True iff `needle` occurs as a contiguous subword of `hay`.
bool is_factor(std::span<const Letter> needle, std::span<const Letter> hay);

/// Minimal recognizer, states numbered in BFS order from the initial state.
Dfa minimize(const Dfa& dfa);

bool equivalent(const Dfa& d1, const Dfa& d2);

/// True iff L(d2) ⊆ L(d1).
bool includes(const Dfa& d1, const Dfa& d2);

/// True iff L = Σ*LΣ*.
bool is_ideal(const Dfa& dfa);

/// Minimal recognizer of Σ*FΣ*.
Dfa factor_ideal_dfa(const FactorSet& f);

/// A shortest accepted word, lexicographically least among ties; nullopt for the empty language.
std::optional<Word> shortest_word(const Dfa& dfa);

std::size_t state_complexity(const Dfa& dfa);

/// Isomorphism test. Recognizers must agree on initial and final states; bare automata only
/// need a bijection commuting with every letter.
bool iso_check(const Dfa& d1, const Dfa& d2);

}  // namespace resetc
