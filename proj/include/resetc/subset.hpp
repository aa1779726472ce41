#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "resetc/dfa.hpp"

namespace resetc {

/// The largest subset fixed by a word and the number of iterations needed to reach it.
struct StablePair {
  StateSet m;
  std::size_t k = 0;

  friend bool operator==(const StablePair&, const StablePair&) = default;
};

/// Pairwise criterion: every pair of states can be merged by some word.
bool is_synchronizing(const Dfa& dfa);

/// Shortest word w with |Q·w| = 1, lexicographically least among ties (letter-index order).
std::optional<Word> shortest_reset_word(const Dfa& dfa);

/// Power automaton restricted to subsets reachable from Q.
struct PowerAutomaton {
  Dfa recognizer;                // initial = Q (state 0), finals = singleton subsets
  std::vector<StateSet> subsets; // subsets[i] is the subset behind recognizer state i
  bool synchronizing = false;    // false means the recognizer accepts nothing
};

PowerAutomaton power_automaton(const Dfa& dfa);

/// Recognizer of Syn(dfa).
inline Dfa syn_power_dfa(const Dfa& dfa) { return power_automaton(dfa).recognizer; }

StablePair stable_set(const Dfa& dfa, std::span<const Letter> w);

/// Cyclic distance between two states of an n-state cycle; requires p < q < n.
std::size_t pair_distance(std::size_t n, State p, State q);

struct SubsetDistance {
  std::size_t distance = 0;
  std::pair<State, State> witness;
};

/// Minimum pair distance over distinct pairs of `h`; the witness is the lexicographically
/// smallest pair attaining it.
SubsetDistance subset_distance(std::size_t n, StateSet h);

/// Word b^α a (b^{n-1} a)^{d-1} that sends {p, q} to {0} in the Černý automaton C_n
/// (letters a = 0, b = 1). On a distance tie the q - p branch is used.
Word cerny_pair_word(std::size_t n, State p, State q);

}  // namespace resetc
