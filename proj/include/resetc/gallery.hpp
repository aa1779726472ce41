#pragma once

#include <string>

#include "resetc/dfa.hpp"

namespace resetc::gallery {

/// Černý automaton C_n: b is the n-cycle, a fixes everything except n-1 -> 0.
Dfa cerny(std::size_t n);

/// Recognizer of a^ℓ Σ* over {a}: a chain 0 -> 1 -> ... -> ℓ with a loop on ℓ.
Dfa unary_chain(std::size_t ell);

/// Minimal recognizer of Σ* a^{n-2} b Σ* over {a, b}.
Dfa tail_automaton(std::size_t n);

/// The slowly synchronizing series L_n (n >= 4).
Dfa l_automaton(std::size_t n);

/// The slowly synchronizing series V_n (n >= 3).
Dfa v_automaton(std::size_t n);

/// C_n with the word ab renamed to a new letter c; alphabet is {b, c}.
Dfa v_prime_automaton(std::size_t n);

/// Six states, state 0 is a sink.
Dfa z6();

/// Six states, strongly connected, same reset-word language as z6().
Dfa s6();

/// Display names of the letters for a gallery family ("ab", "a", or "bc").
std::string letter_names(const std::string& family);

}  // namespace resetc::gallery
