#pragma once
// Test-only reference computations. Each one follows the definition directly and shares no code
// path with the library routine it checks.

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "resetc/dfa.hpp"

namespace oracle {

using resetc::Dfa;
using resetc::Letter;
using resetc::State;
using resetc::Word;

inline std::uint64_t image_bits(const Dfa& d, std::uint64_t s, Letter a) {
  std::uint64_t out = 0;
  for (State q = 0; q < d.n_states(); ++q)
    if ((s >> q) & 1u) out |= std::uint64_t{1} << d.table()[q * d.alphabet_size() + a];
  return out;
}

inline std::uint64_t run_bits(const Dfa& d, std::uint64_t s, const Word& w) {
  for (Letter a : w) s = image_bits(d, s, a);
  return s;
}

inline std::uint64_t full_bits(std::size_t n) { return (std::uint64_t{1} << n) - 1; }

/// Length of a shortest reset word by plain subset BFS, or -1.
inline long shortest_reset_length(const Dfa& d) {
  std::set<std::uint64_t> seen{full_bits(d.n_states())};
  std::vector<std::uint64_t> level{full_bits(d.n_states())};
  for (long len = 0; !level.empty(); ++len) {
    std::vector<std::uint64_t> next;
    for (auto s : level) {
      if (std::popcount(s) == 1) return len;
      for (Letter a = 0; a < d.alphabet_size(); ++a) {
        auto t = image_bits(d, s, a);
        if (seen.insert(t).second) next.push_back(t);
      }
    }
    level = std::move(next);
  }
  return -1;
}

/// Largest subset S with S·w = S, by scanning every subset.
inline std::uint64_t largest_fixed_subset(const Dfa& d, const Word& w) {
  std::uint64_t best = 0;
  for (std::uint64_t s = 1; s <= full_bits(d.n_states()); ++s)
    if (run_bits(d, s, w) == s && std::popcount(s) > std::popcount(best)) best = s;
  return best;
}

/// Every labeled table with k states over sigma letters.
inline std::vector<Dfa> all_tables(std::size_t k, std::size_t sigma) {
  std::vector<Dfa> out;
  std::vector<State> t(k * sigma, 0);
  for (;;) {
    out.emplace_back(k, sigma, t);
    std::size_t i = 0;
    while (i < t.size() && ++t[i] == k) t[i++] = 0;
    if (i == t.size()) break;
  }
  return out;
}

/// Lexicographically least relabelling of a bare automaton over all k! permutations.
inline std::vector<State> brute_canonical(const Dfa& d) {
  const std::size_t k = d.n_states(), sigma = d.alphabet_size();
  std::vector<State> perm(k);
  std::iota(perm.begin(), perm.end(), State{0});
  std::vector<State> best;
  do {
    // Letter-major layout so the first letter dominates the comparison.
    std::vector<State> img(k * sigma);
    for (State q = 0; q < k; ++q)
      for (Letter a = 0; a < sigma; ++a) img[a * k + perm[q]] = perm[d.next(q, a)];
    if (best.empty() || img < best) best = img;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline Dfa random_dfa(std::mt19937_64& rng, std::size_t n, std::size_t sigma) {
  std::uniform_int_distribution<State> pick(0, static_cast<State>(n - 1));
  std::vector<State> t(n * sigma);
  for (auto& x : t) x = pick(rng);
  return Dfa(n, sigma, std::move(t));
}

inline Word random_word(std::mt19937_64& rng, std::size_t max_len, std::size_t sigma, std::size_t min_len = 0) {
  std::uniform_int_distribution<std::size_t> len(min_len, max_len);
  std::uniform_int_distribution<Letter> letter(0, static_cast<Letter>(sigma - 1));
  Word w(len(rng));
  for (auto& a : w) a = letter(rng);
  return w;
}

/// Membership in Σ*FΣ* by direct substring scan.
inline bool contains_factor(const Word& w, const std::vector<Word>& factors) {
  for (const Word& f : factors)
    if (std::search(w.begin(), w.end(), f.begin(), f.end()) != w.end()) return true;
  return false;
}

}  // namespace oracle
