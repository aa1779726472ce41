#include "resetc/lang.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <unordered_set>

namespace resetc {

bool is_factor(std::span<const Letter> needle, std::span<const Letter> hay) {
  return std::search(hay.begin(), hay.end(), needle.begin(), needle.end()) != hay.end();
}

FactorSet::FactorSet(std::size_t alphabet_size, std::vector<Word> words)
    : alphabet_size_(alphabet_size) {
  if (alphabet_size == 0) throw Error(Errc::invalid_argument, "factor set needs a nonempty alphabet");
  if (words.empty()) throw Error(Errc::invalid_argument, "factor set must contain at least one word");
  for (const Word& w : words) {
    if (w.empty()) throw Error(Errc::invalid_argument, "factor set must not contain the empty word");
    for (Letter a : w)
      if (a >= alphabet_size)
        throw Error(Errc::invalid_word, "factor word letter outside the alphabet");
  }
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  for (std::size_t i = 0; i < words.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < words.size() && !redundant; ++j)
      redundant = i != j && is_factor(words[j], words[i]);
    if (!redundant) words_.push_back(words[i]);
  }
}

namespace {

// Breadth-first renumbering from the initial state; drops unreachable states.
Dfa canonical_reachable(const Dfa& dfa, const std::vector<State>& block_of,
                        const std::vector<bool>& reachable) {
  const std::size_t sigma = dfa.alphabet_size();
  std::vector<State> order;
  std::map<State, State> number;
  auto visit = [&](State block) {
    auto [it, inserted] = number.try_emplace(block, static_cast<State>(order.size()));
    if (inserted) order.push_back(block);
    return it->second;
  };
  // Representative original state per block.
  std::map<State, State> rep;
  for (State q = 0; q < dfa.n_states(); ++q)
    if (reachable[q]) rep.try_emplace(block_of[q], q);

  visit(block_of[*dfa.initial()]);
  std::vector<State> table;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const State q = rep.at(order[i]);
    for (Letter a = 0; a < sigma; ++a) table.push_back(visit(block_of[dfa.next(q, a)]));
  }
  std::vector<State> finals;
  for (std::size_t i = 0; i < order.size(); ++i)
    if (dfa.is_final(rep.at(order[i]))) finals.push_back(static_cast<State>(i));
  return Dfa(order.size(), sigma, std::move(table), State{0}, std::move(finals));
}

std::vector<bool> reachable_from_initial(const Dfa& dfa) {
  std::vector<bool> seen(dfa.n_states(), false);
  std::vector<State> stack{*dfa.initial()};
  seen[*dfa.initial()] = true;
  while (!stack.empty()) {
    const State q = stack.back();
    stack.pop_back();
    for (State t : dfa.row(q))
      if (!seen[t]) {
        seen[t] = true;
        stack.push_back(t);
      }
  }
  return seen;
}

}  // namespace

Dfa minimize(const Dfa& dfa) {
  require_recognizer(dfa, "minimize");
  require_valid(dfa);
  const std::size_t n = dfa.n_states();
  const std::size_t sigma = dfa.alphabet_size();
  const auto reachable = reachable_from_initial(dfa);

  // Moore refinement: block ids are re-derived each round from (block, successor blocks).
  std::vector<State> block(n);
  for (State q = 0; q < n; ++q) block[q] = dfa.is_final(q) ? 1 : 0;
  std::size_t n_blocks = 0;
  for (;;) {
    std::map<std::vector<State>, State> ids;
    std::vector<State> next(n);
    std::vector<State> key(sigma + 1);
    for (State q = 0; q < n; ++q) {
      if (!reachable[q]) continue;
      key[0] = block[q];
      for (Letter a = 0; a < sigma; ++a) key[a + 1] = block[dfa.next(q, a)];
      next[q] = ids.try_emplace(key, static_cast<State>(ids.size())).first->second;
    }
    const bool stable = ids.size() == n_blocks;
    n_blocks = ids.size();
    block = std::move(next);
    if (stable) break;
  }
  return canonical_reachable(dfa, block, reachable);
}

namespace {

void require_same_alphabet(const Dfa& d1, const Dfa& d2) {
  if (d1.alphabet_size() != d2.alphabet_size())
    throw Error(Errc::alphabet_mismatch, "automata have different alphabets (" +
                                             std::to_string(d1.alphabet_size()) + " vs " +
                                             std::to_string(d2.alphabet_size()) + " letters)");
}

// Explores the product from (initial1, initial2); returns true as soon as `bad` holds on a
// reachable pair.
template <typename Bad>
bool product_reaches(const Dfa& d1, const Dfa& d2, Bad bad) {
  const std::size_t n2 = d2.n_states();
  std::vector<bool> seen(d1.n_states() * n2, false);
  std::deque<std::pair<State, State>> queue;
  auto push = [&](State p, State q) {
    if (seen[p * n2 + q]) return;
    seen[p * n2 + q] = true;
    queue.emplace_back(p, q);
  };
  push(*d1.initial(), *d2.initial());
  while (!queue.empty()) {
    const auto [p, q] = queue.front();
    queue.pop_front();
    if (bad(p, q)) return true;
    for (Letter a = 0; a < d1.alphabet_size(); ++a) push(d1.next(p, a), d2.next(q, a));
  }
  return false;
}

}  // namespace

bool equivalent(const Dfa& d1, const Dfa& d2) {
  require_recognizer(d1, "equivalent");
  require_recognizer(d2, "equivalent");
  require_same_alphabet(d1, d2);
  return !product_reaches(d1, d2, [&](State p, State q) { return d1.is_final(p) != d2.is_final(q); });
}

bool includes(const Dfa& d1, const Dfa& d2) {
  require_recognizer(d1, "includes");
  require_recognizer(d2, "includes");
  require_same_alphabet(d1, d2);
  return !product_reaches(d1, d2, [&](State p, State q) { return d2.is_final(q) && !d1.is_final(p); });
}

bool is_ideal(const Dfa& dfa) {
  const Dfa m = minimize(dfa);
  if (m.finals()->empty()) return true;
  for (State f : *m.finals())
    for (State t : m.row(f))
      if (!m.is_final(t)) return false;
  for (Letter a = 0; a < m.alphabet_size(); ++a) {
    Dfa shifted = m;
    shifted.set_initial(m.next(*m.initial(), a));
    if (!includes(shifted, m)) return false;
  }
  return true;
}

Dfa factor_ideal_dfa(const FactorSet& f) {
  // Keyword tree with failure links; every node that completes a word collapses into one
  // absorbing accept state.
  const std::size_t sigma = f.alphabet_size();
  constexpr State kNone = 0xffffffff;
  std::vector<std::vector<State>> child{std::vector<State>(sigma, kNone)};
  std::vector<bool> terminal{false};
  for (const Word& w : f.words()) {
    State node = 0;
    for (Letter a : w) {
      if (child[node][a] == kNone) {
        child[node][a] = static_cast<State>(child.size());
        child.emplace_back(sigma, kNone);
        terminal.push_back(false);
      }
      node = child[node][a];
    }
    terminal[node] = true;
  }

  const std::size_t nodes = child.size();
  std::vector<State> fail(nodes, 0);
  std::vector<State> go(nodes * sigma, 0);
  std::deque<State> queue;
  for (Letter a = 0; a < sigma; ++a) {
    const State c = child[0][a];
    if (c == kNone) {
      go[a] = 0;
    } else {
      go[a] = c;
      fail[c] = 0;
      queue.push_back(c);
    }
  }
  while (!queue.empty()) {
    const State u = queue.front();
    queue.pop_front();
    if (terminal[fail[u]]) terminal[u] = true;
    for (Letter a = 0; a < sigma; ++a) {
      const State c = child[u][a];
      if (c == kNone) {
        go[u * sigma + a] = go[fail[u] * sigma + a];
      } else {
        go[u * sigma + a] = c;
        fail[c] = go[fail[u] * sigma + a];
        queue.push_back(c);
      }
    }
  }

  // Terminal nodes become one sink; the rest keep their goto transitions.
  std::vector<State> renumber(nodes, 0);
  State next_id = 0;
  for (State u = 0; u < nodes; ++u)
    if (!terminal[u]) renumber[u] = next_id++;
  const State accept = next_id;
  for (State u = 0; u < nodes; ++u)
    if (terminal[u]) renumber[u] = accept;
  std::vector<State> table((accept + 1) * sigma, accept);
  for (State u = 0; u < nodes; ++u) {
    if (terminal[u]) continue;
    for (Letter a = 0; a < sigma; ++a) table[renumber[u] * sigma + a] = renumber[go[u * sigma + a]];
  }
  return minimize(Dfa(accept + 1, sigma, std::move(table), State{0}, std::vector<State>{accept}));
}

std::optional<Word> shortest_word(const Dfa& dfa) {
  require_recognizer(dfa, "shortest_word");
  const State q0 = *dfa.initial();
  if (dfa.is_final(q0)) return Word{};
  constexpr State kUnseen = 0xffffffff;
  std::vector<State> parent(dfa.n_states(), kUnseen);
  std::vector<Letter> via(dfa.n_states(), 0);
  parent[q0] = q0;
  std::deque<State> queue{q0};
  while (!queue.empty()) {
    const State q = queue.front();
    queue.pop_front();
    for (Letter a = 0; a < dfa.alphabet_size(); ++a) {
      const State t = dfa.next(q, a);
      if (parent[t] != kUnseen) continue;
      parent[t] = q;
      via[t] = a;
      if (dfa.is_final(t)) {
        Word w;
        for (State cur = t; cur != q0; cur = parent[cur]) w.push_back(via[cur]);
        std::reverse(w.begin(), w.end());
        return w;
      }
      queue.push_back(t);
    }
  }
  return std::nullopt;
}

std::size_t state_complexity(const Dfa& dfa) { return minimize(dfa).n_states(); }

namespace {

class IsoSearch {
 public:
  IsoSearch(const Dfa& d1, const Dfa& d2, bool recognizers)
      : d1_(d1), d2_(d2), recognizers_(recognizers), m12_(d1.n_states(), kFree),
        m21_(d2.n_states(), kFree) {
    sig1_ = signatures(d1);
    sig2_ = signatures(d2);
  }

  bool run() {
    if (recognizers_) {
      std::vector<std::pair<State, State>> trail;
      if (!extend(*d1_.initial(), *d2_.initial(), trail)) return false;
    }
    return search();
  }

 private:
  static constexpr State kFree = 0xffffffff;

  // Cheap isomorphism invariant per state: fixed-point flags and in-degree per letter.
  static std::vector<std::vector<std::size_t>> signatures(const Dfa& d) {
    const std::size_t sigma = d.alphabet_size();
    std::vector<std::vector<std::size_t>> sig(d.n_states(), std::vector<std::size_t>(2 * sigma + 1, 0));
    for (State q = 0; q < d.n_states(); ++q) {
      sig[q][2 * sigma] = d.is_final(q) ? 1 : 0;
      for (Letter a = 0; a < sigma; ++a) {
        const State t = d.next(q, a);
        if (t == q) sig[q][a] = 1;
        ++sig[t][sigma + a];
      }
    }
    return sig;
  }

  bool extend(State x, State y, std::vector<std::pair<State, State>>& trail) {
    std::vector<std::pair<State, State>> work{{x, y}};
    while (!work.empty()) {
      const auto [p, q] = work.back();
      work.pop_back();
      if (m12_[p] == q) continue;
      if (m12_[p] != kFree || m21_[q] != kFree || sig1_[p] != sig2_[q]) return false;
      m12_[p] = q;
      m21_[q] = p;
      trail.emplace_back(p, q);
      for (Letter a = 0; a < d1_.alphabet_size(); ++a) work.emplace_back(d1_.next(p, a), d2_.next(q, a));
    }
    return true;
  }

  void undo(const std::vector<std::pair<State, State>>& trail) {
    for (const auto& [p, q] : trail) {
      m12_[p] = kFree;
      m21_[q] = kFree;
    }
  }

  bool search() {
    State x = 0;
    while (x < m12_.size() && m12_[x] != kFree) ++x;
    if (x == m12_.size()) return true;
    for (State y = 0; y < m21_.size(); ++y) {
      if (m21_[y] != kFree) continue;
      std::vector<std::pair<State, State>> trail;
      if (extend(x, y, trail) && search()) return true;
      undo(trail);
    }
    return false;
  }

  const Dfa& d1_;
  const Dfa& d2_;
  bool recognizers_;
  std::vector<State> m12_, m21_;
  std::vector<std::vector<std::size_t>> sig1_, sig2_;
};

}  // namespace

bool iso_check(const Dfa& d1, const Dfa& d2) {
  require_same_alphabet(d1, d2);
  if (d1.is_recognizer() != d2.is_recognizer())
    throw Error(Errc::invalid_argument, "iso_check needs two bare automata or two recognizers");
  require_valid(d1);
  require_valid(d2);
  if (d1.n_states() != d2.n_states()) return false;
  if (d1.is_recognizer() && d1.finals()->size() != d2.finals()->size()) return false;
  return IsoSearch(d1, d2, d1.is_recognizer()).run();
}

}  // namespace resetc
