#include "resetc/subset.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace resetc {

bool is_synchronizing(const Dfa& dfa) {
  const std::size_t n = dfa.n_states();
  if (n <= 1) return true;
  const std::size_t sigma = dfa.alphabet_size();

  // pred[a][r] lists the states q with δ(q, a) = r.
  std::vector<std::vector<std::vector<State>>> pred(sigma, std::vector<std::vector<State>>(n));
  for (State q = 0; q < n; ++q)
    for (Letter a = 0; a < sigma; ++a) pred[a][dfa.next(q, a)].push_back(q);

  std::vector<bool> mergeable(n * n, false);
  std::size_t merged = 0;
  std::deque<std::pair<State, State>> queue;
  auto mark = [&](State p, State q) {
    if (p > q) std::swap(p, q);
    if (p == q || mergeable[p * n + q]) return;
    mergeable[p * n + q] = true;
    ++merged;
    queue.emplace_back(p, q);
  };

  for (Letter a = 0; a < sigma; ++a)
    for (State r = 0; r < n; ++r) {
      const auto& ps = pred[a][r];
      for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = i + 1; j < ps.size(); ++j) mark(ps[i], ps[j]);
    }
  while (!queue.empty()) {
    const auto [r, s] = queue.front();
    queue.pop_front();
    for (Letter a = 0; a < sigma; ++a)
      for (State p : pred[a][r])
        for (State q : pred[a][s]) mark(p, q);
  }
  return merged == n * (n - 1) / 2;
}

namespace {

// Visited/parent bookkeeping for BFS over subsets: a dense table while 2^n stays small,
// a hash map above that.
class SubsetParents {
 public:
  explicit SubsetParents(std::size_t n) : dense_(n <= kDenseLimit) {
    if (dense_) {
      parent_.assign(std::size_t{1} << n, 0);
      letter_.assign(std::size_t{1} << n, kUnseen);
    }
  }

  bool seen(StateSet s) const {
    return dense_ ? letter_[s.bits()] != kUnseen : sparse_.contains(s.bits());
  }
  void record(StateSet s, StateSet parent, Letter a) {
    if (dense_) {
      parent_[s.bits()] = parent.bits();
      letter_[s.bits()] = a;
    } else {
      sparse_.emplace(s.bits(), std::pair{parent.bits(), a});
    }
  }
  std::pair<StateSet, Letter> get(StateSet s) const {
    if (dense_) return {StateSet(parent_[s.bits()]), letter_[s.bits()]};
    const auto& [p, a] = sparse_.at(s.bits());
    return {StateSet(p), a};
  }

  static constexpr Letter kRoot = 0xfffffffe;

 private:
  static constexpr std::size_t kDenseLimit = 20;
  static constexpr Letter kUnseen = 0xffffffff;
  bool dense_;
  std::vector<std::uint64_t> parent_;
  std::vector<Letter> letter_;
  std::unordered_map<std::uint64_t, std::pair<std::uint64_t, Letter>> sparse_;
};

}  // namespace

std::optional<Word> shortest_reset_word(const Dfa& dfa) {
  require_subset_capacity(dfa.n_states());
  const StateSet all = StateSet::full(dfa.n_states());
  if (all.size() <= 1) return Word{};

  SubsetParents parents(dfa.n_states());
  parents.record(all, all, SubsetParents::kRoot);
  std::deque<StateSet> queue{all};
  while (!queue.empty()) {
    const StateSet s = queue.front();
    queue.pop_front();
    for (Letter a = 0; a < dfa.alphabet_size(); ++a) {
      const StateSet t = image(dfa, s, a);
      if (parents.seen(t)) continue;
      parents.record(t, s, a);
      if (t.size() == 1) {
        Word w;
        for (StateSet cur = t; cur != all;) {
          const auto [p, letter] = parents.get(cur);
          w.push_back(letter);
          cur = p;
        }
        std::reverse(w.begin(), w.end());
        return w;
      }
      queue.push_back(t);
    }
  }
  return std::nullopt;
}

PowerAutomaton power_automaton(const Dfa& dfa) {
  require_subset_capacity(dfa.n_states());
  const std::size_t sigma = dfa.alphabet_size();
  const StateSet all = StateSet::full(dfa.n_states());

  PowerAutomaton out;
  std::unordered_map<std::uint64_t, State> index{{all.bits(), 0}};
  out.subsets.push_back(all);
  std::vector<State> table;
  for (std::size_t i = 0; i < out.subsets.size(); ++i) {
    const StateSet s = out.subsets[i];
    for (Letter a = 0; a < sigma; ++a) {
      const StateSet t = image(dfa, s, a);
      auto [it, inserted] = index.try_emplace(t.bits(), static_cast<State>(out.subsets.size()));
      if (inserted) out.subsets.push_back(t);
      table.push_back(it->second);
    }
  }

  std::vector<State> finals;
  for (std::size_t i = 0; i < out.subsets.size(); ++i)
    if (out.subsets[i].size() == 1) finals.push_back(static_cast<State>(i));
  out.synchronizing = !finals.empty();
  out.recognizer = Dfa(out.subsets.size(), sigma, std::move(table), State{0}, std::move(finals));
  return out;
}

StablePair stable_set(const Dfa& dfa, std::span<const Letter> w) {
  if (w.empty()) throw Error(Errc::invalid_word, "stable_set requires a nonempty word");
  StablePair out{StateSet::full(dfa.n_states()), 0};
  // Q·w^{i+1} ⊆ Q·w^i, so the sequence strictly shrinks until it stops.
  for (;;) {
    const StateSet next = apply(dfa, out.m, w);
    if (next == out.m) return out;
    out.m = next;
    ++out.k;
  }
}

std::size_t pair_distance(std::size_t n, State p, State q) {
  if (!(p < q && q < n))
    throw Error(Errc::invalid_argument, "pair_distance requires p < q < n");
  return std::min<std::size_t>(q - p, n + p - q);
}

SubsetDistance subset_distance(std::size_t n, StateSet h) {
  if (h.size() < 2) throw Error(Errc::invalid_argument, "subset_distance requires at least two states");
  const auto states = h.to_vector();
  if (states.back() >= n) throw Error(Errc::invalid_argument, "subset_distance: state out of range");
  SubsetDistance best{n + 1, {0, 0}};
  for (std::size_t i = 0; i < states.size(); ++i)
    for (std::size_t j = i + 1; j < states.size(); ++j) {
      const std::size_t d = pair_distance(n, states[i], states[j]);
      if (d < best.distance) best = {d, {states[i], states[j]}};
    }
  return best;
}

Word cerny_pair_word(std::size_t n, State p, State q) {
  constexpr Letter a = 0;
  constexpr Letter b = 1;
  const std::size_t d = pair_distance(n, p, q);
  const std::size_t alpha = (d == q - p) ? n - p - 1 : n - q - 1;
  Word w(alpha, b);
  w.push_back(a);
  for (std::size_t i = 1; i < d; ++i) {
    w.insert(w.end(), n - 1, b);
    w.push_back(a);
  }
  return w;
}

}  // namespace resetc
