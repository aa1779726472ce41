#include "resetc/dfa.hpp"

#include <algorithm>
#include <queue>

namespace resetc {

Dfa::Dfa(std::size_t n_states, std::size_t alphabet_size)
    : n_states_(n_states), alphabet_size_(alphabet_size), table_(n_states * alphabet_size, 0) {}

Dfa::Dfa(std::size_t n_states, std::size_t alphabet_size, std::vector<State> table,
         std::optional<State> initial, std::optional<std::vector<State>> finals)
    : n_states_(n_states), alphabet_size_(alphabet_size), table_(std::move(table)), initial_(initial) {
  if (table_.size() != n_states_ * alphabet_size_)
    throw Error(Errc::invalid_argument, "transition table has " + std::to_string(table_.size()) +
                                            " entries, expected " +
                                            std::to_string(n_states_ * alphabet_size_));
  set_finals(std::move(finals));
}

Dfa Dfa::from_letter_rows(const std::vector<std::vector<State>>& rows) {
  if (rows.empty()) throw Error(Errc::invalid_argument, "at least one letter row is required");
  const std::size_t n = rows.front().size();
  Dfa dfa(n, rows.size());
  for (std::size_t a = 0; a < rows.size(); ++a) {
    if (rows[a].size() != n)
      throw Error(Errc::invalid_argument, "letter rows have different lengths");
    for (std::size_t q = 0; q < n; ++q)
      dfa.set_next(static_cast<State>(q), static_cast<Letter>(a), rows[a][q]);
  }
  return dfa;
}

void Dfa::set_finals(std::optional<std::vector<State>> finals) {
  final_flags_.assign(n_states_, false);
  if (finals) {
    std::sort(finals->begin(), finals->end());
    finals->erase(std::unique(finals->begin(), finals->end()), finals->end());
    for (State f : *finals)
      if (f < n_states_) final_flags_[f] = true;
  }
  finals_ = std::move(finals);
}

Dfa Dfa::with_recognizer(State initial, std::vector<State> finals) const {
  Dfa out = *this;
  out.initial_ = initial;
  out.set_finals(std::move(finals));
  return out;
}

Dfa Dfa::bare() const {
  Dfa out = *this;
  out.initial_.reset();
  out.set_finals(std::nullopt);
  return out;
}

std::vector<std::string> validate(const Dfa& dfa) {
  std::vector<std::string> errors;
  if (dfa.n_states() == 0) errors.emplace_back("automaton must have at least one state");
  if (dfa.alphabet_size() == 0) errors.emplace_back("alphabet must have at least one letter");
  for (std::size_t q = 0; q < dfa.n_states(); ++q)
    for (std::size_t a = 0; a < dfa.alphabet_size(); ++a) {
      const State t = dfa.next(static_cast<State>(q), static_cast<Letter>(a));
      if (t >= dfa.n_states())
        errors.push_back("transition out of range: row " + std::to_string(q) + ", column " +
                         std::to_string(a) + " -> " + std::to_string(t));
    }
  if (dfa.initial() && *dfa.initial() >= dfa.n_states())
    errors.push_back("initial state out of range: " + std::to_string(*dfa.initial()));
  if (dfa.finals())
    for (State f : *dfa.finals())
      if (f >= dfa.n_states()) errors.push_back("final state out of range: " + std::to_string(f));
  return errors;
}

void require_valid(const Dfa& dfa) {
  const auto errors = validate(dfa);
  if (errors.empty()) return;
  std::string msg = "invalid automaton:";
  for (const auto& e : errors) msg += " " + e + ";";
  throw Error(Errc::invalid_argument, msg);
}

void require_recognizer(const Dfa& dfa, const char* operation) {
  if (!dfa.is_recognizer())
    throw Error(Errc::not_recognizer,
                std::string(operation) + " requires an automaton with initial and final states");
}

void require_word(const Dfa& dfa, std::span<const Letter> w) {
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] >= dfa.alphabet_size())
      throw Error(Errc::invalid_word, "letter " + std::to_string(w[i]) + " at position " +
                                          std::to_string(i) + " is outside the alphabet");
}

State run(const Dfa& dfa, State q, std::span<const Letter> w) {
  require_word(dfa, w);
  for (Letter a : w) q = dfa.next(q, a);
  return q;
}

StateSet apply(const Dfa& dfa, StateSet s, std::span<const Letter> w) {
  require_subset_capacity(dfa.n_states());
  require_word(dfa, w);
  for (Letter a : w) s = image(dfa, s, a);
  return s;
}

StateSet preimage(const Dfa& dfa, StateSet h, Letter a) {
  require_subset_capacity(dfa.n_states());
  if (a >= dfa.alphabet_size())
    throw Error(Errc::invalid_word, "letter " + std::to_string(a) + " is outside the alphabet");
  StateSet out;
  for (State q = 0; q < dfa.n_states(); ++q)
    if (h.contains(dfa.next(q, a))) out.insert(q);
  return out;
}

namespace {

std::size_t count_reachable(const std::vector<std::vector<State>>& adj, State from) {
  std::vector<bool> seen(adj.size(), false);
  std::vector<State> stack{from};
  seen[from] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const State q = stack.back();
    stack.pop_back();
    for (State r : adj[q])
      if (!seen[r]) {
        seen[r] = true;
        ++count;
        stack.push_back(r);
      }
  }
  return count;
}

}  // namespace

bool is_strongly_connected(const Dfa& dfa) {
  const std::size_t n = dfa.n_states();
  if (n == 0) return false;
  std::vector<std::vector<State>> fwd(n), rev(n);
  for (State q = 0; q < n; ++q)
    for (State t : dfa.row(q)) {
      fwd[q].push_back(t);
      rev[t].push_back(q);
    }
  return count_reachable(fwd, 0) == n && count_reachable(rev, 0) == n;
}

StateSet sinks(const Dfa& dfa) {
  require_subset_capacity(dfa.n_states());
  StateSet out;
  for (State q = 0; q < dfa.n_states(); ++q) {
    const auto r = dfa.row(q);
    if (std::all_of(r.begin(), r.end(), [q](State t) { return t == q; })) out.insert(q);
  }
  return out;
}

bool accepts(const Dfa& recognizer, std::span<const Letter> w) {
  require_recognizer(recognizer, "accepts");
  return recognizer.is_final(run(recognizer, *recognizer.initial(), w));
}

}  // namespace resetc
