#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "resetc/state_set.hpp"

namespace resetc {

using Word = std::vector<Letter>;

/// Complete deterministic automaton. States are 0..n-1, letters 0..|alphabet|-1.
///
/// The initial state and the final set are optional: a "bare" automaton has
/// neither and is used for reset-word questions, a recognizer has both.
/// Construction does not validate the table; call validate() on untrusted input.
class Dfa {
 public:
  Dfa() = default;
  Dfa(std::size_t n_states, std::size_t alphabet_size);
  /// `table` is row-major: table[q * alphabet_size + a] = δ(q, a).
  Dfa(std::size_t n_states, std::size_t alphabet_size, std::vector<State> table,
      std::optional<State> initial = std::nullopt,
      std::optional<std::vector<State>> finals = std::nullopt);

  /// Builds from one row per letter: rows[a][q] = δ(q, a).
  static Dfa from_letter_rows(const std::vector<std::vector<State>>& rows);

  std::size_t n_states() const { return n_states_; }
  std::size_t alphabet_size() const { return alphabet_size_; }

  State next(State q, Letter a) const { return table_[q * alphabet_size_ + a]; }
  void set_next(State q, Letter a, State target) { table_[q * alphabet_size_ + a] = target; }
  std::span<const State> row(State q) const {
    return {table_.data() + q * alphabet_size_, alphabet_size_};
  }
  std::span<const State> table() const { return table_; }

  const std::optional<State>& initial() const { return initial_; }
  const std::optional<std::vector<State>>& finals() const { return finals_; }
  bool is_final(State q) const { return q < final_flags_.size() && final_flags_[q]; }
  bool is_recognizer() const { return initial_.has_value() && finals_.has_value(); }

  void set_initial(std::optional<State> q) { initial_ = q; }
  /// Stores the final set sorted and without duplicates.
  void set_finals(std::optional<std::vector<State>> finals);

  Dfa with_recognizer(State initial, std::vector<State> finals) const;
  Dfa bare() const;

  friend bool operator==(const Dfa& a, const Dfa& b) {
    return a.n_states_ == b.n_states_ && a.alphabet_size_ == b.alphabet_size_ &&
           a.table_ == b.table_ && a.initial_ == b.initial_ && a.finals_ == b.finals_;
  }

 private:
  std::size_t n_states_ = 0;
  std::size_t alphabet_size_ = 0;
  std::vector<State> table_;
  std::optional<State> initial_;
  std::optional<std::vector<State>> finals_;
  std::vector<bool> final_flags_;
};

/// Returns an empty list iff every invariant of `dfa` holds; otherwise one message per violation.
std::vector<std::string> validate(const Dfa& dfa);

/// Throws Errc::invalid_argument listing the violations when validate() fails.
void require_valid(const Dfa& dfa);

/// Throws Errc::not_recognizer unless initial and finals are present.
void require_recognizer(const Dfa& dfa, const char* operation);

/// Throws Errc::invalid_word if a letter is outside the alphabet.
void require_word(const Dfa& dfa, std::span<const Letter> w);

State run(const Dfa& dfa, State q, std::span<const Letter> w);

/// S·w = {δ(q, w) | q ∈ S}.
StateSet apply(const Dfa& dfa, StateSet s, std::span<const Letter> w);

/// S·a for a single letter, without range checks.
inline StateSet image(const Dfa& dfa, StateSet s, Letter a) {
  StateSet out;
  s.for_each([&](State q) { out.insert(dfa.next(q, a)); });
  return out;
}

/// δ⁻¹(H, a) = {q | δ(q, a) ∈ H}.
StateSet preimage(const Dfa& dfa, StateSet h, Letter a);

bool is_strongly_connected(const Dfa& dfa);

/// States fixed by every letter.
StateSet sinks(const Dfa& dfa);

bool accepts(const Dfa& recognizer, std::span<const Letter> w);

}  // namespace resetc
