#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "resetc/dfa.hpp"

namespace resetc {

/// Least n >= 1 with (n³ - n) / 6 >= ell.
std::size_t rc_lower_bound(std::size_t ell);

/// Conjugacy classes of maps [k] -> [k] under relabelling, each with its lexicographically
/// least member and the permutations fixing it.
struct FunctionClasses {
  std::size_t k = 0;
  std::vector<std::vector<State>> reps;
  /// automorphisms[c] holds (perm, inverse) pairs, identity excluded.
  std::vector<std::vector<std::pair<std::vector<State>, std::vector<State>>>> automorphisms;
};

/// Cached per k; safe to call concurrently.
std::shared_ptr<const FunctionClasses> function_classes(std::size_t k);

/// Index space of candidate tables for k states over `alphabet_size` letters.
///
/// Letter 0 ranges over the class representatives of FunctionClasses; the remaining letters
/// ("the tail") range over all k^{k(|Σ|-1)} tables. A table is canonical when its tail is
/// lexicographically least under the automorphisms of its letter-0 representative, which
/// picks exactly one table per isomorphism class of bare automata.
class CanonicalSpace {
 public:
  /// Throws Errc::budget_exhausted past k = 8 (or more than 8^16 labeled tables) unless
  /// `override_guard` is set.
  CanonicalSpace(std::size_t k, std::size_t alphabet_size, bool override_guard = false);

  static bool within_guard(std::size_t k, std::size_t alphabet_size);

  std::size_t k() const { return k_; }
  std::size_t alphabet_size() const { return sigma_; }
  std::size_t n_classes() const { return classes_->reps.size(); }
  std::size_t tail_length() const { return tail_len_; }
  /// Number of raw tables: classes × k^{tail_length}; saturates at UINT64_MAX.
  std::uint64_t n_tables() const { return n_tables_; }

  const std::vector<State>& rep(std::size_t cls) const { return classes_->reps[cls]; }

  /// tail[(l-1)*k + q] = δ(q, l) for l >= 1.
  bool is_canonical(std::size_t cls, std::span<const State> tail) const;

  /// Writes the row-major transition table for (cls, tail) into `table`.
  void assemble(std::size_t cls, std::span<const State> tail, std::span<State> table) const;
  Dfa to_dfa(std::size_t cls, std::span<const State> tail) const;

 private:
  std::size_t k_;
  std::size_t sigma_;
  std::size_t tail_len_;
  std::uint64_t n_tables_;
  std::shared_ptr<const FunctionClasses> classes_;
};

/// Streams one bare automaton per isomorphism class of complete DFAs with k states, in a
/// fixed order. The callback returns false to stop early.
void for_each_canonical(std::size_t k, std::size_t alphabet_size,
                        const std::function<bool(const Dfa&)>& visit, bool override_guard = false);

std::vector<Dfa> enumerate_canonical(std::size_t k, std::size_t alphabet_size,
                                     bool override_guard = false);

enum class SearchStatus { exact, lower_bound_only, budget_exhausted };
std::string to_string(SearchStatus s);

enum class SearchEngine { parallel, serial };

/// Optional structural restriction on candidates.
enum class Restriction { none, strongly_connected, has_sink };

struct SearchOptions {
  /// Largest candidate size; 0 means sc(L).
  std::size_t max_states = 0;
  /// Start below the f(ℓ) bound (e.g. to confirm small sizes by search); never above it.
  std::optional<std::size_t> min_states;
  std::uint64_t max_candidates = 100'000'000;
  double max_seconds_per_stage = 600.0;
  bool all_witnesses = false;
  bool use_filters = true;
  SearchEngine engine = SearchEngine::parallel;
  Restriction restriction = Restriction::none;
  /// OpenMP worker count; 0 keeps the runtime default.
  int workers = 0;
};

/// Counters for one candidate size.
struct StageStats {
  std::size_t states = 0;
  std::uint64_t tables = 0;              // raw tables visited
  std::uint64_t examined = 0;            // canonical tables, one per isomorphism class
  std::uint64_t restricted = 0;          // failed the structural restriction
  std::uint64_t non_synchronizing = 0;
  std::uint64_t membership_filter = 0;
  std::uint64_t equivalence_failed = 0;
  std::uint64_t witnesses = 0;
  bool completed = false;
  double seconds = 0.0;

  friend bool operator==(const StageStats& a, const StageStats& b) {
    return a.states == b.states && a.tables == b.tables && a.examined == b.examined &&
           a.restricted == b.restricted && a.non_synchronizing == b.non_synchronizing &&
           a.membership_filter == b.membership_filter &&
           a.equivalence_failed == b.equivalence_failed && a.witnesses == b.witnesses &&
           a.completed == b.completed;
  }
};

struct SearchReport {
  SearchStatus status = SearchStatus::lower_bound_only;
  std::optional<std::size_t> rc_value;
  /// No automaton with fewer states has Syn equal to L.
  std::size_t lower_bound = 1;
  std::size_t shortest_length = 0;  // ℓ
  std::size_t f_bound = 1;          // rc_lower_bound(ℓ)
  std::size_t sc = 0;
  std::optional<Dfa> witness;
  std::vector<Dfa> witnesses_all;
  std::vector<StageStats> stages;
  double elapsed_seconds = 0.0;
};

/// Words used by the cheap membership filters.
struct FilterWords {
  std::vector<Word> must_synchronize;
  std::vector<Word> must_not_synchronize;
};

/// Filter words for the minimal recognizer of an ideal: words of L of length ℓ (shortest
/// first in lex order), then non-members of length ℓ, ℓ-1, ..., 0; at most 64 in total.
FilterWords filter_words(const Dfa& minimal_ideal);

/// rc(L) by exhaustive search over canonical candidates. Throws Errc::not_ideal for
/// non-ideal or empty L.
SearchReport reset_complexity(const Dfa& language, const SearchOptions& options = {});

struct MinimalityCheck {
  /// nullopt when the budget ran out before the answer was known.
  std::optional<bool> minimal;
  SearchReport report;
};

MinimalityCheck check_minimal_reset(const Dfa& automaton, SearchOptions options = {});

struct MinimalReset {
  Dfa automaton;
  SearchReport report;
};

/// Throws Errc::budget_exhausted if the search did not finish.
MinimalReset find_minimal_reset(const Dfa& language, const SearchOptions& options = {});

}  // namespace resetc
