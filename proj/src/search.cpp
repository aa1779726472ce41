#include "resetc/search.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "resetc/lang.hpp"
#include "resetc/subset.hpp"
#include "search_internal.hpp"

namespace resetc {

std::size_t rc_lower_bound(std::size_t ell) {
  std::size_t n = 1;
  while ((n * n * n - n) / 6 < ell) ++n;
  return n;
}

namespace {

std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && out > UINT64_MAX / base) return UINT64_MAX;
    out *= base;
  }
  return out;
}

constexpr std::size_t kMaxFunctionClassStates = 9;

std::shared_ptr<const FunctionClasses> compute_function_classes(std::size_t k) {
  auto out = std::make_shared<FunctionClasses>();
  out->k = k;
  const std::uint64_t total = saturating_pow(k, k);

  std::vector<std::vector<State>> perms, inverses;
  std::vector<State> p(k);
  std::iota(p.begin(), p.end(), State{0});
  do {
    std::vector<State> inv(k);
    for (State i = 0; i < k; ++i) inv[p[i]] = i;
    perms.push_back(p);
    inverses.push_back(std::move(inv));
  } while (std::next_permutation(p.begin(), p.end()));

  auto index_of = [k](const std::vector<State>& f) {
    std::uint64_t idx = 0;
    for (State v : f) idx = idx * k + v;
    return idx;
  };

  std::vector<bool> seen(total, false);
  std::vector<State> f(k, 0), g(k);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    if (!seen[idx]) {
      // First unseen map in lex order is the least member of its class.
      out->reps.push_back(f);
      auto& auts = out->automorphisms.emplace_back();
      for (std::size_t j = 0; j < perms.size(); ++j) {
        for (State i = 0; i < k; ++i) g[perms[j][i]] = perms[j][f[i]];
        const std::uint64_t gi = index_of(g);
        seen[gi] = true;
        if (gi == idx && j != 0) auts.emplace_back(perms[j], inverses[j]);
      }
    }
    for (std::size_t pos = k; pos > 0; --pos) {
      if (++f[pos - 1] < k) break;
      f[pos - 1] = 0;
    }
  }
  return out;
}

}  // namespace

std::shared_ptr<const FunctionClasses> function_classes(std::size_t k) {
  if (k == 0 || k > kMaxFunctionClassStates)
    throw Error(Errc::budget_exhausted,
                "function classes are computed for 1..9 states, got " + std::to_string(k));
  static std::mutex mutex;
  static std::map<std::size_t, std::shared_ptr<const FunctionClasses>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[k];
  if (!slot) slot = compute_function_classes(k);
  return slot;
}

bool CanonicalSpace::within_guard(std::size_t k, std::size_t alphabet_size) {
  return k <= 8 && saturating_pow(k, k * alphabet_size) <= saturating_pow(8, 16);
}

CanonicalSpace::CanonicalSpace(std::size_t k, std::size_t alphabet_size, bool override_guard)
    : k_(k), sigma_(alphabet_size), tail_len_(k * (alphabet_size - 1)) {
  if (k == 0 || alphabet_size == 0)
    throw Error(Errc::invalid_argument, "enumeration needs at least one state and one letter");
  if (!override_guard && !within_guard(k, alphabet_size))
    throw Error(Errc::budget_exhausted, "enumeration of " + std::to_string(k) + "-state automata over " +
                                            std::to_string(alphabet_size) +
                                            " letters exceeds the budget guard");
  classes_ = function_classes(k);
  const std::uint64_t tails = saturating_pow(k, tail_len_);
  n_tables_ = tails > UINT64_MAX / classes_->reps.size() ? UINT64_MAX : tails * classes_->reps.size();
}

bool CanonicalSpace::is_canonical(std::size_t cls, std::span<const State> tail) const {
  for (const auto& [perm, inv] : classes_->automorphisms[cls]) {
    // Compare π∘f∘π⁻¹ against f letter by letter, entry by entry.
    for (std::size_t pos = 0; pos < tail_len_; ++pos) {
      const std::size_t base = pos - pos % k_;
      const State mapped = perm[tail[base + inv[pos % k_]]];
      if (mapped < tail[pos]) return false;
      if (mapped > tail[pos]) break;
    }
  }
  return true;
}

void CanonicalSpace::assemble(std::size_t cls, std::span<const State> tail, std::span<State> table) const {
  const auto& rep = classes_->reps[cls];
  for (std::size_t q = 0; q < k_; ++q) {
    table[q * sigma_] = rep[q];
    for (std::size_t l = 1; l < sigma_; ++l) table[q * sigma_ + l] = tail[(l - 1) * k_ + q];
  }
}

Dfa CanonicalSpace::to_dfa(std::size_t cls, std::span<const State> tail) const {
  std::vector<State> table(k_ * sigma_);
  assemble(cls, tail, table);
  return Dfa(k_, sigma_, std::move(table));
}

void for_each_canonical(std::size_t k, std::size_t alphabet_size,
                        const std::function<bool(const Dfa&)>& visit, bool override_guard) {
  const CanonicalSpace space(k, alphabet_size, override_guard);
  const std::size_t len = space.tail_length();
  std::vector<State> tail(len);
  for (std::size_t cls = 0; cls < space.n_classes(); ++cls) {
    std::fill(tail.begin(), tail.end(), State{0});
    for (;;) {
      if (space.is_canonical(cls, tail) && !visit(space.to_dfa(cls, tail))) return;
      std::size_t pos = len;
      while (pos > 0) {
        if (++tail[pos - 1] < k) break;
        tail[pos - 1] = 0;
        --pos;
      }
      if (pos == 0) break;
    }
  }
}

std::vector<Dfa> enumerate_canonical(std::size_t k, std::size_t alphabet_size, bool override_guard) {
  std::vector<Dfa> out;
  for_each_canonical(
      k, alphabet_size,
      [&](const Dfa& d) {
        out.push_back(d);
        return true;
      },
      override_guard);
  return out;
}

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::exact: return "exact";
    case SearchStatus::lower_bound_only: return "lower-bound-only";
    case SearchStatus::budget_exhausted: return "budget-exhausted";
  }
  return "unknown";
}

namespace {

constexpr std::size_t kMaxFilterWords = 64;
constexpr std::size_t kMaxMemberFilters = 32;

std::vector<State> distance_to_final(const Dfa& m) {
  constexpr State kFar = 0xffffffff;
  std::vector<State> dist(m.n_states(), kFar);
  std::vector<std::vector<State>> rev(m.n_states());
  for (State q = 0; q < m.n_states(); ++q)
    for (State t : m.row(q)) rev[t].push_back(q);
  std::vector<State> queue;
  for (State f : *m.finals()) {
    dist[f] = 0;
    queue.push_back(f);
  }
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (State p : rev[queue[head]])
      if (dist[p] == kFar) {
        dist[p] = dist[queue[head]] + 1;
        queue.push_back(p);
      }
  return dist;
}

}  // namespace

FilterWords filter_words(const Dfa& m) {
  require_recognizer(m, "filter_words");
  FilterWords out;
  const auto shortest = shortest_word(m);
  if (!shortest) return out;
  const std::size_t ell = shortest->size();
  const auto dist = distance_to_final(m);
  const std::size_t sigma = m.alphabet_size();
  Word w;

  // Members of length ℓ: only prefixes that can still reach a final state in time.
  std::function<void(State)> members = [&](State q) {
    if (out.must_synchronize.size() >= kMaxMemberFilters) return;
    if (w.size() == ell) {
      if (m.is_final(q)) out.must_synchronize.push_back(w);
      return;
    }
    for (Letter a = 0; a < sigma; ++a) {
      const State t = m.next(q, a);
      if (dist[t] <= ell - w.size() - 1) {
        w.push_back(a);
        members(t);
        w.pop_back();
      }
    }
  };
  members(*m.initial());

  // Non-members, longest first. Final states of an ideal are absorbing, so prefixes that hit
  // one are dropped.
  std::size_t budget = kMaxFilterWords - out.must_synchronize.size();
  std::function<void(State, std::size_t)> outsiders = [&](State q, std::size_t len) {
    if (out.must_not_synchronize.size() >= budget) return;
    if (w.size() == len) {
      out.must_not_synchronize.push_back(w);
      return;
    }
    for (Letter a = 0; a < sigma; ++a) {
      const State t = m.next(q, a);
      if (m.is_final(t)) continue;
      w.push_back(a);
      outsiders(t, len);
      w.pop_back();
    }
  };
  for (std::size_t len = ell + 1; len-- > 0;) {
    if (m.is_final(*m.initial())) break;
    outsiders(*m.initial(), len);
  }
  return out;
}

SearchReport reset_complexity(const Dfa& language, const SearchOptions& options) {
  const auto started = detail::Clock::now();
  require_recognizer(language, "reset_complexity");
  require_valid(language);
  if (!is_ideal(language))
    throw Error(Errc::not_ideal, "reset complexity requires an ideal language");

  detail::SearchTarget target{minimize(language), {}, options.use_filters, options.restriction};
  const auto shortest = shortest_word(target.minimal);
  if (!shortest)
    throw Error(Errc::not_ideal, "reset complexity requires a nonempty ideal language");
  target.filters = filter_words(target.minimal);

  SearchReport report;
  report.shortest_length = shortest->size();
  report.f_bound = rc_lower_bound(report.shortest_length);
  report.sc = target.minimal.n_states();
  report.lower_bound = report.f_bound;

  const std::size_t sigma = language.alphabet_size();
  const std::size_t first = std::min(options.min_states.value_or(report.f_bound), report.f_bound);
  const std::size_t last = options.max_states == 0 ? report.sc : std::min(options.max_states, report.sc);

  report.status = SearchStatus::lower_bound_only;
  for (std::size_t k = std::max<std::size_t>(first, 1); k <= last; ++k) {
    if (!CanonicalSpace::within_guard(k, sigma)) {
      report.status = SearchStatus::budget_exhausted;
      break;
    }
    const CanonicalSpace space(k, sigma);
    if (space.n_tables() > options.max_candidates) {
      report.status = SearchStatus::budget_exhausted;
      break;
    }
    const auto deadline = detail::Clock::now() +
                          std::chrono::duration_cast<detail::Clock::duration>(
                              std::chrono::duration<double>(options.max_seconds_per_stage));
    auto stage = options.engine == SearchEngine::serial
                     ? detail::run_stage_serial(space, target, deadline)
                     : detail::run_stage_parallel(space, target, deadline, options.workers);
    report.stages.push_back(stage.stats);

    // Witnesses are re-checked through the plain operations, independent of the search path.
    for (const Dfa& w : stage.witnesses)
      if (!equivalent(syn_power_dfa(w), target.minimal))
        throw std::logic_error("search produced a witness whose reset words differ from L");

    if (!stage.witnesses.empty()) {
      report.status = SearchStatus::exact;
      report.rc_value = k;
      report.lower_bound = k;
      report.witness = stage.witnesses.front();
      if (options.all_witnesses) report.witnesses_all = std::move(stage.witnesses);
      break;
    }
    if (!stage.stats.completed) {
      report.status = SearchStatus::budget_exhausted;
      break;
    }
    report.lower_bound = std::max(report.lower_bound, k + 1);
  }

  if (report.status == SearchStatus::lower_bound_only && last == report.sc &&
      options.restriction == Restriction::none)
    throw std::logic_error("no witness up to sc(L); the minimal recognizer should have been one");
  if (report.rc_value && (*report.rc_value < report.f_bound || *report.rc_value > report.sc))
    throw std::logic_error("reset complexity outside [f(ell), sc(L)]");

  report.elapsed_seconds = std::chrono::duration<double>(detail::Clock::now() - started).count();
  return report;
}

MinimalityCheck check_minimal_reset(const Dfa& automaton, SearchOptions options) {
  require_valid(automaton);
  if (!is_synchronizing(automaton))
    throw Error(Errc::not_synchronizing, "automaton is not synchronizing");
  const Dfa language = syn_power_dfa(automaton);
  MinimalityCheck out;
  if (automaton.n_states() == 1) {
    out.minimal = true;
    out.report.sc = 1;
    return out;
  }
  options.max_states = automaton.n_states() - 1;
  out.report = reset_complexity(language, options);
  switch (out.report.status) {
    case SearchStatus::exact: out.minimal = false; break;
    case SearchStatus::lower_bound_only: out.minimal = true; break;
    case SearchStatus::budget_exhausted: break;
  }
  return out;
}

MinimalReset find_minimal_reset(const Dfa& language, const SearchOptions& options) {
  SearchReport report = reset_complexity(language, options);
  if (report.status != SearchStatus::exact)
    throw Error(Errc::budget_exhausted, "search budget exhausted before a minimal automaton was found");
  Dfa witness = *report.witness;
  return {std::move(witness), std::move(report)};
}

}  // namespace resetc
