#include <atomic>
#include <unordered_set>

#include <omp.h>

#include "search_internal.hpp"

namespace resetc::detail {

namespace {

enum class Verdict { restricted, non_synchronizing, filtered, inequivalent, witness };

struct PairHash {
  std::size_t operator()(const std::pair<std::uint64_t, State>& p) const noexcept {
    return std::hash<std::uint64_t>{}(p.first * 0x9e3779b97f4a7c15ULL ^ p.second);
  }
};

// Per-worker buffers reused across candidates.
class Checker {
 public:
  Checker(const SearchTarget& target, std::size_t k, std::size_t sigma)
      : target_(target), k_(k), sigma_(sigma), lmin_states_(target.minimal.n_states()),
        dense_(k <= 16 && (std::size_t{1} << k) * lmin_states_ <= (std::size_t{1} << 22)) {
    merged_.resize(k * k);
    if (dense_) stamp_.assign((std::size_t{1} << k) * lmin_states_, 0);
  }

  Verdict check(const State* t) {
    if (!passes_restriction(t)) return Verdict::restricted;
    if (!synchronizing(t)) return Verdict::non_synchronizing;
    if (target_.use_filters) {
      for (const Word& w : target_.filters.must_synchronize)
        if (!resets(t, w)) return Verdict::filtered;
      for (const Word& w : target_.filters.must_not_synchronize)
        if (resets(t, w)) return Verdict::filtered;
    }
    return same_language(t) ? Verdict::witness : Verdict::inequivalent;
  }

 private:
  StateSet step(const State* t, StateSet s, Letter a) const {
    std::uint64_t out = 0;
    for (std::uint64_t b = s.bits(); b != 0; b &= b - 1)
      out |= std::uint64_t{1} << t[static_cast<std::size_t>(std::countr_zero(b)) * sigma_ + a];
    return StateSet(out);
  }

  bool resets(const State* t, const Word& w) const {
    StateSet s = StateSet::full(k_);
    if (s.size() == 1) return true;
    for (Letter a : w) {
      s = step(t, s, a);
      if (s.size() == 1) return true;
    }
    return false;
  }

  bool passes_restriction(const State* t) {
    switch (target_.restriction) {
      case Restriction::none:
        return true;
      case Restriction::has_sink:
        for (std::size_t q = 0; q < k_; ++q) {
          bool sink = true;
          for (std::size_t a = 0; a < sigma_ && sink; ++a) sink = t[q * sigma_ + a] == q;
          if (sink) return true;
        }
        return false;
      case Restriction::strongly_connected: {
        // Forward closure from every state must be everything.
        const StateSet all = StateSet::full(k_);
        for (State q = 0; q < k_; ++q) {
          StateSet reach = StateSet::singleton(q);
          for (;;) {
            StateSet next = reach;
            for (Letter a = 0; a < sigma_; ++a) next = next | step(t, reach, a);
            if (next == reach) break;
            reach = next;
          }
          if (reach != all) return false;
        }
        return true;
      }
    }
    return true;
  }

  // Fixpoint over pairs: {p, q} merges if some letter sends it to one state or to a merged pair.
  bool synchronizing(const State* t) {
    if (k_ <= 1) return true;
    std::fill(merged_.begin(), merged_.end(), 0);
    const std::size_t needed = k_ * (k_ - 1) / 2;
    std::size_t count = 0;
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t p = 0; p < k_; ++p)
        for (std::size_t q = p + 1; q < k_; ++q) {
          if (merged_[p * k_ + q]) continue;
          for (std::size_t a = 0; a < sigma_; ++a) {
            State r = t[p * sigma_ + a], s = t[q * sigma_ + a];
            if (r > s) std::swap(r, s);
            if (r == s || merged_[r * k_ + s]) {
              merged_[p * k_ + q] = 1;
              ++count;
              changed = true;
              break;
            }
          }
        }
    }
    return count == needed;
  }

  // Product of the candidate's power automaton with the minimal recognizer of L.
  bool same_language(const State* t) {
    const Dfa& m = target_.minimal;
    queue_.clear();
    sparse_.clear();
    if (dense_ && ++generation_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      generation_ = 1;
    }
    auto visit = [&](StateSet s, State l) {
      if (dense_) {
        std::uint32_t& mark = stamp_[s.bits() * lmin_states_ + l];
        if (mark == generation_) return;
        mark = generation_;
      } else if (!sparse_.emplace(s.bits(), l).second) {
        return;
      }
      queue_.emplace_back(s.bits(), l);
    };
    visit(StateSet::full(k_), *m.initial());
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const StateSet s(queue_[head].first);
      const State l = queue_[head].second;
      if ((s.size() == 1) != m.is_final(l)) return false;
      for (Letter a = 0; a < sigma_; ++a) visit(step(t, s, a), m.next(l, a));
    }
    return true;
  }

  const SearchTarget& target_;
  std::size_t k_;
  std::size_t sigma_;
  std::size_t lmin_states_;
  bool dense_;
  std::vector<std::uint8_t> merged_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t generation_ = 0;
  std::vector<std::pair<std::uint64_t, State>> queue_;
  std::unordered_set<std::pair<std::uint64_t, State>, PairHash> sparse_;
};

struct ChunkResult {
  StageStats stats;
  std::vector<std::vector<State>> witnesses;  // (class, tail) flattened: class first
  bool done = false;
};

}  // namespace

StageOutcome run_stage_parallel(const CanonicalSpace& space, const SearchTarget& target,
                                Clock::time_point deadline, int workers) {
  const auto started = Clock::now();
  const std::size_t k = space.k();
  const std::size_t sigma = space.alphabet_size();
  const std::size_t tail_len = space.tail_length();
  const std::size_t prefix_len = std::min<std::size_t>(2, tail_len);
  std::size_t per_class = 1;
  for (std::size_t i = 0; i < prefix_len; ++i) per_class *= k;
  const auto n_chunks = static_cast<std::int64_t>(space.n_classes() * per_class);

  std::vector<ChunkResult> results(static_cast<std::size_t>(n_chunks));
  std::atomic<bool> timed_out{false};
  const int threads = workers > 0 ? workers : omp_get_max_threads();

#pragma omp parallel num_threads(threads)
  {
    Checker checker(target, k, sigma);
    std::vector<State> tail(tail_len, 0);
    std::vector<State> table(k * sigma, 0);

#pragma omp for schedule(dynamic, 1)
    for (std::int64_t chunk = 0; chunk < n_chunks; ++chunk) {
      if (timed_out.load(std::memory_order_relaxed)) continue;
      if (Clock::now() > deadline) {
        timed_out.store(true, std::memory_order_relaxed);
        continue;
      }
      ChunkResult& r = results[static_cast<std::size_t>(chunk)];
      const std::size_t cls = static_cast<std::size_t>(chunk) / per_class;
      std::size_t prefix = static_cast<std::size_t>(chunk) % per_class;
      std::fill(tail.begin(), tail.end(), State{0});
      for (std::size_t i = prefix_len; i > 0; --i) {
        tail[i - 1] = static_cast<State>(prefix % k);
        prefix /= k;
      }
      const auto& rep = space.rep(cls);
      for (std::size_t q = 0; q < k; ++q) table[q * sigma] = rep[q];

      for (;;) {
        ++r.stats.tables;
        if (space.is_canonical(cls, tail)) {
          ++r.stats.examined;
          for (std::size_t l = 1; l < sigma; ++l)
            for (std::size_t q = 0; q < k; ++q) table[q * sigma + l] = tail[(l - 1) * k + q];
          switch (checker.check(table.data())) {
            case Verdict::restricted: ++r.stats.restricted; break;
            case Verdict::non_synchronizing: ++r.stats.non_synchronizing; break;
            case Verdict::filtered: ++r.stats.membership_filter; break;
            case Verdict::inequivalent: ++r.stats.equivalence_failed; break;
            case Verdict::witness:
              ++r.stats.witnesses;
              r.witnesses.push_back(tail);
              break;
          }
        }
        std::size_t pos = tail_len;
        while (pos > prefix_len) {
          if (++tail[pos - 1] < k) break;
          tail[pos - 1] = 0;
          --pos;
        }
        if (pos == prefix_len) break;
      }
      r.done = true;
    }
  }

  StageOutcome out;
  out.stats.states = k;
  bool complete = true;
  for (std::size_t c = 0; c < results.size(); ++c) {
    const ChunkResult& r = results[c];
    complete = complete && r.done;
    out.stats.tables += r.stats.tables;
    out.stats.examined += r.stats.examined;
    out.stats.restricted += r.stats.restricted;
    out.stats.non_synchronizing += r.stats.non_synchronizing;
    out.stats.membership_filter += r.stats.membership_filter;
    out.stats.equivalence_failed += r.stats.equivalence_failed;
    out.stats.witnesses += r.stats.witnesses;
    for (const auto& tail : r.witnesses) out.witnesses.push_back(space.to_dfa(c / per_class, tail));
  }
  out.stats.completed = complete;
  out.stats.seconds = std::chrono::duration<double>(Clock::now() - started).count();
  return out;
}

}  // namespace resetc::detail
