#include "resetc/lang.hpp"
#include "resetc/subset.hpp"
#include "search_internal.hpp"

namespace resetc::detail {

StageOutcome run_stage_serial(const CanonicalSpace& space, const SearchTarget& target,
                              Clock::time_point deadline) {
  const auto started = Clock::now();
  const std::size_t k = space.k();
  const std::size_t tail_len = space.tail_length();
  StageOutcome out;
  out.stats.states = k;
  const StateSet all = StateSet::full(k);

  std::vector<State> tail(tail_len, 0);
  for (std::size_t cls = 0; cls < space.n_classes(); ++cls) {
    std::fill(tail.begin(), tail.end(), State{0});
    for (;;) {
      ++out.stats.tables;
      if ((out.stats.tables & 0xfff) == 0 && Clock::now() > deadline) {
        out.stats.seconds = std::chrono::duration<double>(Clock::now() - started).count();
        return out;
      }
      if (space.is_canonical(cls, tail)) {
        ++out.stats.examined;
        const Dfa candidate = space.to_dfa(cls, tail);
        bool rejected = false;
        if (target.restriction == Restriction::strongly_connected)
          rejected = !is_strongly_connected(candidate);
        else if (target.restriction == Restriction::has_sink)
          rejected = sinks(candidate).empty();
        if (rejected) {
          ++out.stats.restricted;
        } else if (!is_synchronizing(candidate)) {
          ++out.stats.non_synchronizing;
        } else {
          bool filtered = false;
          if (target.use_filters) {
            for (const Word& w : target.filters.must_synchronize)
              if (apply(candidate, all, w).size() != 1) filtered = true;
            for (const Word& w : target.filters.must_not_synchronize)
              if (apply(candidate, all, w).size() == 1) filtered = true;
          }
          if (filtered) {
            ++out.stats.membership_filter;
          } else if (!equivalent(syn_power_dfa(candidate), target.minimal)) {
            ++out.stats.equivalence_failed;
          } else {
            ++out.stats.witnesses;
            out.witnesses.push_back(candidate);
          }
        }
      }
      std::size_t pos = tail_len;
      while (pos > 0) {
        if (++tail[pos - 1] < k) break;
        tail[pos - 1] = 0;
        --pos;
      }
      if (pos == 0) break;
    }
  }
  out.stats.completed = true;
  out.stats.seconds = std::chrono::duration<double>(Clock::now() - started).count();
  return out;
}

}  // namespace resetc::detail
