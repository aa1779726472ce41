#pragma once

#include <chrono>
#include <vector>

#include "resetc/search.hpp"

namespace resetc::detail {

using Clock = std::chrono::steady_clock;

struct SearchTarget {
  Dfa minimal;  // minimal recognizer of L
  FilterWords filters;
  bool use_filters = true;
  Restriction restriction = Restriction::none;
};

struct StageOutcome {
  StageStats stats;
  std::vector<Dfa> witnesses;  // in enumeration order
};

/// Reference stage: walks the space one table at a time through the public operations.
StageOutcome run_stage_serial(const CanonicalSpace& space, const SearchTarget& target,
                              Clock::time_point deadline);

/// OpenMP stage: chunks of the space keyed by (letter-0 class, tail prefix) run on separate
/// workers with bit-level candidate checks; results merge in chunk order.
StageOutcome run_stage_parallel(const CanonicalSpace& space, const SearchTarget& target,
                                Clock::time_point deadline, int workers);

}  // namespace resetc::detail
