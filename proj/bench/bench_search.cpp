// Serial reference vs. OpenMP kernel on fixed rc searches.
// Usage: bench_search [workers] [repeats]

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "resetc/experiments.hpp"
#include "resetc/gallery.hpp"
#include "resetc/lang.hpp"
#include "resetc/search.hpp"
#include "resetc/subset.hpp"

using namespace resetc;

namespace {

struct Case {
  std::string name;
  Dfa language;
  std::size_t max_states;
};

double best_of(int repeats, const Dfa& language, const SearchOptions& options, SearchReport& report) {
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    const auto start = std::chrono::steady_clock::now();
    report = reset_complexity(language, options);
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  const int workers = argc > 1 ? std::atoi(argv[1]) : omp_get_max_threads();
  const int repeats = argc > 2 ? std::atoi(argv[2]) : 3;

  const std::vector<Case> cases{
      {"syn(C_5)", syn_power_dfa(gallery::cerny(5)), 5},
      {"syn(V_5)", syn_power_dfa(gallery::v_automaton(5)), 5},
      {"T_5", gallery::tail_automaton(5), 5},
      {"factor ideal, k<=6", factor_ideal_dfa(FactorSet(2, experiments::section4_factors())), 6},
  };

  std::printf("workers=%d repeats=%d\n", workers, repeats);
  std::printf("%-22s %12s %12s %12s %8s %6s\n", "case", "examined", "serial s", "parallel s", "speedup", "same");
  bool all_same = true;
  for (const Case& c : cases) {
    SearchOptions o;
    o.min_states = 1;
    o.max_states = c.max_states;
    o.all_witnesses = true;
    o.engine = SearchEngine::serial;
    SearchReport serial, parallel;
    const double ts = best_of(repeats, c.language, o, serial);
    o.engine = SearchEngine::parallel;
    o.workers = workers;
    const double tp = best_of(repeats, c.language, o, parallel);

    std::uint64_t examined = 0;
    for (const StageStats& s : serial.stages) examined += s.examined;
    const bool same = serial.stages == parallel.stages && serial.witnesses_all == parallel.witnesses_all &&
                      serial.rc_value == parallel.rc_value;
    all_same = all_same && same;
    std::printf("%-22s %12llu %12.3f %12.3f %8.2f %6s\n", c.name.c_str(),
                static_cast<unsigned long long>(examined), ts, tp, ts / tp, same ? "yes" : "NO");
  }
  return all_same ? 0 : 1;
}
