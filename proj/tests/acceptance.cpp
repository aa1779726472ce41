// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "resetc/experiments.hpp"
#include "resetc/gallery.hpp"
#include "resetc/lang.hpp"
#include "resetc/search.hpp"
#include "resetc/subset.hpp"

using namespace resetc;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

// Exact reports collected by criteria 5, 6 and 8 for criterion 12.
std::vector<SearchReport> exact_reports;

SearchReport search_from_one(const Dfa& language) {
  SearchOptions o;
  o.min_states = 1;
  SearchReport r = reset_complexity(language, o);
  if (r.status == SearchStatus::exact) exact_reports.push_back(r);
  return r;
}

std::size_t two_pow_minus(std::size_t n) { return (std::size_t{1} << n) - n; }

Outcome cerny_lengths() {
  Outcome out;
  for (std::size_t n = 2; n <= 10; ++n) {
    const auto w = shortest_reset_word(gallery::cerny(n));
    out.expect(w && w->size() == (n - 1) * (n - 1), "C_" + std::to_string(n));
  }
  return out;
}

Outcome unary_chain() {
  Outcome out;
  for (std::size_t ell = 0; ell <= 20; ++ell)
    out.expect(state_complexity(gallery::unary_chain(ell)) == ell + 1, "sc at ell=" + std::to_string(ell));
  for (std::size_t ell = 0; ell <= 7; ++ell) {
    SearchOptions o;
    o.min_states = 1;
    const SearchReport r = reset_complexity(gallery::unary_chain(ell), o);
    out.expect(r.status == SearchStatus::exact && r.rc_value == ell + 1, "rc at ell=" + std::to_string(ell));
  }
  return out;
}

Outcome cerny_sc() {
  Outcome out;
  for (std::size_t n = 3; n <= 11; ++n)
    out.expect(state_complexity(syn_power_dfa(gallery::cerny(n))) == two_pow_minus(n), "C_" + std::to_string(n));
  return out;
}

Outcome l_and_v_sc() {
  Outcome out;
  for (std::size_t n = 4; n <= 11; ++n) {
    out.expect(state_complexity(syn_power_dfa(gallery::l_automaton(n))) == two_pow_minus(n),
               "L_" + std::to_string(n));
    out.expect(state_complexity(syn_power_dfa(gallery::v_automaton(n))) == two_pow_minus(n),
               "V_" + std::to_string(n));
  }
  return out;
}

Outcome small_rc_values() {
  Outcome out;
  const std::vector<std::pair<std::string, Dfa>> cases{
      {"C_3", gallery::cerny(3)},        {"C_4", gallery::cerny(4)},        {"C_5", gallery::cerny(5)},
      {"L_4", gallery::l_automaton(4)},  {"V_3", gallery::v_automaton(3)},  {"V_4", gallery::v_automaton(4)}};
  for (const auto& [name, a] : cases) {
    const SearchReport r = search_from_one(syn_power_dfa(a));
    out.expect(r.status == SearchStatus::exact && r.rc_value == a.n_states(), name);
    out.expect(r.stages.front().states == 1, name + " searched from k=1");
  }
  return out;
}

Outcome tail_ideal() {
  Outcome out;
  for (std::size_t n = 3; n <= 5; ++n) {
    const Dfa t = gallery::tail_automaton(n);
    out.expect(state_complexity(t) == n, "sc(T_" + std::to_string(n) + ")");
    const SearchReport r = search_from_one(t);
    out.expect(r.status == SearchStatus::exact && r.rc_value == n, "rc(T_" + std::to_string(n) + ")");
  }
  return out;
}

Outcome section4_languages() {
  Outcome out;
  const Dfa z = syn_power_dfa(gallery::z6()), s = syn_power_dfa(gallery::s6());
  const Dfa ideal = factor_ideal_dfa(FactorSet(2, experiments::section4_factors()));
  out.expect(equivalent(z, s), "Syn(Z6) = Syn(S6)");
  out.expect(equivalent(z, ideal), "Syn(Z6) = factor ideal");
  return out;
}

Outcome section4_search() {
  Outcome out;
  SearchOptions o;
  o.min_states = 1;
  o.max_states = 6;
  o.all_witnesses = true;
  const SearchReport r = reset_complexity(factor_ideal_dfa(FactorSet(2, experiments::section4_factors())), o);
  out.expect(r.status == SearchStatus::exact, "status " + to_string(r.status));
  out.expect(r.rc_value == 6u, "rc = 6");
  for (const StageStats& st : r.stages) {
    out.expect(st.completed, "stage " + std::to_string(st.states) + " completed");
    if (st.states <= 5) out.expect(st.witnesses == 0, "no witness at k=" + std::to_string(st.states));
  }
  bool has_z = false, has_s = false;
  for (const Dfa& w : r.witnesses_all) {
    has_z = has_z || iso_check(w, gallery::z6());
    has_s = has_s || iso_check(w, gallery::s6());
  }
  out.expect(has_z, "Z6 among witnesses");
  out.expect(has_s, "S6 among witnesses");
  if (r.status == SearchStatus::exact) exact_reports.push_back(r);
  return out;
}

Outcome factor_ideal_suite() {
  Outcome out;
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t sigma = 2 + rng() % 2;
    std::vector<Word> words(1 + rng() % 4);
    for (Word& x : words) x = oracle::random_word(rng, 6, sigma, 1);
    const Dfa ideal = factor_ideal_dfa(FactorSet(sigma, words));
    const Dfa m = minimize(ideal);
    const std::string tag = "case " + std::to_string(trial);
    out.expect(m.finals()->size() == 1, tag + ": one final state");
    if (m.finals()->size() != 1) continue;
    out.expect(sinks(m).contains(m.finals()->front()), tag + ": final is a sink");
    out.expect(is_synchronizing(m), tag + ": synchronizing");
    out.expect(equivalent(syn_power_dfa(m.bare()), ideal), tag + ": Syn = L");
  }
  return out;
}

Outcome stable_sets() {
  Outcome out;
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + rng() % 12, sigma = 1 + rng() % 3;
    const Dfa d = oracle::random_dfa(rng, n, sigma);
    const Word w = oracle::random_word(rng, 6, sigma, 1);
    const StablePair p = stable_set(d, w);
    const std::string tag = "case " + std::to_string(trial);
    out.expect(apply(d, p.m, w) == p.m, tag + ": m fixed");
    out.expect(p.m.bits() == oracle::largest_fixed_subset(d, w), tag + ": m largest");
    out.expect(p.k + p.m.size() <= n, tag + ": k bound");
    StateSet s = StateSet::full(n);
    for (std::size_t i = 0; i < p.k; ++i) s = apply(d, s, w);
    out.expect(s == p.m, tag + ": Q.w^k = m");
  }
  return out;
}

Outcome pair_words() {
  Outcome out;
  for (std::size_t n = 3; n <= 10; ++n) {
    const Dfa c = gallery::cerny(n);
    for (State p = 0; p < n; ++p)
      for (State q = p + 1; q < n; ++q)
        out.expect(apply(c, StateSet::of({p, q}), cerny_pair_word(n, p, q)) == StateSet::singleton(0),
                   "n=" + std::to_string(n) + " {" + std::to_string(p) + "," + std::to_string(q) + "}");
  }
  return out;
}

Outcome lower_bounds() {
  Outcome out;
  out.expect(!exact_reports.empty(), "no reports collected");
  for (const SearchReport& r : exact_reports) {
    out.expect(r.f_bound == rc_lower_bound(r.shortest_length), "f recomputed");
    out.expect(r.rc_value && rc_lower_bound(r.shortest_length) <= *r.rc_value,
               "f(" + std::to_string(r.shortest_length) + ") <= rc");
  }
  return out;
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> check;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Cerny reset lengths (n-1)^2, n=2..10", 1, cerny_lengths},
      {2, "unary ideals: sc and rc equal ell+1", 60, unary_chain},
      {3, "sc(Syn(C_n)) = 2^n - n, n=3..11", 30, cerny_sc},
      {4, "sc(Syn(L_n)) = sc(Syn(V_n)) = 2^n - n, n=4..11", 60, l_and_v_sc},
      {5, "rc = n for C_3, C_4, C_5, L_4, V_3, V_4", 120, small_rc_values},
      {6, "sc(T_n) = rc(T_n) = n, n=3..5", 600, tail_ideal},
      {7, "Syn(Z6) = Syn(S6) = factor ideal", 1, section4_languages},
      {8, "factor ideal: no witness below 6 states, Z6 and S6 found", 1800, section4_search},
      {9, "minimal recognizers of 200 random factor ideals", 60, factor_ideal_suite},
      {10, "stable sets of 1000 random (dfa, word) pairs", 120, stable_sets},
      {11, "pair-merging words in C_n, n=3..10", 1, pair_words},
      {12, "f(ell) <= rc on every exact report", 1, lower_bounds},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && secs > c.limit_seconds) {
      o.ok = false;
      std::ostringstream msg;
      msg << "exceeded " << c.limit_seconds << " s";
      o.detail = msg.str();
    }
    if (!o.ok) ++failures;
    std::printf("%s %2d %s [%.2f s]%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, secs,
                o.detail.empty() ? "" : " -- ", o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
