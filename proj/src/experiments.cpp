#include "resetc/experiments.hpp"

#include <iomanip>

#include <json.hpp>

#include "resetc/gallery.hpp"
#include "resetc/io.hpp"
#include "resetc/lang.hpp"
#include "resetc/subset.hpp"

namespace resetc::experiments {

namespace {

class Ledger {
 public:
  Ledger(std::string experiment, std::ostream& machine, std::ostream& human)
      : experiment_(std::move(experiment)), machine_(machine), human_(human) {}

  void claim(const std::string& what, long long expected, long long actual) {
    record(what, std::to_string(expected), std::to_string(actual), expected == actual);
  }
  void claim(const std::string& what, bool holds) { record(what, "true", holds ? "true" : "false", holds); }

  std::size_t failures() const { return failures_; }

 private:
  void record(const std::string& what, const std::string& expected, const std::string& actual, bool pass) {
    if (!pass) ++failures_;
    nlohmann::ordered_json j;
    j["experiment"] = experiment_;
    j["claim"] = what;
    j["expected"] = expected;
    j["actual"] = actual;
    j["result"] = pass ? "PASS" : "FAIL";
    machine_ << j.dump() << '\n';
    human_ << std::left << std::setw(48) << what << std::setw(10) << expected << std::setw(10) << actual
           << (pass ? "PASS" : "FAIL") << '\n';
  }

  std::string experiment_;
  std::ostream& machine_;
  std::ostream& human_;
  std::size_t failures_ = 0;
};

void stage_table(const SearchReport& r, std::ostream& human) {
  human << "  k   tables      examined  restricted  non-sync   filtered   inequiv  witnesses  secs\n";
  for (const auto& s : r.stages)
    human << "  " << std::setw(3) << s.states << ' ' << std::setw(11) << s.tables << ' ' << std::setw(9)
          << s.examined << ' ' << std::setw(10) << s.restricted << ' ' << std::setw(10)
          << s.non_synchronizing << ' ' << std::setw(10) << s.membership_filter << ' ' << std::setw(9)
          << s.equivalence_failed << ' ' << std::setw(9) << s.witnesses << ' ' << std::fixed
          << std::setprecision(2) << s.seconds << '\n';
}

// Searches from one state upward so every size below rc is exhausted explicitly.
SearchReport full_search(const Dfa& language, SearchOptions options, bool all = false) {
  options.min_states = 1;
  options.all_witnesses = all;
  return reset_complexity(language, options);
}

long long rc_of(const SearchReport& r) { return r.rc_value ? static_cast<long long>(*r.rc_value) : -1; }

long long power_sc(const Dfa& d) { return static_cast<long long>(state_complexity(syn_power_dfa(d))); }

void prop1(Ledger& ledger, const SearchOptions& search) {
  for (std::size_t ell = 0; ell <= 20; ++ell)
    ledger.claim("sc(a^" + std::to_string(ell) + " S*)", static_cast<long long>(ell + 1),
                 static_cast<long long>(state_complexity(gallery::unary_chain(ell))));
  for (std::size_t ell = 0; ell <= 7; ++ell)
    ledger.claim("rc(a^" + std::to_string(ell) + " S*)", static_cast<long long>(ell + 1),
                 rc_of(full_search(gallery::unary_chain(ell), search)));
}

void series(Ledger& ledger, const char* name, Dfa (*make)(std::size_t), std::size_t from, std::size_t to) {
  for (std::size_t n = from; n <= to; ++n)
    ledger.claim(std::string("sc(Syn(") + name + "_" + std::to_string(n) + "))",
                 (1LL << n) - static_cast<long long>(n), power_sc(make(n)));
}

void theorem1(Ledger& ledger, std::ostream& human, const SearchOptions& search) {
  struct Case {
    const char* name;
    Dfa (*make)(std::size_t);
    std::size_t n;
  };
  const Case cases[] = {{"C", gallery::cerny, 3},        {"C", gallery::cerny, 4},
                        {"C", gallery::cerny, 5},        {"L", gallery::l_automaton, 4},
                        {"V", gallery::v_automaton, 3},  {"V", gallery::v_automaton, 4}};
  for (const auto& c : cases) {
    const SearchReport r = full_search(syn_power_dfa(c.make(c.n)), search);
    const std::string label = std::string("rc(Syn(") + c.name + "_" + std::to_string(c.n) + "))";
    human << label << '\n';
    stage_table(r, human);
    ledger.claim(label, static_cast<long long>(c.n), rc_of(r));
    ledger.claim(label + " >= f(l)", r.rc_value && *r.rc_value >= r.f_bound);
  }
}

void section4(Ledger& ledger, std::ostream& human, const SearchOptions& search) {
  const Dfa z = gallery::z6();
  const Dfa s = gallery::s6();
  const Dfa ideal = factor_ideal_dfa(FactorSet(2, section4_factors()));
  ledger.claim("Syn(Z6) = Syn(S6)", equivalent(syn_power_dfa(z), syn_power_dfa(s)));
  ledger.claim("Syn(Z6) = factor ideal", equivalent(syn_power_dfa(z), ideal));
  ledger.claim("Z6 has a sink", !sinks(z).empty());
  ledger.claim("S6 strongly connected", is_strongly_connected(s));

  const SearchReport r = full_search(ideal, search, true);
  human << "exhaustive search for the factor ideal (l = " << r.shortest_length << ", f = " << r.f_bound
        << ", sc = " << r.sc << ")\n";
  stage_table(r, human);
  bool small_exhausted = true;
  for (const auto& st : r.stages)
    if (st.states <= 5) small_exhausted = small_exhausted && st.completed && st.witnesses == 0;
  ledger.claim("no witness with at most 5 states", small_exhausted && r.lower_bound >= 6);
  ledger.claim("rc(factor ideal)", 6, rc_of(r));
  bool has_z = false, has_s = false;
  for (const Dfa& w : r.witnesses_all) {
    has_z = has_z || iso_check(w, z);
    has_s = has_s || iso_check(w, s);
  }
  ledger.claim("Z6 among 6-state witnesses", has_z);
  ledger.claim("S6 among 6-state witnesses", has_s);
  human << "non-isomorphic 6-state witnesses: " << r.witnesses_all.size() << '\n';
}

}  // namespace

const std::vector<std::string>& names() {
  static const std::vector<std::string> all{"prop1", "prop2", "prop3", "prop4", "theorem1", "section4"};
  return all;
}

std::vector<Word> section4_factors() {
  return {io::parse_word("bbbabba", "ab"), io::parse_word("aabbba", "ab"),
          io::parse_word("ababbba", "ab"), io::parse_word("abbabbba", "ab")};
}

std::size_t run(const std::string& name, std::ostream& machine, std::ostream& human,
                const SearchOptions& search) {
  Ledger ledger(name, machine, human);
  human << "== " << name << " ==\n";
  if (name == "prop1")
    prop1(ledger, search);
  else if (name == "prop2")
    series(ledger, "C", gallery::cerny, 3, 11);
  else if (name == "prop3")
    series(ledger, "L", gallery::l_automaton, 4, 11);
  else if (name == "prop4")
    series(ledger, "V", gallery::v_automaton, 4, 11);
  else if (name == "theorem1")
    theorem1(ledger, human, search);
  else if (name == "section4")
    section4(ledger, human, search);
  else
    throw Error(Errc::invalid_argument, "unknown experiment '" + name + "'");
  return ledger.failures();
}

}  // namespace resetc::experiments
