// Command-line front end. Machine-readable results go to stdout, one JSON document per line;
// tables and notes go to stderr.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "resetc/experiments.hpp"
#include "resetc/gallery.hpp"
#include "resetc/io.hpp"
#include "resetc/lang.hpp"
#include "resetc/search.hpp"
#include "resetc/subset.hpp"

using namespace resetc;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

io::AutomatonDocument load(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw Error(Errc::parse, "cannot open '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return io::parse(text);
}

void emit(const ordered_json& j) { std::cout << j.dump() << '\n'; }
void emit_doc(const io::AutomatonDocument& doc) { std::cout << io::serialize(doc) << '\n'; }

ordered_json doc_json(const Dfa& dfa, const std::string& letters) {
  return ordered_json::parse(io::serialize(io::AutomatonDocument{dfa, letters}));
}

ordered_json report_json(const SearchReport& r, const std::string& letters) {
  ordered_json j;
  j["status"] = to_string(r.status);
  j["rc"] = r.rc_value ? ordered_json(*r.rc_value) : ordered_json(nullptr);
  j["lower_bound"] = r.lower_bound;
  j["shortest_length"] = r.shortest_length;
  j["f_bound"] = r.f_bound;
  j["sc"] = r.sc;
  j["witness"] = r.witness ? doc_json(*r.witness, letters) : ordered_json(nullptr);
  auto& all = j["witnesses_all"] = ordered_json::array();
  for (const Dfa& w : r.witnesses_all) all.push_back(doc_json(w, letters));
  auto& stages = j["stages"] = ordered_json::array();
  for (const auto& s : r.stages) {
    ordered_json st;
    st["states"] = s.states;
    st["tables"] = s.tables;
    st["examined"] = s.examined;
    st["restricted"] = s.restricted;
    st["non_synchronizing"] = s.non_synchronizing;
    st["membership_filter"] = s.membership_filter;
    st["equivalence_failed"] = s.equivalence_failed;
    st["witnesses"] = s.witnesses;
    st["completed"] = s.completed;
    stages.push_back(st);
  }
  return j;
}

void print_stages(const SearchReport& r) {
  std::cerr << "l = " << r.shortest_length << ", f(l) = " << r.f_bound << ", sc = " << r.sc
            << ", status = " << to_string(r.status) << "\n";
  for (const auto& s : r.stages)
    std::cerr << "  k=" << s.states << " tables=" << s.tables << " examined=" << s.examined
              << " restricted=" << s.restricted << " non-sync=" << s.non_synchronizing
              << " filtered=" << s.membership_filter << " inequivalent=" << s.equivalence_failed
              << " witnesses=" << s.witnesses << (s.completed ? "" : " (incomplete)") << " "
              << s.seconds << "s\n";
  std::cerr << "elapsed " << r.elapsed_seconds << "s\n";
}

Dfa generate(const std::string& family, std::size_t n) {
  if (family == "cerny") return gallery::cerny(n);
  if (family == "unary") return gallery::unary_chain(n);
  if (family == "tail") return gallery::tail_automaton(n);
  if (family == "lseries") return gallery::l_automaton(n);
  if (family == "vseries") return gallery::v_automaton(n);
  if (family == "vprime") return gallery::v_prime_automaton(n);
  if (family == "z6") return gallery::z6();
  if (family == "s6") return gallery::s6();
  throw Error(Errc::parse, "unknown family '" + family + "'");
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::parse: return kExitUsage;
    case Errc::budget_exhausted: return kExitBudget;
    default: return kExitDomain;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reset words, state complexity and reset complexity of ideal languages"};
  app.require_subcommand(1);

  SearchOptions search;
  app.add_option("--workers", search.workers, "Worker threads for the rc search")
      ->envname("RESETC_WORKERS")
      ->check(CLI::NonNegativeNumber);

  std::string file = "-";
  std::string family, alphabet, word_text, experiment;
  std::size_t n = 0;
  std::vector<std::string> words;
  bool serial = false, no_filters = false;
  std::string restrict_to = "none";

  auto* gen = app.add_subcommand("gen", "Print a gallery automaton");
  gen->add_option("family", family, "cerny|unary|tail|lseries|vseries|vprime|z6|s6")->required();
  gen->add_option("n", n, "Size parameter (ℓ for unary)");

  auto* reset_word = app.add_subcommand("reset-word", "Shortest reset word");
  auto* syn_dfa = app.add_subcommand("syn-dfa", "Power automaton recognizing the reset words");
  auto* minimize_cmd = app.add_subcommand("minimize", "Minimal recognizer");
  auto* sc_cmd = app.add_subcommand("sc", "State complexity of the recognized language");
  auto* ideal_cmd = app.add_subcommand("ideal-check", "Is the recognized language an ideal");
  auto* dot_cmd = app.add_subcommand("dot", "Graphviz rendering");
  auto* check_min = app.add_subcommand("check-min", "Is the automaton minimal for its reset words");
  auto* rc_cmd = app.add_subcommand("rc", "Reset complexity of an ideal language");
  for (auto* sub : {reset_word, syn_dfa, minimize_cmd, sc_cmd, ideal_cmd, dot_cmd, check_min, rc_cmd})
    sub->add_option("file", file, "Automaton document ('-' for stdin)");

  double budget_secs = search.max_seconds_per_stage;
  for (auto* sub : {rc_cmd, check_min}) {
    sub->add_option("--budget-secs", budget_secs, "Time limit per candidate size");
    sub->add_option("--max-candidates", search.max_candidates, "Table limit per candidate size");
    sub->add_flag("--serial", serial, "Use the single-threaded reference search");
    sub->add_flag("--no-filters", no_filters, "Skip the membership filters");
    sub->add_option("--restrict", restrict_to, "none|strongly-connected|sink")
        ->check(CLI::IsMember({"none", "strongly-connected", "sink"}));
  }
  rc_cmd->add_option("--max-states", search.max_states, "Largest candidate size");
  rc_cmd->add_option("--min-states", search.min_states, "Start below the f(l) bound");
  rc_cmd->add_flag("--all-witnesses", search.all_witnesses, "Report every minimal witness");

  auto* factor_cmd = app.add_subcommand("factor-ideal", "Minimal recognizer of the factor ideal");
  factor_cmd->add_option("alphabet", alphabet, "Letters, e.g. ab")->required();
  factor_cmd->add_option("words", words, "Factor words")->required();

  auto* stable_cmd = app.add_subcommand("stable-set", "Largest subset fixed by a word");
  stable_cmd->add_option("file", file, "Automaton document ('-' for stdin)")->required();
  stable_cmd->add_option("word", word_text, "Nonempty word")->required();

  auto* exp_cmd = app.add_subcommand("experiments", "Reproduce a table of claims");
  exp_cmd->add_option("name", experiment, "prop1|prop2|prop3|prop4|theorem1|section4|all")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  search.max_seconds_per_stage = budget_secs;
  if (serial) search.engine = SearchEngine::serial;
  search.use_filters = !no_filters;
  if (restrict_to == "strongly-connected") search.restriction = Restriction::strongly_connected;
  if (restrict_to == "sink") search.restriction = Restriction::has_sink;

  try {
    if (*gen) {
      if (family != "z6" && family != "s6" && gen->count("n") == 0)
        throw Error(Errc::parse, "gen " + family + " needs a size");
      emit_doc({generate(family, n), gallery::letter_names(family)});
    } else if (*reset_word) {
      const auto doc = load(file);
      const auto w = shortest_reset_word(doc.dfa);
      ordered_json j;
      j["synchronizing"] = w.has_value();
      if (w) {
        j["length"] = w->size();
        j["word"] = io::word_to_string(*w, doc.letters);
      }
      emit(j);
    } else if (*syn_dfa) {
      const auto doc = load(file);
      const auto power = power_automaton(doc.dfa);
      if (!power.synchronizing) std::cerr << "note: automaton is not synchronizing; language is empty\n";
      emit_doc({power.recognizer, doc.letters});
    } else if (*minimize_cmd) {
      const auto doc = load(file);
      emit_doc({minimize(doc.dfa), doc.letters});
    } else if (*sc_cmd) {
      ordered_json j;
      j["sc"] = state_complexity(load(file).dfa);
      emit(j);
    } else if (*ideal_cmd) {
      ordered_json j;
      j["ideal"] = is_ideal(load(file).dfa);
      emit(j);
    } else if (*dot_cmd) {
      std::cout << io::to_dot(load(file));
    } else if (*factor_cmd) {
      std::vector<Word> parsed;
      for (const auto& w : words) parsed.push_back(io::parse_word(w, alphabet));
      emit_doc({factor_ideal_dfa(FactorSet(alphabet.size(), parsed)), alphabet});
    } else if (*stable_cmd) {
      const auto doc = load(file);
      const auto pair = stable_set(doc.dfa, io::parse_word(word_text, doc.letters));
      ordered_json j;
      j["m"] = pair.m.to_vector();
      j["k"] = pair.k;
      emit(j);
    } else if (*rc_cmd) {
      const auto doc = load(file);
      const auto report = reset_complexity(doc.dfa, search);
      print_stages(report);
      emit(report_json(report, doc.letters));
      if (report.status == SearchStatus::budget_exhausted) return kExitBudget;
    } else if (*check_min) {
      const auto doc = load(file);
      const auto result = check_minimal_reset(doc.dfa, search);
      print_stages(result.report);
      ordered_json j;
      j["minimal"] = result.minimal ? ordered_json(*result.minimal) : ordered_json(nullptr);
      j["report"] = report_json(result.report, doc.letters);
      emit(j);
      if (!result.minimal) return kExitBudget;
    } else if (*exp_cmd) {
      std::size_t failures = 0;
      if (experiment == "all") {
        for (const auto& name : experiments::names()) failures += experiments::run(name, std::cout, std::cerr, search);
      } else {
        failures = experiments::run(experiment, std::cout, std::cerr, search);
      }
      return failures == 0 ? 0 : kExitDomain;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return 0;
}
