#include "resetc/io.hpp"

#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace resetc::io {

using ordered_json = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(Errc::parse, what); }

State read_state(const ordered_json& v, const std::string& where) {
  if (!v.is_number_unsigned()) fail(where + ": expected a nonnegative integer");
  return v.get<State>();
}

}  // namespace

std::string default_letters(std::size_t alphabet_size) {
  std::string out;
  for (std::size_t i = 0; i < alphabet_size; ++i) out.push_back(static_cast<char>('a' + i));
  return out;
}

AutomatonDocument parse(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(std::string("syntax error: ") + e.what());
  }
  if (!doc.is_object()) fail("document must be a JSON object");
  static const std::set<std::string> known{"states", "alphabet", "transitions", "initial", "finals"};
  for (const auto& [key, value] : doc.items())
    if (!known.contains(key)) fail("unknown field '" + key + "'");
  for (const char* key : {"states", "alphabet", "transitions"})
    if (!doc.contains(key)) fail(std::string("missing field '") + key + "'");

  const auto& states = doc["states"];
  if (!states.is_number_unsigned() || states.get<std::uint64_t>() == 0)
    fail("field 'states': expected a positive integer");
  const std::size_t n = states.get<std::size_t>();

  const auto& alphabet = doc["alphabet"];
  if (!alphabet.is_array() || alphabet.empty()) fail("field 'alphabet': expected a nonempty list");
  std::string letters;
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    const auto& l = alphabet[i];
    if (!l.is_string() || l.get<std::string>().size() != 1)
      fail("field 'alphabet' entry " + std::to_string(i) + ": expected a single-character string");
    const char c = l.get<std::string>()[0];
    if (letters.find(c) != std::string::npos)
      fail("field 'alphabet': duplicate letter '" + std::string(1, c) + "'");
    letters.push_back(c);
  }
  const std::size_t sigma = letters.size();

  const auto& rows = doc["transitions"];
  if (!rows.is_array()) fail("field 'transitions': expected a list of rows");
  if (rows.size() != n)
    fail("field 'transitions': expected " + std::to_string(n) + " rows, got " + std::to_string(rows.size()));
  std::vector<State> table;
  table.reserve(n * sigma);
  for (std::size_t q = 0; q < n; ++q) {
    const auto& row = rows[q];
    const std::string where = "transitions row " + std::to_string(q);
    if (!row.is_array() || row.size() != sigma)
      fail(where + ": expected " + std::to_string(sigma) + " entries");
    for (std::size_t a = 0; a < sigma; ++a) table.push_back(read_state(row[a], where));
  }

  const bool has_initial = doc.contains("initial");
  const bool has_finals = doc.contains("finals");
  if (has_finals && !has_initial) fail("recognizer requires initial");
  if (has_initial && !has_finals) fail("recognizer requires finals");
  std::optional<State> initial;
  std::optional<std::vector<State>> finals;
  if (has_initial) {
    initial = read_state(doc["initial"], "field 'initial'");
    const auto& fs = doc["finals"];
    if (!fs.is_array()) fail("field 'finals': expected a list");
    finals.emplace();
    for (std::size_t i = 0; i < fs.size(); ++i)
      finals->push_back(read_state(fs[i], "field 'finals' entry " + std::to_string(i)));
  }

  Dfa dfa(n, sigma, std::move(table), initial, std::move(finals));
  const auto errors = validate(dfa);
  if (!errors.empty()) fail(errors.front());
  return {std::move(dfa), std::move(letters)};
}

std::string serialize(const AutomatonDocument& doc) {
  const Dfa& d = doc.dfa;
  ordered_json out;
  out["states"] = d.n_states();
  auto& alphabet = out["alphabet"] = ordered_json::array();
  for (char c : doc.letters) alphabet.push_back(std::string(1, c));
  auto& rows = out["transitions"] = ordered_json::array();
  for (State q = 0; q < d.n_states(); ++q) {
    const auto r = d.row(q);
    rows.push_back(std::vector<State>(r.begin(), r.end()));
  }
  if (d.initial()) out["initial"] = *d.initial();
  if (d.finals()) out["finals"] = *d.finals();
  return out.dump();
}

std::string word_to_string(const Word& w, std::string_view letters) {
  std::string out;
  for (Letter a : w) out.push_back(a < letters.size() ? letters[a] : '?');
  return out;
}

Word parse_word(std::string_view text, std::string_view letters) {
  Word w;
  for (char c : text) {
    const auto pos = letters.find(c);
    if (pos == std::string_view::npos)
      throw Error(Errc::invalid_word, "letter '" + std::string(1, c) + "' is not in the alphabet");
    w.push_back(static_cast<Letter>(pos));
  }
  return w;
}

std::string to_dot(const Dfa& dfa, std::string_view letters) {
  std::ostringstream out;
  out << "digraph automaton {\n  rankdir=LR;\n  node [shape=circle];\n";
  if (dfa.initial()) out << "  __start [shape=point];\n";
  for (State q = 0; q < dfa.n_states(); ++q) {
    out << "  " << q;
    if (dfa.is_final(q)) out << " [shape=doublecircle]";
    out << ";\n";
  }
  if (dfa.initial()) out << "  __start -> " << *dfa.initial() << ";\n";
  for (State q = 0; q < dfa.n_states(); ++q) {
    std::map<State, std::string> labels;
    for (Letter a = 0; a < dfa.alphabet_size(); ++a) {
      std::string& label = labels[dfa.next(q, a)];
      if (!label.empty()) label += ",";
      label += a < letters.size() ? std::string(1, letters[a]) : std::to_string(a);
    }
    for (const auto& [target, label] : labels)
      out << "  " << q << " -> " << target << " [label=\"" << label << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace resetc::io
