#include <doctest.h>

#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "resetc/gallery.hpp"
#include "resetc/io.hpp"

using namespace resetc;

namespace {

Errc parse_error_code(const std::string& text, std::string& message) {
  try {
    io::parse(text);
  } catch (const Error& e) {
    message = e.what();
    return e.code();
  }
  return Errc::invalid_argument;
}

}  // namespace

TEST_SUITE("cli-io") {
  TEST_CASE("canonical document for C_3") {
    const std::string doc = R"({"states":3,"alphabet":["a","b"],"transitions":[[0,1],[1,2],[0,0]]})";
    CHECK(io::serialize(gallery::cerny(3)) == doc);
    const auto parsed = io::parse(doc);
    CHECK(parsed.dfa == gallery::cerny(3));
    CHECK(parsed.letters == "ab");
    CHECK(io::serialize(parsed) == doc);
  }

  TEST_CASE("recognizer document") {
    const std::string doc =
        R"({"states":3,"alphabet":["a"],"transitions":[[1],[2],[2]],"initial":0,"finals":[2]})";
    CHECK(io::serialize(io::AutomatonDocument{gallery::unary_chain(2), "a"}) == doc);
    CHECK(io::parse(doc).dfa == gallery::unary_chain(2));
    // Non-canonical spacing and key order still parse.
    const auto loose = io::parse(R"( { "finals": [2], "initial": 0, "states": 3,
        "transitions": [[1], [2], [2]], "alphabet": ["a"] } )");
    CHECK(io::serialize(loose) == doc);
  }

  TEST_CASE("fixtures match the gallery") {
    for (const auto& [name, dfa] : {std::pair{"z6", gallery::z6()}, std::pair{"s6", gallery::s6()}}) {
      std::ifstream in(std::string(RESETC_FIXTURES) + "/" + name + ".json");
      REQUIRE(in);
      std::stringstream text;
      text << in.rdbuf();
      CHECK(io::parse(text.str()).dfa == dfa);
    }
  }

  TEST_CASE("round trip on random automata") {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t sigma = 1 + rng() % 3;
      Dfa d = oracle::random_dfa(rng, 1 + rng() % 8, sigma);
      if (rng() & 1u) d = d.with_recognizer(0, {static_cast<State>(d.n_states() - 1)});
      const io::AutomatonDocument doc{d, io::default_letters(sigma)};
      const std::string text = io::serialize(doc);
      CHECK(io::parse(text) == doc);
      CHECK(io::serialize(io::parse(text)) == text);
    }
  }

  TEST_CASE("parse errors") {
    std::string msg;
    CHECK(parse_error_code(R"({"states":2,"alphabet":["a","b"],"transitions":[[0,1],[0]]})", msg) == Errc::parse);
    CHECK(msg.find("transitions row 1") != std::string::npos);

    CHECK(parse_error_code(R"({"states":2,"alphabet":["a"],"transitions":[[0],[1]],"finals":[1]})", msg) ==
          Errc::parse);
    CHECK(msg.find("recognizer requires initial") != std::string::npos);

    CHECK(parse_error_code(R"({"states":2,"alphabet":["a"],"transitions":[[0],[5]]})", msg) == Errc::parse);
    CHECK(msg.find("transition out of range") != std::string::npos);

    CHECK(parse_error_code("{\"states\":2,\n\"alphabet\":[\"a\"]\n,,}", msg) == Errc::parse);
    CHECK(msg.find("line 3") != std::string::npos);

    CHECK(parse_error_code(R"({"states":2,"alphabet":["ab"],"transitions":[[0],[1]]})", msg) == Errc::parse);
    CHECK(parse_error_code(R"({"states":1,"alphabet":["a"],"transitions":[[0]],"extra":1})", msg) == Errc::parse);
    CHECK(parse_error_code(R"({"states":1,"alphabet":["a"]})", msg) == Errc::parse);
  }

  TEST_CASE("words") {
    CHECK(io::parse_word("bca", "abc") == Word{1, 2, 0});
    CHECK(io::word_to_string(Word{1, 0}, "bc") == "cb");
    CHECK_THROWS_AS(io::parse_word("ax", "ab"), Error);
  }

  TEST_CASE("dot output") {
    const std::string c3 = io::to_dot(gallery::cerny(3), "ab");
    for (const char* node : {"  0;\n", "  1;\n", "  2;\n"}) CHECK(c3.find(node) != std::string::npos);
    CHECK(c3.find("0 -> 1 [label=\"b\"]") != std::string::npos);
    CHECK(c3.find("1 -> 2 [label=\"b\"]") != std::string::npos);
    CHECK(c3.find("2 -> 0 [label=\"a,b\"]") != std::string::npos);
    CHECK(c3.find("__start") == std::string::npos);

    CHECK(io::to_dot(gallery::z6(), "ab").find("0 -> 0 [label=\"a,b\"]") != std::string::npos);

    const std::string u2 = io::to_dot(gallery::unary_chain(2), "a");
    CHECK(u2.find("__start -> 0;") != std::string::npos);
    CHECK(u2.find("2 [shape=doublecircle]") != std::string::npos);
  }
}
