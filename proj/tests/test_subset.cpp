#include <doctest.h>

#include "oracles.hpp"
#include "resetc/gallery.hpp"
#include "resetc/io.hpp"
#include "resetc/lang.hpp"
#include "resetc/subset.hpp"

using namespace resetc;

namespace {
Word w(const char* text) { return io::parse_word(text, "ab"); }
}  // namespace

TEST_SUITE("subset-engine") {
  TEST_CASE("is_synchronizing examples") {
    for (std::size_t n = 2; n <= 12; ++n) CHECK(is_synchronizing(gallery::cerny(n)));
    CHECK(is_synchronizing(Dfa(1, 2)));
    CHECK_FALSE(is_synchronizing(Dfa::from_letter_rows({{1, 0}, {1, 0}})));
  }

  TEST_CASE("is_synchronizing agrees with subset BFS on every automaton up to 4 states") {
    for (std::size_t sigma = 1; sigma <= 2; ++sigma)
      for (std::size_t n = 1; n <= 4; ++n)
        for (const Dfa& d : oracle::all_tables(n, sigma)) {
          const long len = oracle::shortest_reset_length(d);
          REQUIRE(is_synchronizing(d) == (len >= 0));
          const auto word = shortest_reset_word(d);
          REQUIRE(word.has_value() == (len >= 0));
          if (word) REQUIRE(static_cast<long>(word->size()) == len);
        }
  }

  TEST_CASE("random larger automata") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
      const Dfa d = oracle::random_dfa(rng, 5 + rng() % 6, 2 + rng() % 2);
      const long len = oracle::shortest_reset_length(d);
      CHECK(is_synchronizing(d) == (len >= 0));
      const auto word = shortest_reset_word(d);
      CHECK(word.has_value() == (len >= 0));
      if (word) {
        CHECK(static_cast<long>(word->size()) == len);
        CHECK(apply(d, StateSet::full(d.n_states()), *word).size() == 1);
      }
    }
  }

  TEST_CASE("shortest_reset_word") {
    CHECK(shortest_reset_word(gallery::cerny(4))->size() == 9);
    CHECK(shortest_reset_word(gallery::cerny(5))->size() == 16);
    CHECK(*shortest_reset_word(gallery::z6()) == w("aabbba"));
    CHECK(shortest_reset_word(Dfa(1, 2))->empty());
    CHECK_FALSE(shortest_reset_word(Dfa::from_letter_rows({{1, 0}})).has_value());
    CHECK_THROWS_AS(shortest_reset_word(Dfa(65, 1)), Error);
  }

  TEST_CASE("shortest_reset_word is lexicographically least among shortest") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 150; ++trial) {
      const Dfa d = oracle::random_dfa(rng, 3 + rng() % 3, 2);
      const auto word = shortest_reset_word(d);
      if (!word || word->size() > 14) continue;
      // Brute force: first word of that length in lex order that resets.
      const std::size_t len = word->size();
      Word expected;
      for (std::uint64_t code = 0; code < (std::uint64_t{1} << len); ++code) {
        Word cand(len);
        for (std::size_t i = 0; i < len; ++i) cand[i] = (code >> (len - 1 - i)) & 1u;
        if (std::popcount(oracle::run_bits(d, oracle::full_bits(d.n_states()), cand)) == 1) {
          expected = cand;
          break;
        }
      }
      CHECK(*word == expected);
    }
  }

  TEST_CASE("power automaton") {
    const auto c3 = power_automaton(gallery::cerny(3));
    CHECK(c3.recognizer.n_states() == 7);
    CHECK(c3.synchronizing);
    CHECK(c3.subsets.front() == StateSet::full(3));

    const Dfa one = syn_power_dfa(Dfa(1, 2));
    CHECK(one.n_states() == 1);
    CHECK(accepts(one, Word{}));
    CHECK(accepts(one, w("abba")));

    CHECK(state_complexity(syn_power_dfa(gallery::v_automaton(4))) == 12);

    const auto swap = power_automaton(Dfa::from_letter_rows({{1, 0}, {1, 0}}));
    CHECK_FALSE(swap.synchronizing);
    CHECK(swap.recognizer.finals()->empty());
  }

  TEST_CASE("power automaton recognizes exactly the reset words") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 100; ++trial) {
      const Dfa d = oracle::random_dfa(rng, 2 + rng() % 6, 2);
      const Dfa p = syn_power_dfa(d);
      for (int i = 0; i < 30; ++i) {
        const Word word = oracle::random_word(rng, 20, 2);
        CHECK(accepts(p, word) ==
              (std::popcount(oracle::run_bits(d, oracle::full_bits(d.n_states()), word)) == 1));
      }
      const auto reset = shortest_reset_word(d);
      const auto accepted = shortest_word(p);
      CHECK(reset.has_value() == accepted.has_value());
      if (reset) CHECK(reset->size() == accepted->size());
    }
  }

  TEST_CASE("stable_set examples") {
    CHECK(stable_set(gallery::cerny(4), w("b")) == StablePair{StateSet::full(4), 0});
    CHECK(stable_set(gallery::cerny(4), w("a")) == StablePair{StateSet::of({0, 1, 2}), 1});
    CHECK(stable_set(gallery::unary_chain(3).bare(), Word{0}) == StablePair{StateSet::of({3}), 3});
    CHECK_THROWS_AS(stable_set(gallery::cerny(4), Word{}), Error);
  }

  TEST_CASE("stable_set invariants against brute force") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t n = 1 + rng() % 10;
      const Dfa d = oracle::random_dfa(rng, n, 2);
      const Word word = oracle::random_word(rng, 5, 2, 1);
      const StablePair sp = stable_set(d, word);
      const StateSet all = StateSet::full(n);
      CHECK(apply(d, sp.m, word) == sp.m);
      Word power;
      for (std::size_t i = 0; i < sp.k; ++i) power.insert(power.end(), word.begin(), word.end());
      CHECK(apply(d, all, power) == sp.m);
      if (sp.k > 0) {
        power.resize(power.size() - word.size());
        CHECK(apply(d, all, power) != sp.m);
      }
      CHECK(sp.k <= n - sp.m.size());
      CHECK(sp.m.bits() == oracle::largest_fixed_subset(d, word));
    }
  }

  TEST_CASE("tail automaton: a^i b does not reset for i < n-2") {
    for (std::size_t n = 3; n <= 9; ++n) {
      const Dfa d = gallery::tail_automaton(n).bare();
      for (std::size_t i = 0; i + 2 < n; ++i) {
        Word word(i, 0);
        word.push_back(1);
        CHECK(apply(d, StateSet::full(n), word).size() != 1);
      }
    }
  }

  TEST_CASE("pair and subset distance") {
    CHECK(pair_distance(4, 0, 2) == 2);
    CHECK(pair_distance(4, 0, 3) == 1);
    CHECK(pair_distance(6, 1, 5) == 2);
    CHECK_THROWS_AS(pair_distance(4, 2, 2), Error);
    CHECK_THROWS_AS(pair_distance(4, 3, 1), Error);
    CHECK_THROWS_AS(pair_distance(4, 1, 4), Error);

    const auto d1 = subset_distance(6, StateSet::of({0, 2, 5}));
    CHECK(d1.distance == 1);
    CHECK(d1.witness == std::pair<State, State>{0, 5});
    CHECK(subset_distance(4, StateSet::of({0, 2})).distance == 2);
    const auto d3 = subset_distance(8, StateSet::of({0, 3, 6}));
    CHECK(d3.distance == 2);
    CHECK(d3.witness == std::pair<State, State>{0, 6});
    CHECK_THROWS_AS(subset_distance(4, StateSet::of({1})), Error);
  }

  TEST_CASE("cerny_pair_word") {
    CHECK(cerny_pair_word(4, 0, 2) == w("bbbabbba"));
    CHECK(apply(gallery::cerny(4), StateSet::of({0, 2}), w("bbbabbba")) == StateSet::of({0}));
    CHECK(cerny_pair_word(4, 2, 3) == w("ba"));
    CHECK(cerny_pair_word(5, 0, 4) == w("a"));
    CHECK_THROWS_AS(cerny_pair_word(4, 3, 3), Error);
    for (std::size_t n = 3; n <= 10; ++n)
      for (State p = 0; p < n; ++p)
        for (State q = p + 1; q < n; ++q)
          CHECK(apply(gallery::cerny(n), StateSet::of({p, q}), cerny_pair_word(n, p, q)) ==
                StateSet::of({0}));
  }
}
