#include "resetc/gallery.hpp"

namespace resetc::gallery {

namespace {

constexpr Letter a = 0;
constexpr Letter b = 1;

void require_at_least(std::size_t n, std::size_t min, const char* family) {
  if (n < min)
    throw Error(Errc::invalid_argument, std::string(family) + " requires n >= " + std::to_string(min));
}

}  // namespace

Dfa cerny(std::size_t n) {
  require_at_least(n, 2, "cerny");
  Dfa d(n, 2);
  for (State i = 0; i < n; ++i) {
    d.set_next(i, b, static_cast<State>((i + 1) % n));
    d.set_next(i, a, i == n - 1 ? 0 : i);
  }
  return d;
}

Dfa unary_chain(std::size_t ell) {
  Dfa d(ell + 1, 1);
  for (State i = 0; i <= ell; ++i) d.set_next(i, a, i < ell ? i + 1 : i);
  return d.with_recognizer(0, {static_cast<State>(ell)});
}

Dfa tail_automaton(std::size_t n) {
  require_at_least(n, 3, "tail");
  Dfa d(n, 2);
  for (State i = 0; i + 3 <= n; ++i) {
    d.set_next(i, a, i + 1);
    d.set_next(i, b, 0);
  }
  const State pre = static_cast<State>(n - 2);
  const State acc = static_cast<State>(n - 1);
  d.set_next(pre, a, pre);
  d.set_next(pre, b, acc);
  d.set_next(acc, a, acc);
  d.set_next(acc, b, acc);
  return d.with_recognizer(0, {acc});
}

Dfa l_automaton(std::size_t n) {
  require_at_least(n, 4, "lseries");
  Dfa d(n, 2);
  for (State i = 0; i + 4 <= n; ++i) {
    d.set_next(i, a, i + 1);
    d.set_next(i, b, i + 1);
  }
  const State s3 = static_cast<State>(n - 3), s2 = static_cast<State>(n - 2),
              s1 = static_cast<State>(n - 1);
  d.set_next(s3, b, s2);
  d.set_next(s3, a, s1);
  d.set_next(s2, b, s1);
  d.set_next(s2, a, 0);
  d.set_next(s1, a, 0);
  d.set_next(s1, b, 0);
  return d;
}

Dfa v_automaton(std::size_t n) {
  require_at_least(n, 3, "vseries");
  Dfa d(n, 2);
  for (State i = 0; i + 3 <= n; ++i) {
    d.set_next(i, a, i + 1);
    d.set_next(i, b, i + 1);
  }
  const State s2 = static_cast<State>(n - 2), s1 = static_cast<State>(n - 1);
  d.set_next(s2, b, s1);
  d.set_next(s2, a, 0);
  d.set_next(s1, a, 0);
  d.set_next(s1, b, 0);
  return d;
}

Dfa v_prime_automaton(std::size_t n) {
  require_at_least(n, 3, "vprime");
  constexpr Letter lb = 0;
  constexpr Letter lc = 1;
  Dfa d(n, 2);
  for (State i = 0; i + 1 < n; ++i) {
    d.set_next(i, lb, i + 1);
    d.set_next(i, lc, i + 1);
  }
  d.set_next(static_cast<State>(n - 1), lb, 0);
  d.set_next(static_cast<State>(n - 1), lc, 1);
  return d;
}

// tests/fixtures/z6.json and tests/fixtures/s6.json hold the same rows.
Dfa z6() {
  return Dfa::from_letter_rows({
      {0, 1, 1, 1, 0, 2},  // a
      {0, 2, 3, 4, 5, 5},  // b
  });
}

Dfa s6() {
  return Dfa::from_letter_rows({
      {0, 1, 0, 1, 1, 2},  // a
      {1, 2, 3, 4, 5, 4},  // b
  });
}

std::string letter_names(const std::string& family) {
  if (family == "unary") return "a";
  if (family == "vprime") return "bc";
  return "ab";
}

}  // namespace resetc::gallery
