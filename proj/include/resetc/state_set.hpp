#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "resetc/error.hpp"

namespace resetc {

using State = std::uint32_t;
using Letter = std::uint32_t;

/// Largest automaton the subset-exponential paths accept: one machine word per subset.
inline constexpr std::size_t kMaxSubsetStates = 64;

inline void require_subset_capacity(std::size_t n_states) {
  if (n_states > kMaxSubsetStates)
    throw Error(Errc::too_many_states,
                "too many states: subset operations support at most 64 states, got " +
                    std::to_string(n_states));
}

/// Subset of [0, 64) stored as a bitmask.
class StateSet {
 public:
  constexpr StateSet() = default;
  constexpr explicit StateSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr StateSet full(std::size_t n) {
    return StateSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr StateSet singleton(State q) { return StateSet(std::uint64_t{1} << q); }
  static StateSet of(std::initializer_list<State> states) {
    StateSet s;
    for (State q : states) s.insert(q);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(State q) const { return q < 64 && ((bits_ >> q) & 1u); }
  constexpr void insert(State q) { bits_ |= std::uint64_t{1} << q; }
  constexpr void erase(State q) { bits_ &= ~(std::uint64_t{1} << q); }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool is_subset_of(StateSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr State first() const { return static_cast<State>(std::countr_zero(bits_)); }

  template <typename F>
  constexpr void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(static_cast<State>(std::countr_zero(b)));
  }

  std::vector<State> to_vector() const {
    std::vector<State> out;
    out.reserve(size());
    for_each([&](State q) { out.push_back(q); });
    return out;
  }

  friend constexpr StateSet operator|(StateSet a, StateSet b) { return StateSet(a.bits_ | b.bits_); }
  friend constexpr StateSet operator&(StateSet a, StateSet b) { return StateSet(a.bits_ & b.bits_); }
  friend constexpr bool operator==(StateSet, StateSet) = default;
  friend constexpr auto operator<=>(StateSet, StateSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace resetc
