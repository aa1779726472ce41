#pragma once

#include <stdexcept>
#include <string>

namespace resetc {

enum class Errc {
  invalid_argument,
  invalid_word,
  too_many_states,
  not_recognizer,
  alphabet_mismatch,
  not_ideal,
  not_synchronizing,
  budget_exhausted,
  parse,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace resetc
