#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "resetc/search.hpp"

namespace resetc::experiments {

const std::vector<std::string>& names();

/// Runs one named experiment. Each claim becomes one JSON line on `machine` with
/// "result":"PASS" or "FAIL"; a readable table goes to `human`. Returns the number of failed
/// claims. Throws Errc::invalid_argument for an unknown name.
std::size_t run(const std::string& name, std::ostream& machine, std::ostream& human,
                const SearchOptions& search = {});

/// The factor set {bbbabba, aabbba, ababbba, abbabbba} over {a, b}.
std::vector<Word> section4_factors();

}  // namespace resetc::experiments
