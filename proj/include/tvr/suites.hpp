#pragma once

#include <cstdint>
#include <string>

#include "tvr/operators.hpp"

namespace tvr {

struct SuiteParams {
  Index n = 0;  // 0 = suite default size
  std::uint64_t seed = 1;
};

/// Known suites: sobolev, decay, haar_lemmas, padding, cone_tube,
/// strong_sobolev, rip. Each runs its module invariants and returns a
/// machine-readable report {"suite", "pass", "params", ...measured
/// extremes}. Unknown names raise std::invalid_argument.
json_t run_property_suite(const std::string& suite, const SuiteParams& params = {});

/// All suite names in canonical order.
const std::vector<std::string>& property_suite_names();

}  // namespace tvr
