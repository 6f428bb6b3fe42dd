#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hssnt/tgeo.hpp"

namespace hssnt {

struct SuiteOptions {
  std::optional<OddMap> eta;  // holo defaults to tanh, symp to sinh
  int samples = 20;
  std::uint64_t seed = 1;
  std::optional<double> tol;  // overrides the sampled-differential tolerance (1e-5)
};

const std::vector<std::string>& suite_names();

// Runs one named suite, or every suite for "all". Throws UnknownName for other names.
VerifyReport run_suite(const Space& s, const std::string& suite, const SuiteOptions& o);

}  // namespace hssnt
