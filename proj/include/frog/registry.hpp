#pragma once

#include <string>
#include <vector>

#include "frog/curve.hpp"

namespace frog {

/// The named parameter sets shipped with the toolkit: eccfrog522pp plus the
/// comparison curves used by the benchmark harness.
const CurveParams& registry_get(const std::string& name);

/// Registry names in benchmark order.
const std::vector<std::string>& registry_names();

struct UnknownCurveError : std::invalid_argument {
    explicit UnknownCurveError(const std::string& name)
        : std::invalid_argument("unknown curve: " + name) {}
};

}  // namespace frog
