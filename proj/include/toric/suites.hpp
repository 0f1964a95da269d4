#pragma once

// Named verification suites run against a single cone.

#include "toric/cone.hpp"
#include "toric/ishida.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace toric {

struct SuiteOptions {
    bool corrupt_differential = false;  // negative control for the d2 suite
    std::uint64_t lift_seed = 1;        // seed for the lift-independence check
};

// d2, ish_n, surjectivity, codim, link, shelling, inequalities, closed_forms.
const std::vector<std::string>& suite_names();

// One report per suite; "all" runs every suite. Throws std::invalid_argument
// for an unknown suite name.
std::vector<CheckReport> run_suite(const Cone& c, const std::string& suite, const SuiteOptions& opts = {});

}  // namespace toric
