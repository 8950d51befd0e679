#pragma once

#include <cstdint>
#include <ostream>

namespace homshape::tool {

/// Runs the self-contained invariant battery on generated data. Prints one
/// line per check and returns the number of failures.
int run_checks(std::uint64_t seed, std::ostream& out);

}  // namespace homshape::tool
