#pragma once
#include <cstdint>
#include <iosfwd>

namespace ribbon {

// Deterministic property-test corpus; returns the number of failures.
// Prints one line per property group to `out`.
int run_selftest(std::uint64_t seed, std::ostream& out);

}  // namespace ribbon
