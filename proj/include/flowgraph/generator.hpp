#pragma once

#include <cstdint>

#include "flowgraph/four_colour.hpp"

namespace flowgraph {

struct GeneratorOptions {
    // Attempts before giving up. Rejection rates rise with n; at n <= 12
    // typical draws need well under 10^4 attempts.
    int max_attempts = 2'000'000;
};

// Rejection sampler for admissible four-colour graphs: random t/u/s
// perfect matchings plus a small random c-edge set with random orderings,
// retried until validation passes. Deterministic for a fixed seed. The
// c-edge count is biased low to keep acceptance rates usable.
FourColourGraph random_admissible(int n_target, std::uint64_t seed,
                                  const GeneratorOptions& opts = {});

} // namespace flowgraph
