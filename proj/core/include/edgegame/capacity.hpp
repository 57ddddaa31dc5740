#pragma once

#include <span>
#include <vector>

#include "edgegame/types.hpp"

namespace edgegame {

// Deadline-screened admissible rates of one user, index-aligned with her
// computing-node slots. Zero entries mark nodes the screen excluded; they
// stay in place so strategies keep a fixed dimension.
struct InitialRates {
    int owner = -1;
    std::vector<double> rates;  // tasks/s

    double total() const;
};

// Largest dispatch rate x such that 1/(free_rate - x) + x*delay stays within
// the deadline. Returns 0 when even an empty node misses the deadline
// (free_rate * deadline <= 1) or the node has no capacity. The result always
// satisfies 0 <= x < free_rate.
double max_admissible_rate(double free_rate, double delay, double deadline);

// Element-wise deadline screen over the user's observed free rates.
InitialRates initial_rates(const UserProfile& user,
                           std::span<const double> observed_free_rates);

}  // namespace edgegame
