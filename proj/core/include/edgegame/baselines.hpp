#pragma once

#include <span>
#include <vector>

#include "edgegame/capacity.hpp"
#include "edgegame/types.hpp"

namespace edgegame {

// Proportional split: probability of each node proportional to its
// deadline-screened admissible rate.
Strategy ps_strategy(const InitialRates& initial);

// Centralized benchmark with transmit delays ignored: splits the aggregate
// arrival over the edge nodes to minimize the system mean response time.
// Active nodes satisfy (mu_j - x_j)/sqrt(mu_j) = const; nodes whose share
// would go negative are dropped smallest-rate first and the rule reapplied.
std::vector<double> gos_allocation(std::span<const double> ecn_rates,
                                   double total_arrival);

// System mean response time (1/total) * sum_j x_j/(mu_j - x_j) of an
// allocation; 0 when total_arrival is 0.
double gos_mean_response_time(std::span<const double> allocation,
                              std::span<const double> ecn_rates,
                              double total_arrival);

}  // namespace edgegame
