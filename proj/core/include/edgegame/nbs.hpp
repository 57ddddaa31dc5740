#pragma once

#include <span>
#include <vector>

#include "edgegame/capacity.hpp"
#include "edgegame/types.hpp"

namespace edgegame {

// Number of nodes that receive positive mass under the water-filling rule:
// the largest k with sorted_rates[k-1] > (sum of the k largest - arrival)/k,
// searched from the full set downward. `sorted_rates` must be descending.
// Throws InfeasibleAllocation when the rates cannot absorb the arrival rate.
int find_k(std::span<const double> sorted_rates, double arrival_rate);

// Water-filling assignment over precomputed admissible rates: selected nodes
// end up with a common residual rate (the water level), excluded nodes get
// exactly zero. Returns probabilities in the input's node order.
std::vector<double> waterfill_allocation(std::span<const double> admissible_rates,
                                         double arrival_rate);

// One user's optimal task split: screen each node's free rate through the
// deadline, then water-fill the arrival stream over the screened rates.
Strategy otom(std::span<const double> free_rates,
              std::span<const double> delays,
              double deadline,
              double arrival_rate);

// Independent check of the allocation: minimizes
//   -sum_j ln(mu0_j - p_j*arrival)
// over the simplex by bisecting the Lagrange multiplier of the coupling
// constraint. Never touches the closed form above. Throws NoConvergence if
// the bisection cannot reach |sum p - 1| < tol within 200 iterations.
Strategy solve_p2_oracle(const InitialRates& initial,
                         double arrival_rate,
                         double tol);

// Objective the oracle minimizes; +infinity outside the feasible region.
// Nodes with a zero admissible rate must carry zero probability.
double p2_objective(std::span<const double> initial_rates,
                    std::span<const double> probs,
                    double arrival_rate);

}  // namespace edgegame
