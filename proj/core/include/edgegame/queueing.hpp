#pragma once

#include <span>
#include <vector>

#include "edgegame/types.hpp"

namespace edgegame {

// Mean response time 1/(rate - load) of an M/M/1 queue. Requires strict
// stability load < rate; throws UnstableQueue otherwise.
double mm1_response_time(double rate, double load);

// Expected response time of a user splitting her stream `probs` over nodes
// with available rates `avail_rates` and transmit delays `delays`:
//   sum_j p_j * ( 1/(mu_j - p_j*lambda) + p_j*lambda*L_j )
// Terms with probs[j] == 0 contribute nothing. `probs` need not lie on the
// simplex: derivative probes evaluate off-simplex points.
double user_expected_response_time(std::span<const double> probs,
                                   std::span<const double> avail_rates,
                                   std::span<const double> delays,
                                   double arrival_rate);
double user_expected_response_time(const Strategy& strategy,
                                   std::span<const double> avail_rates,
                                   std::span<const double> delays,
                                   double arrival_rate);

// Partial derivatives of the expected response time, component j:
//   mu_j/(mu_j - p_j*lambda)^2 + 2*p_j*lambda*L_j
std::vector<double> utility_gradient(std::span<const double> probs,
                                     std::span<const double> avail_rates,
                                     std::span<const double> delays,
                                     double arrival_rate);
std::vector<double> utility_gradient(const Strategy& strategy,
                                     std::span<const double> avail_rates,
                                     std::span<const double> delays,
                                     double arrival_rate);

// Diagonal of the Hessian, component j:
//   2*mu_j*lambda/(mu_j - p_j*lambda)^3 + 2*lambda*L_j
// All entries are strictly positive on feasible points with lambda > 0,
// which is the convexity witness the solver relies on.
std::vector<double> utility_hessian_diag(std::span<const double> probs,
                                         std::span<const double> avail_rates,
                                         std::span<const double> delays,
                                         double arrival_rate);
std::vector<double> utility_hessian_diag(const Strategy& strategy,
                                         std::span<const double> avail_rates,
                                         std::span<const double> delays,
                                         double arrival_rate);

}  // namespace edgegame
