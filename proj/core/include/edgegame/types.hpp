#pragma once

#include <cstddef>
#include <vector>

#include "edgegame/errors.hpp"

namespace edgegame {

// Absolute tolerance on the probability-sum of a strategy vector.
inline constexpr double kSimplexTolerance = 1e-9;

enum class NodeKind { edge, local };

// A computing node: a shared edge cloud node, or one user's own terminal.
// `rate` is the mean processing rate in tasks/s.
struct ComputingNode {
    int id = 0;
    NodeKind kind = NodeKind::edge;
    int owner = -1;  // owning user for local nodes, -1 for edge nodes
    double rate = 0.0;

    static ComputingNode edge_node(int id, double rate);
    static ComputingNode local_node(int id, int owner, double rate);
};

// Per-user parameters of the offloading problem. `delays` holds the mean
// transmit delay to each of the user's computing nodes: the m edge nodes in
// order, then her own terminal as the last slot (which must be 0).
struct UserProfile {
    int id = 0;
    double arrival_rate = 0.0;   // tasks/s
    double local_rate = 0.0;     // tasks/s
    double deadline = 0.0;       // seconds
    std::vector<double> delays;  // seconds

    void validate() const;  // throws InvalidInput
};

// Probability split of one user's task stream over her computing nodes.
// The constructor rejects negative entries and sums off by more than
// kSimplexTolerance, then renormalizes exactly once.
class Strategy {
  public:
    explicit Strategy(std::vector<double> probs);

    const std::vector<double>& probs() const noexcept { return probs_; }
    double operator[](std::size_t j) const { return probs_[j]; }
    std::size_t size() const noexcept { return probs_.size(); }

  private:
    std::vector<double> probs_;
};

}  // namespace edgegame
