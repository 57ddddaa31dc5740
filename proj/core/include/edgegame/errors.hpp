#pragma once

#include <stdexcept>

namespace edgegame {

// Input outside an operation's domain: negative rates, bad dimensions,
// non-positive deadlines, malformed probability vectors.
struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Offered load reaches or exceeds a service rate; the queue grows without
// bound and the expected response time is infinite.
struct UnstableQueue : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The admissible capacity of a node set cannot absorb an arrival rate.
struct InfeasibleAllocation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An iterative solver exhausted its iteration budget.
struct NoConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A user inspected a computing node she cannot see.
struct VisibilityViolation : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace edgegame
