#ifndef EDGEMTA_BASELINES_HPP
#define EDGEMTA_BASELINES_HPP

#include "edgemta/domain.hpp"

#include <cstdint>

namespace edgemta::baselines {

// Each task in order goes to a uniformly chosen server that keeps the
// partial assignment feasible (cumulative C1 and C2), or stays unassigned.
Allocation solve_random(const Instance& inst, std::uint64_t seed);

// Each task in order goes to the feasibility-preserving server with the
// largest non-zero reward-table entry (lowest index on ties).
Allocation solve_greedy(const Instance& inst);

struct ExactOptions {
    // Refuse when m * log2(n + 1) exceeds this many bits.
    double max_search_bits = 40.0;
};

// log2 of the raw search space (n + 1)^m.
double search_bits(const Instance& inst);

// Depth-first enumeration over every feasible assignment (unassigned is a
// valid choice for each task) maximizing evaluate(). Branches that break
// cumulative capacity or a deadline are cut, as are branches whose optimistic
// bound cannot beat the incumbent. Ties resolve to the lexicographically
// smallest assignment, with unassigned ordered after every server.
// Throws BudgetExceeded when the instance is over budget.
Allocation solve_exact(const Instance& inst, const ExactOptions& options = {});

} // namespace edgemta::baselines

#endif // EDGEMTA_BASELINES_HPP
