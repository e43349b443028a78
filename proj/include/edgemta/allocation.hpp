#ifndef EDGEMTA_ALLOCATION_HPP
#define EDGEMTA_ALLOCATION_HPP

#include "edgemta/domain.hpp"

#include <span>
#include <string>
#include <vector>

namespace edgemta {

enum class Constraint { C1, C2, C3 };

std::string to_string(Constraint c);

struct Violation {
    Constraint constraint;
    ServerIndex server = kUnassigned;
    TaskIndex task = 0;        // meaningful for C2 only
    double measured = 0.0;
    double bound = 0.0;
};

struct FeasibilityReport {
    bool ok = true;
    std::vector<Violation> violations;
};

// C1: per server, the cycles of its assigned tasks sum (in task order) to
// at most mu_i. C2: every assigned task finishes by its deadline, including
// the origin's transmission time for foreign tasks. C3 holds by
// construction since an Assignment has exactly one entry per task.
// Throws ValidationError on malformed assignments.
FeasibilityReport check_feasible(const Instance& inst, std::span<const ServerIndex> assignment);

// Utility generated by task j when it runs on `assignee`. For own tasks
// this is p mu - E_comp. For foreign tasks it is the origin's intermediary
// term (lambda p mu_origin - E_comm_origin) plus the assignee's
// (1 - lambda) p mu_assignee - E_comp_assignee. Unassigned tasks yield 0.
double task_contribution(const Instance& inst, TaskIndex j, ServerIndex assignee);

// Objective value: sum of task_contribution in task order. Feasibility is
// not required. Throws ValidationError on malformed assignments.
double evaluate(const Instance& inst, std::span<const ServerIndex> assignment);

Allocation make_allocation(const Instance& inst, Assignment assignment);

} // namespace edgemta

#endif // EDGEMTA_ALLOCATION_HPP
