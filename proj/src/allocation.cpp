#include "edgemta/allocation.hpp"

#include "edgemta/cost_model.hpp"
#include "edgemta/reward_engine.hpp"

namespace edgemta {

std::string to_string(Constraint c) {
    switch (c) {
    case Constraint::C1: return "C1";
    case Constraint::C2: return "C2";
    case Constraint::C3: return "C3";
    }
    return "?";
}

FeasibilityReport check_feasible(const Instance& inst, std::span<const ServerIndex> assignment) {
    validate_assignment(inst, assignment);

    FeasibilityReport report;
    std::vector<double> load(inst.num_servers(), 0.0);
    for (TaskIndex j = 0; j < assignment.size(); ++j) {
        const ServerIndex k = assignment[j];
        if (k == kUnassigned) {
            continue;
        }
        load[k] += cost::cycles_required(inst.server(k), inst.task(j));
        const double t = pair_time(inst, k, j, /*assigned=*/true);
        if (t > inst.task(j).deadline) {
            report.violations.push_back({Constraint::C2, k, j, t, inst.task(j).deadline});
        }
    }
    for (ServerIndex i = 0; i < load.size(); ++i) {
        if (load[i] > inst.server(i).capacity) {
            report.violations.push_back({Constraint::C1, i, 0, load[i], inst.server(i).capacity});
        }
    }
    report.ok = report.violations.empty();
    return report;
}

double task_contribution(const Instance& inst, TaskIndex j, ServerIndex assignee) {
    if (assignee == kUnassigned) {
        return 0.0;
    }
    const TaskSpec& task = inst.task(j);
    const ServerSpec& origin = inst.server(task.origin_server);
    const double p = task.unit_price;

    if (assignee == task.origin_server) {
        return p * cost::cycles_required(origin, task) - cost::compute_energy(origin, task);
    }
    const ServerSpec& worker = inst.server(assignee);
    const double lambda = inst.intermediary_rate();
    const double origin_term =
        lambda * p * cost::cycles_required(origin, task) - cost::comm_energy(origin, task, inst.noise());
    const double worker_term =
        (1.0 - lambda) * p * cost::cycles_required(worker, task) - cost::compute_energy(worker, task);
    return origin_term + worker_term;
}

double evaluate(const Instance& inst, std::span<const ServerIndex> assignment) {
    validate_assignment(inst, assignment);
    double total = 0.0;
    for (TaskIndex j = 0; j < assignment.size(); ++j) {
        total += task_contribution(inst, j, assignment[j]);
    }
    return total;
}

Allocation make_allocation(const Instance& inst, Assignment assignment) {
    const double value = evaluate(inst, assignment);
    return Allocation{std::move(assignment), value};
}

} // namespace edgemta
