#include "edgemta/reward_engine.hpp"

#include "edgemta/cost_model.hpp"

#include <iomanip>
#include <ostream>

namespace edgemta {

double pair_time(const Instance& inst, ServerIndex i, TaskIndex j, bool assigned) {
    const ServerSpec& server = inst.server(i);
    const TaskSpec& task = inst.task(j);
    const ServerIndex origin = task.origin_server;
    if (origin == i) {
        return assigned ? cost::compute_time(server, task) : cost::comm_time(server, task, inst.noise());
    }
    if (!assigned) {
        return 0.0;
    }
    return cost::compute_time(server, task) + cost::comm_time(inst.server(origin), task, inst.noise());
}

bool pair_feasible(const Instance& inst, ServerIndex i, TaskIndex j) {
    const ServerSpec& server = inst.server(i);
    const TaskSpec& task = inst.task(j);
    return cost::cycles_required(server, task) <= server.capacity &&
           pair_time(inst, i, j, /*assigned=*/true) <= task.deadline;
}

double pair_reward(const Instance& inst, ServerIndex i, TaskIndex j) {
    const ServerSpec& server = inst.server(i);
    const TaskSpec& task = inst.task(j);
    const double lambda = inst.intermediary_rate();
    const double payment = task.unit_price * cost::cycles_required(server, task);
    const bool feasible = pair_feasible(inst, i, j);

    if (task.origin_server == i) {
        return feasible ? payment - cost::compute_energy(server, task)
                        : lambda * payment - cost::comm_energy(server, task, inst.noise());
    }
    return feasible ? (1.0 - lambda) * payment - cost::compute_energy(server, task) : 0.0;
}

RewardTable build_reward_table(const Instance& inst) {
    const std::size_t n = inst.num_servers();
    const std::size_t m = inst.num_tasks();
    RewardTable table{Matrix<double>(n, m), Matrix<std::uint8_t>(n, m), Matrix<double>(n, m),
                      Matrix<double>(n, m)};
    for (ServerIndex i = 0; i < n; ++i) {
        for (TaskIndex j = 0; j < m; ++j) {
            table.values(i, j) = pair_reward(inst, i, j);
            table.feasible(i, j) = pair_feasible(inst, i, j) ? 1 : 0;
            table.cycles(i, j) = cost::cycles_required(inst.server(i), inst.task(j));
            table.assigned_time(i, j) = pair_time(inst, i, j, true);
        }
    }
    return table;
}

double collected_reward(const RewardTable& table, std::span<const ServerIndex> assignment) {
    double total = 0.0;
    for (TaskIndex j = 0; j < assignment.size(); ++j) {
        if (assignment[j] != kUnassigned) {
            total += table.value(assignment[j], j);
        }
    }
    return total;
}

void write_reward_csv(const RewardTable& table, std::ostream& out) {
    out << "server";
    for (TaskIndex j = 0; j < table.num_tasks(); ++j) {
        out << ",t" << j;
    }
    out << '\n' << std::setprecision(17);
    for (ServerIndex i = 0; i < table.num_servers(); ++i) {
        out << i;
        for (double v : table.values.row(i)) {
            out << ',' << v;
        }
        out << '\n';
    }
}

} // namespace edgemta
