#ifndef EDGEMTA_REWARD_ENGINE_HPP
#define EDGEMTA_REWARD_ENGINE_HPP

#include "edgemta/domain.hpp"
#include "edgemta/matrix.hpp"

#include <cstdint>
#include <iosfwd>

namespace edgemta {

// Total time of task j with respect to server i.
//
// Own task (j originates at i): compute time when assigned, otherwise the
// time i spends shipping the data out. Foreign task: compute time at i plus
// the origin's transmission time when assigned, otherwise 0.
double pair_time(const Instance& inst, ServerIndex i, TaskIndex j, bool assigned);

// Per-pair feasibility under the hypothesis that j runs on i:
// cycles(i,j) <= mu_i (single-task capacity) and pair_time(assigned) <= tau_e,j.
bool pair_feasible(const Instance& inst, ServerIndex i, TaskIndex j);

// Reward of choosing server i for task j.
//   own, feasible:       p mu_ij - E_comp
//   own, infeasible:     lambda p mu_ij - E_comm      (may be negative)
//   foreign, feasible:   (1 - lambda) p mu_ij - E_comp
//   foreign, infeasible: 0
double pair_reward(const Instance& inst, ServerIndex i, TaskIndex j);

// n x m tables indexed (server, task). `cycles` and `assigned_time` cache
// the per-pair quantities the solvers need for cumulative capacity and
// deadline checks.
struct RewardTable {
    Matrix<double> values;
    Matrix<std::uint8_t> feasible;
    Matrix<double> cycles;
    Matrix<double> assigned_time;

    std::size_t num_servers() const noexcept { return values.rows(); }
    std::size_t num_tasks() const noexcept { return values.cols(); }
    double value(ServerIndex i, TaskIndex j) const { return values(i, j); }
    bool is_feasible(ServerIndex i, TaskIndex j) const { return feasible(i, j) != 0; }
};

RewardTable build_reward_table(const Instance& inst);

// Sum of table values at the chosen (server, task) pairs; unassigned tasks
// add nothing. This is the quantity the learner collects per episode.
double collected_reward(const RewardTable& table, std::span<const ServerIndex> assignment);

// Debug dump: one row per server, one column per task.
void write_reward_csv(const RewardTable& table, std::ostream& out);

} // namespace edgemta

#endif // EDGEMTA_REWARD_ENGINE_HPP
