#ifndef EDGEMTA_QLEARNING_HPP
#define EDGEMTA_QLEARNING_HPP

#include "edgemta/domain.hpp"
#include "edgemta/matrix.hpp"
#include "edgemta/reward_engine.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <vector>

namespace edgemta::learning {

using Rng = std::mt19937_64;

// State = task (rows), action = server (columns). Starts at zero.
struct QTable {
    Matrix<double> q;

    QTable(std::size_t num_tasks, std::size_t num_servers) : q(num_tasks, num_servers, 0.0) {}

    double operator()(TaskIndex j, ServerIndex i) const { return q(j, i); }
    double& operator()(TaskIndex j, ServerIndex i) { return q(j, i); }
};

// How the residual compute time tau_ava = (mu_i - acc_i - mu_ij) / f_i is
// screened once the candidate task is committed.
enum class ResidualScreen {
    kNonNegative,     // tau_ava >= 0: the server still has time budget left
    kCoversDeadline,  // tau_ava >= tau_e,j: leftover budget spans the task deadline
};

struct LearnConfig {
    std::size_t episodes = 500;
    double learning_rate = 0.01;
    double discount = 0.9;
    double epsilon = 0.9;   // probability of exploiting the Q-table
    std::uint64_t seed = 42;
    ResidualScreen screen = ResidualScreen::kNonNegative;

    // Throws ValidationError when a field is out of range.
    void validate() const;
};

// Per-episode scratch: cumulative cycles committed to each server, the
// partial assignment, and the reward collected so far.
struct EpisodeState {
    std::vector<double> acc_cycles;
    Assignment assignment;
    double episode_reward = 0.0;

    EpisodeState(std::size_t num_servers, std::size_t num_tasks)
        : acc_cycles(num_servers, 0.0), assignment(num_tasks, kUnassigned) {}
};

struct SolveResult {
    Allocation best_assignment;
    double best_reward = 0.0;
    std::vector<double> reward_trajectory;
    std::vector<double> best_so_far_trajectory;
    QTable q{0, 0};
};

// Servers whose table entry for task j is non-zero, ascending. Negative
// entries pass.
std::vector<ServerIndex> nonzero_actions(const RewardTable& table, TaskIndex j);

// Non-zero actions that can still take task j given the episode's
// commitments: cumulative capacity, the residual-time screen, and the pair
// deadline check (which includes the origin's transmission time).
std::vector<ServerIndex> available_actions(TaskIndex j, const EpisodeState& episode, const RewardTable& table,
                                           const Instance& inst,
                                           ResidualScreen screen = ResidualScreen::kNonNegative);

// Epsilon-greedy over `avail`: with probability epsilon take the highest
// Q(j, .) (lowest index on ties), otherwise a uniform member. Returns
// nullopt without consuming randomness when `avail` is empty.
std::optional<ServerIndex> select_action(TaskIndex j, std::span<const ServerIndex> avail, const QTable& q,
                                         double epsilon, Rng& rng);

// Q(j,i) += alpha [reward + gamma max_{a in next_avail} Q(j+1, a) - Q(j,i)].
// The max over an empty next_avail (terminal state) is 0.
void q_update(QTable& q, TaskIndex j, ServerIndex i, double reward, std::span<const ServerIndex> next_avail,
              double alpha, double gamma);

// Called after every learning step (and after skipped states).
using StepObserver =
    std::function<void(std::size_t episode, TaskIndex state, const EpisodeState& episode_state, const QTable& q)>;

// Runs cfg.episodes passes over the tasks in order and returns the episode
// with the highest collected reward (first one on ties).
SolveResult solve(const Instance& inst, const LearnConfig& cfg, const StepObserver& observer = {});

} // namespace edgemta::learning

#endif // EDGEMTA_QLEARNING_HPP
