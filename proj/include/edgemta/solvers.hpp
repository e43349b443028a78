#ifndef EDGEMTA_SOLVERS_HPP
#define EDGEMTA_SOLVERS_HPP

#include "edgemta/baselines.hpp"
#include "edgemta/domain.hpp"
#include "edgemta/qlearning.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace edgemta {

enum class SolverKind { kQLearning, kGreedy, kRandom, kExact };

std::string to_string(SolverKind kind);
// Accepts "qlearning" (or "learning"), "greedy", "random", "exact".
// Throws ValidationError otherwise.
SolverKind parse_solver(std::string_view name);

struct SolverConfig {
    SolverKind kind = SolverKind::kQLearning;
    learning::LearnConfig learn;          // learn.seed also seeds the random baseline
    baselines::ExactOptions exact;
};

struct SolverOutcome {
    Allocation allocation;
    // Reward-table sum over the chosen pairs. For the learner this equals
    // its best episode reward.
    double total_reward = 0.0;
    std::optional<learning::SolveResult> learning;
};

SolverOutcome run_solver(const Instance& inst, const SolverConfig& cfg);

} // namespace edgemta

#endif // EDGEMTA_SOLVERS_HPP
