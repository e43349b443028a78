#include "edgemta/solvers.hpp"

#include "edgemta/error.hpp"
#include "edgemta/reward_engine.hpp"

namespace edgemta {

std::string to_string(SolverKind kind) {
    switch (kind) {
    case SolverKind::kQLearning: return "qlearning";
    case SolverKind::kGreedy: return "greedy";
    case SolverKind::kRandom: return "random";
    case SolverKind::kExact: return "exact";
    }
    return "?";
}

SolverKind parse_solver(std::string_view name) {
    if (name == "qlearning" || name == "learning") return SolverKind::kQLearning;
    if (name == "greedy") return SolverKind::kGreedy;
    if (name == "random") return SolverKind::kRandom;
    if (name == "exact") return SolverKind::kExact;
    throw ValidationError("unknown solver '" + std::string(name) + "' (expected qlearning|greedy|random|exact)");
}

SolverOutcome run_solver(const Instance& inst, const SolverConfig& cfg) {
    SolverOutcome out;
    switch (cfg.kind) {
    case SolverKind::kQLearning: {
        auto result = learning::solve(inst, cfg.learn);
        out.allocation = result.best_assignment;
        out.total_reward = result.best_reward;
        out.learning = std::move(result);
        return out;
    }
    case SolverKind::kGreedy:
        out.allocation = baselines::solve_greedy(inst);
        break;
    case SolverKind::kRandom:
        out.allocation = baselines::solve_random(inst, cfg.learn.seed);
        break;
    case SolverKind::kExact:
        out.allocation = baselines::solve_exact(inst, cfg.exact);
        break;
    }
    out.total_reward = collected_reward(build_reward_table(inst), out.allocation.assignment);
    return out;
}

} // namespace edgemta
