#include "edgemta/qlearning.hpp"

#include "edgemta/allocation.hpp"
#include "edgemta/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace edgemta::learning {

namespace {

void require_unit_interval(double v, const char* name) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw ValidationError(std::string(name) + " must lie in [0, 1] (got " + std::to_string(v) + ")");
    }
}

bool residual_ok(const Instance& inst, const RewardTable& table, const EpisodeState& episode, ServerIndex i,
                 TaskIndex j, ResidualScreen screen) {
    const ServerSpec& server = inst.server(i);
    const double committed = episode.acc_cycles[i] + table.cycles(i, j);
    if (committed > server.capacity) {
        return false;
    }
    const double residual_time = (server.capacity - committed) / server.cpu_frequency;
    switch (screen) {
    case ResidualScreen::kNonNegative:
        return residual_time >= 0.0;
    case ResidualScreen::kCoversDeadline:
        return residual_time >= inst.task(j).deadline;
    }
    return false;
}

void fill_available(std::vector<ServerIndex>& out, TaskIndex j, const EpisodeState& episode,
                    const RewardTable& table, const Instance& inst, ResidualScreen screen) {
    out.clear();
    const double deadline = inst.task(j).deadline;
    for (ServerIndex i = 0; i < table.num_servers(); ++i) {
        if (table.value(i, j) == 0.0) {
            continue;
        }
        if (!residual_ok(inst, table, episode, i, j, screen)) {
            continue;
        }
        if (table.assigned_time(i, j) > deadline) {
            continue;
        }
        out.push_back(i);
    }
}

} // namespace

void LearnConfig::validate() const {
    if (episodes < 1) {
        throw ValidationError("episodes must be >= 1");
    }
    require_unit_interval(learning_rate, "learning_rate");
    require_unit_interval(discount, "discount");
    require_unit_interval(epsilon, "epsilon");
}

std::vector<ServerIndex> nonzero_actions(const RewardTable& table, TaskIndex j) {
    std::vector<ServerIndex> out;
    for (ServerIndex i = 0; i < table.num_servers(); ++i) {
        if (table.value(i, j) != 0.0) {
            out.push_back(i);
        }
    }
    return out;
}

std::vector<ServerIndex> available_actions(TaskIndex j, const EpisodeState& episode, const RewardTable& table,
                                           const Instance& inst, ResidualScreen screen) {
    std::vector<ServerIndex> out;
    fill_available(out, j, episode, table, inst, screen);
    return out;
}

std::optional<ServerIndex> select_action(TaskIndex j, std::span<const ServerIndex> avail, const QTable& q,
                                         double epsilon, Rng& rng) {
    if (avail.empty()) {
        return std::nullopt;
    }
    const double x = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    if (x < epsilon) {
        ServerIndex best = avail.front();
        for (ServerIndex i : avail.subspan(1)) {
            // strict > keeps the lowest index on ties (avail is ascending)
            if (q(j, i) > q(j, best)) {
                best = i;
            }
        }
        return best;
    }
    std::uniform_int_distribution<std::size_t> pick(0, avail.size() - 1);
    return avail[pick(rng)];
}

void q_update(QTable& q, TaskIndex j, ServerIndex i, double reward, std::span<const ServerIndex> next_avail,
              double alpha, double gamma) {
    double next_best = 0.0;
    if (!next_avail.empty()) {
        next_best = -std::numeric_limits<double>::infinity();
        for (ServerIndex a : next_avail) {
            next_best = std::max(next_best, q(j + 1, a));
        }
    }
    double& cell = q(j, i);
    cell += alpha * (reward + gamma * next_best - cell);
}

SolveResult solve(const Instance& inst, const LearnConfig& cfg, const StepObserver& observer) {
    cfg.validate();

    const std::size_t n = inst.num_servers();
    const std::size_t m = inst.num_tasks();
    const RewardTable table = build_reward_table(inst);

    Rng rng(cfg.seed);
    QTable q(m, n);
    SolveResult result;
    result.reward_trajectory.reserve(cfg.episodes);
    result.best_so_far_trajectory.reserve(cfg.episodes);

    Assignment best_assignment(m, kUnassigned);
    double best_reward = -std::numeric_limits<double>::infinity();
    std::vector<ServerIndex> avail;
    std::vector<ServerIndex> next_avail;

    for (std::size_t k = 0; k < cfg.episodes; ++k) {
        EpisodeState episode(n, m);
        fill_available(avail, 0, episode, table, inst, cfg.screen);

        for (TaskIndex j = 0; j < m; ++j) {
            const auto action = select_action(j, avail, q, cfg.epsilon, rng);
            if (action) {
                const ServerIndex i = *action;
                episode.acc_cycles[i] += table.cycles(i, j);
                episode.assignment[j] = i;
                episode.episode_reward += table.value(i, j);
            }

            if (j + 1 < m) {
                fill_available(next_avail, j + 1, episode, table, inst, cfg.screen);
            } else {
                next_avail.clear();
            }
            if (action) {
                q_update(q, j, *action, table.value(*action, j), next_avail, cfg.learning_rate, cfg.discount);
            }
            if (observer) {
                observer(k, j, episode, q);
            }
            avail.swap(next_avail);
        }

        result.reward_trajectory.push_back(episode.episode_reward);
        if (episode.episode_reward > best_reward) {
            best_reward = episode.episode_reward;
            best_assignment = episode.assignment;
        }
        result.best_so_far_trajectory.push_back(best_reward);
    }

    result.best_reward = best_reward;
    result.best_assignment = make_allocation(inst, std::move(best_assignment));
    result.q = std::move(q);
    return result;
}

} // namespace edgemta::learning
