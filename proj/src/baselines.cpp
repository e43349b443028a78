#include "edgemta/baselines.hpp"

#include "edgemta/allocation.hpp"
#include "edgemta/error.hpp"
#include "edgemta/matrix.hpp"
#include "edgemta/reward_engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

namespace edgemta::baselines {

namespace {

bool fits(const Instance& inst, const RewardTable& table, const std::vector<double>& load, ServerIndex i,
          TaskIndex j) {
    return load[i] + table.cycles(i, j) <= inst.server(i).capacity &&
           table.assigned_time(i, j) <= inst.task(j).deadline;
}

class ExactSearch {
public:
    ExactSearch(const Instance& inst, const RewardTable& table)
        : inst_(inst), table_(table), n_(inst.num_servers()), m_(inst.num_tasks()),
          gain_(m_, n_), load_(n_, 0.0), current_(m_, kUnassigned), best_(m_, kUnassigned),
          suffix_bound_(m_ + 1, 0.0) {
        for (TaskIndex j = 0; j < m_; ++j) {
            for (ServerIndex i = 0; i < n_; ++i) {
                gain_(j, i) = task_contribution(inst_, j, i);
            }
        }
        // Optimistic per-task gain: best pair-feasible server, or 0 for leaving it out.
        for (TaskIndex j = m_; j-- > 0;) {
            double top = 0.0;
            for (ServerIndex i = 0; i < n_; ++i) {
                if (fits_alone(i, j)) {
                    top = std::max(top, gain_(j, i));
                }
            }
            suffix_bound_[j] = suffix_bound_[j + 1] + top;
        }
    }

    Assignment run() {
        best_value_ = -std::numeric_limits<double>::infinity();
        descend(0, 0.0);
        return best_;
    }

private:
    bool fits_alone(ServerIndex i, TaskIndex j) const {
        return table_.cycles(i, j) <= inst_.server(i).capacity &&
               table_.assigned_time(i, j) <= inst_.task(j).deadline;
    }

    void descend(TaskIndex j, double partial) {
        if (j == m_) {
            if (partial > best_value_) {
                best_value_ = partial;
                best_ = current_;
            }
            return;
        }
        const double bound = partial + suffix_bound_[j];
        if (bound + 1e-9 * (1.0 + std::abs(best_value_)) < best_value_) {
            return;
        }
        for (ServerIndex i = 0; i < n_; ++i) {
            if (!fits(inst_, table_, load_, i, j)) {
                continue;
            }
            const double before = load_[i];
            load_[i] += table_.cycles(i, j);
            current_[j] = i;
            descend(j + 1, partial + gain_(j, i));
            load_[i] = before;
        }
        current_[j] = kUnassigned;
        descend(j + 1, partial + 0.0);
    }

    const Instance& inst_;
    const RewardTable& table_;
    std::size_t n_;
    std::size_t m_;
    Matrix<double> gain_;
    std::vector<double> load_;
    Assignment current_;
    Assignment best_;
    std::vector<double> suffix_bound_;
    double best_value_ = 0.0;
};

} // namespace

Allocation solve_random(const Instance& inst, std::uint64_t seed) {
    const RewardTable table = build_reward_table(inst);
    std::mt19937_64 rng(seed);
    std::vector<double> load(inst.num_servers(), 0.0);
    Assignment assignment(inst.num_tasks(), kUnassigned);
    std::vector<ServerIndex> candidates;

    for (TaskIndex j = 0; j < inst.num_tasks(); ++j) {
        candidates.clear();
        for (ServerIndex i = 0; i < inst.num_servers(); ++i) {
            if (fits(inst, table, load, i, j)) {
                candidates.push_back(i);
            }
        }
        if (candidates.empty()) {
            continue;
        }
        std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
        const ServerIndex chosen = candidates[pick(rng)];
        load[chosen] += table.cycles(chosen, j);
        assignment[j] = chosen;
    }
    return make_allocation(inst, std::move(assignment));
}

Allocation solve_greedy(const Instance& inst) {
    const RewardTable table = build_reward_table(inst);
    std::vector<double> load(inst.num_servers(), 0.0);
    Assignment assignment(inst.num_tasks(), kUnassigned);

    for (TaskIndex j = 0; j < inst.num_tasks(); ++j) {
        ServerIndex best = kUnassigned;
        for (ServerIndex i = 0; i < inst.num_servers(); ++i) {
            if (table.value(i, j) == 0.0 || !fits(inst, table, load, i, j)) {
                continue;
            }
            if (best == kUnassigned || table.value(i, j) > table.value(best, j)) {
                best = i;
            }
        }
        if (best != kUnassigned) {
            load[best] += table.cycles(best, j);
            assignment[j] = best;
        }
    }
    return make_allocation(inst, std::move(assignment));
}

double search_bits(const Instance& inst) {
    return static_cast<double>(inst.num_tasks()) * std::log2(static_cast<double>(inst.num_servers()) + 1.0);
}

Allocation solve_exact(const Instance& inst, const ExactOptions& options) {
    const double bits = search_bits(inst);
    if (bits > options.max_search_bits) {
        std::ostringstream msg;
        msg << "exact search refused: (n+1)^m = " << inst.num_servers() + 1 << "^" << inst.num_tasks()
            << " ~ 2^" << bits << " exceeds the enumeration budget of 2^" << options.max_search_bits;
        throw BudgetExceeded(msg.str());
    }
    const RewardTable table = build_reward_table(inst);
    ExactSearch search(inst, table);
    return make_allocation(inst, search.run());
}

} // namespace edgemta::baselines
