#include "fixtures.hpp"

#include "edgemta/allocation.hpp"
#include "edgemta/baselines.hpp"
#include "edgemta/error.hpp"
#include "edgemta/generator.hpp"
#include "edgemta/reward_engine.hpp"
#include "edgemta/solvers.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <string>

namespace edgemta::baselines {
namespace {

using edgemta::testing::make;
using edgemta::testing::ref_server;
using edgemta::testing::ref_task;

// Task 0 comes from server 0, which cannot hold it; servers 1 (f 1) and 2
// (f 5) can, with entries 0.4499 and 0.4475.
Instance argmax_instance(double capacity1 = 100.0) {
    return make({ref_server(2.0, 0.05), ref_server(1.0, capacity1), ref_server(5.0)},
                {ref_task(0), ref_task(0), ref_task(2)});
}

TEST(Greedy, PicksLargestEntry) {
    const Instance inst = argmax_instance();
    const RewardTable t = build_reward_table(inst);
    ASSERT_LT(t.value(0, 0), 0.0);
    ASSERT_GT(t.value(1, 0), t.value(2, 0));
    EXPECT_EQ(solve_greedy(inst).assignment[0], 1u);
}

TEST(Greedy, FallsBackWhenArgmaxSaturated) {
    // server 1 holds 0.15 cycles: room for one task only
    const Allocation a = solve_greedy(argmax_instance(0.15));
    EXPECT_EQ(a.assignment, (Assignment{1, 2, 2}));
}

TEST(Greedy, NoCandidateLeavesUnassigned) {
    const Instance late = make({ref_server()}, {ref_task(0, 0.01)});
    const Allocation a = solve_greedy(late);
    EXPECT_EQ(a.assignment, (Assignment{kUnassigned}));
    EXPECT_EQ(a.total_utility, 0.0);
}

TEST(Random, ForcedAndEmptyChoices) {
    EXPECT_EQ(solve_random(edgemta::testing::single_pair(), 9).assignment, (Assignment{0}));
    EXPECT_EQ(solve_random(make({ref_server()}, {ref_task(0, 0.01)}), 9).assignment, (Assignment{kUnassigned}));
}

TEST(Random, DeterministicPerSeed) {
    const Instance inst = generate_instance(GeneratorParams::compact(), 5);
    EXPECT_EQ(solve_random(inst, 17), solve_random(inst, 17));
    bool differs = false;
    const Instance big = generate_instance(GeneratorParams::baseline(), 5);
    for (std::uint64_t s = 1; s < 5 && !differs; ++s) {
        differs = solve_random(big, 0).assignment != solve_random(big, s).assignment;
    }
    EXPECT_TRUE(differs);
}

TEST(Exact, SinglePair) {
    const Allocation a = solve_exact(edgemta::testing::single_pair());
    EXPECT_EQ(a.assignment, (Assignment{0}));
    EXPECT_NEAR(a.total_utility, 0.496, 1e-9);
}

TEST(Exact, LossesEverywhereMeansNothingAssigned) {
    ServerSpec hot = ref_server();
    hot.cpu_arch_coeff = 100.0;  // E_comp = 40 per task
    const Instance inst = make({hot, hot}, {ref_task(0), ref_task(1), ref_task(0)});
    const Allocation a = solve_exact(inst);
    EXPECT_EQ(a.assignment, Assignment(3, kUnassigned));
    EXPECT_EQ(a.total_utility, 0.0);
}

TEST(Exact, RefusesOverBudget) {
    const Instance inst = generate_instance(GeneratorParams::baseline(), 1);
    EXPECT_GT(search_bits(inst), 40.0);
    try {
        solve_exact(inst);
        FAIL() << "expected BudgetExceeded";
    } catch (const BudgetExceeded& e) {
        EXPECT_NE(std::string(e.what()).find("2^40"), std::string::npos) << e.what();
    }
    ExactOptions tiny;
    tiny.max_search_bits = 5.0;
    EXPECT_THROW(solve_exact(generate_instance(GeneratorParams::compact(), 1), tiny), BudgetExceeded);
}

// Plain enumeration of all (n+1)^m assignments; the first maximum in
// lexicographic order (unassigned last) wins.
Allocation brute_force(const Instance& inst) {
    const std::size_t n = inst.num_servers();
    const std::size_t m = inst.num_tasks();
    std::vector<std::size_t> digits(m, 0);
    Assignment best;
    double best_value = -INFINITY;
    while (true) {
        Assignment a(m);
        for (std::size_t j = 0; j < m; ++j) a[j] = digits[j] == n ? kUnassigned : digits[j];
        if (check_feasible(inst, a).ok) {
            const double v = evaluate(inst, a);
            if (v > best_value) {
                best_value = v;
                best = a;
            }
        }
        std::size_t j = m;
        while (j > 0 && digits[j - 1] == n) digits[--j] = 0;
        if (j == 0) break;
        ++digits[j - 1];
    }
    return Allocation{best, best_value};
}

class ExactProperties : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(ExactProperties, MatchesEnumerationAndDominates) {
    const Instance inst = generate_instance(GeneratorParams::compact(3, 6), GetParam());
    const Allocation exact = solve_exact(inst);
    const Allocation reference = brute_force(inst);
    EXPECT_NEAR(exact.total_utility, reference.total_utility, 1e-12);
    EXPECT_EQ(exact.assignment, reference.assignment);
    EXPECT_TRUE(check_feasible(inst, exact.assignment).ok);

    const Allocation greedy = solve_greedy(inst);
    const Allocation random = solve_random(inst, GetParam());
    EXPECT_TRUE(check_feasible(inst, greedy.assignment).ok);
    EXPECT_TRUE(check_feasible(inst, random.assignment).ok);
    EXPECT_GE(exact.total_utility + 1e-12, greedy.total_utility);
    EXPECT_GE(exact.total_utility + 1e-12, random.total_utility);

    SolverConfig cfg;
    cfg.learn.episodes = 200;
    cfg.learn.seed = GetParam();
    const SolverOutcome learned = run_solver(inst, cfg);
    EXPECT_TRUE(check_feasible(inst, learned.allocation.assignment).ok);
    EXPECT_GE(exact.total_utility + 1e-12, learned.allocation.total_utility);
}

INSTANTIATE_TEST_SUITE_P(Seeds, ExactProperties, ::testing::Range<std::uint64_t>(0, 30));

TEST(Baselines, FeasibleOnBaselineInstances) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const Instance inst = generate_instance(GeneratorParams::baseline(), seed);
        EXPECT_TRUE(check_feasible(inst, solve_greedy(inst).assignment).ok);
        EXPECT_TRUE(check_feasible(inst, solve_random(inst, seed).assignment).ok);
        EXPECT_EQ(solve_greedy(inst), solve_greedy(inst));
    }
}

TEST(Solvers, ParseNames) {
    EXPECT_EQ(parse_solver("qlearning"), SolverKind::kQLearning);
    EXPECT_EQ(parse_solver("learning"), SolverKind::kQLearning);
    EXPECT_EQ(parse_solver("greedy"), SolverKind::kGreedy);
    EXPECT_EQ(parse_solver("random"), SolverKind::kRandom);
    EXPECT_EQ(parse_solver("exact"), SolverKind::kExact);
    EXPECT_THROW(parse_solver("annealing"), ValidationError);
    for (auto k : {SolverKind::kQLearning, SolverKind::kGreedy, SolverKind::kRandom, SolverKind::kExact}) {
        EXPECT_EQ(parse_solver(to_string(k)), k);
    }
}

TEST(Solvers, TotalRewardIsTableSum) {
    const Instance inst = generate_instance(GeneratorParams::baseline(), 3);
    const RewardTable t = build_reward_table(inst);
    for (auto k : {SolverKind::kQLearning, SolverKind::kGreedy, SolverKind::kRandom}) {
        SolverConfig cfg;
        cfg.kind = k;
        cfg.learn.episodes = 20;
        const SolverOutcome o = run_solver(inst, cfg);
        EXPECT_NEAR(o.total_reward, collected_reward(t, o.allocation.assignment), 1e-9) << to_string(k);
        EXPECT_EQ(o.learning.has_value(), k == SolverKind::kQLearning);
        if (o.learning) EXPECT_EQ(o.total_reward, o.learning->best_reward);
    }
}

} // namespace
} // namespace edgemta::baselines
