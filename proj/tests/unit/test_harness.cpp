#include "edgemta/config.hpp"
#include "edgemta/error.hpp"
#include "edgemta/generator.hpp"
#include "edgemta/sweep.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <sstream>

namespace edgemta {
namespace {

bool within(double v, Range r) { return v >= r.lo && v <= r.hi; }

TEST(Generator, BaselineDefaultsInRange) {
    const GeneratorParams p = GeneratorParams::baseline();
    const Instance inst = generate_instance(p, 42);
    ASSERT_EQ(inst.num_servers(), 20u);
    ASSERT_EQ(inst.num_tasks(), 50u);
    EXPECT_EQ(inst.intermediary_rate(), 0.1);
    EXPECT_EQ(inst.noise(), 0.01);
    for (const auto& s : inst.servers()) {
        EXPECT_TRUE(within(s.cpu_frequency, {1, 10}));
        EXPECT_TRUE(within(s.capacity, {200, 400}));
        EXPECT_TRUE(within(s.bandwidth, {5, 10}));
        EXPECT_TRUE(within(s.tx_power, {5, 10}));
        EXPECT_TRUE(within(s.channel_gain, {5, 10}));
        EXPECT_EQ(s.cycles_per_sample, 0.01);
        EXPECT_EQ(s.cpu_arch_coeff, 0.01);
    }
    for (const auto& t : inst.tasks()) {
        EXPECT_TRUE(within(t.unit_price, {1, 10}));
        EXPECT_TRUE(within(t.data_size, {10, 20}));
        EXPECT_TRUE(within(t.deadline, {1, 100}));
        EXPECT_LT(t.origin_server, 20u);
    }
}

TEST(Generator, OriginsCoverServers) {
    GeneratorParams p = GeneratorParams::baseline();
    p.num_servers = 4;
    p.num_tasks = 400;
    const Instance inst = generate_instance(p, 3);
    std::vector<int> hits(4, 0);
    for (const auto& t : inst.tasks()) ++hits[t.origin_server];
    for (int h : hits) EXPECT_GT(h, 60);
}

TEST(Generator, MinimalAndDeterministic) {
    GeneratorParams p;
    p.num_servers = 1;
    p.num_tasks = 1;
    const Instance inst = generate_instance(p, 1);
    EXPECT_EQ(inst.num_servers(), 1u);
    EXPECT_EQ(inst.num_tasks(), 1u);
    EXPECT_EQ(generate_instance(GeneratorParams::compact(), 8), generate_instance(GeneratorParams::compact(), 8));
}

TEST(Generator, CompactProfile) {
    const GeneratorParams p = GeneratorParams::compact();
    EXPECT_EQ(p.num_servers, 3u);
    EXPECT_EQ(p.num_tasks, 6u);
    const Instance inst = generate_instance(p, 2);
    for (const auto& s : inst.servers()) EXPECT_TRUE(within(s.capacity, {0.2, 0.4}));
    for (const auto& t : inst.tasks()) EXPECT_TRUE(within(t.deadline, {0.01, 1.0}));
}

TEST(Generator, InvalidParams) {
    GeneratorParams p;
    p.num_servers = 60;
    EXPECT_THROW(p.validate(), ValidationError);
    EXPECT_THROW(generate_instance(p, 1), ValidationError);
    GeneratorParams q;
    q.unit_price = {5.0, 1.0};
    EXPECT_THROW(generate_instance(q, 1), ValidationError);
    GeneratorParams r;
    r.deadline = {-1.0, 1.0};
    EXPECT_THROW(generate_instance(r, 1), ValidationError);
}

TEST(Generator, ScaleInstance) {
    const Instance inst = generate_instance(GeneratorParams::baseline(), 4);
    const Instance scaled = scale_instance(inst, 2.0, 1.5);
    for (TaskIndex j = 0; j < inst.num_tasks(); ++j) {
        EXPECT_DOUBLE_EQ(scaled.task(j).unit_price, 2.0 * inst.task(j).unit_price);
        EXPECT_DOUBLE_EQ(scaled.task(j).data_size, 1.5 * inst.task(j).data_size);
        EXPECT_EQ(scaled.task(j).deadline, inst.task(j).deadline);
    }
    EXPECT_EQ(scale_instance(inst, 1.0, 1.0), inst);
}

SweepSpec small_sweep() {
    SweepSpec spec;
    spec.axis = Axis::kNumServers;
    spec.values = {10, 20, 30};
    spec.seeds = {1, 2, 3};
    spec.base.learn.episodes = 20;
    return spec;
}

TEST(Sweep, CardinalityAndOrder) {
    const SweepSpec spec = small_sweep();
    const SweepResult r = run_sweep(spec);
    ASSERT_EQ(r.rows.size(), 27u);
    std::size_t k = 0;
    for (double v : spec.values) {
        for (std::uint64_t s : spec.seeds) {
            for (SolverKind solver : spec.solvers) {
                EXPECT_EQ(r.rows[k].value, v);
                EXPECT_EQ(r.rows[k].seed, s);
                EXPECT_EQ(r.rows[k].solver, solver);
                EXPECT_TRUE(r.rows[k].error.empty()) << r.rows[k].error;
                EXPECT_GE(r.rows[k].wall_ms, 0.0);
                ++k;
            }
        }
    }
}

TEST(Sweep, ScheduleIndependent) {
    SweepSpec serial = small_sweep();
    SweepSpec parallel = small_sweep();
    parallel.jobs = 4;
    serial.record_traces = parallel.record_traces = true;
    const SweepResult a = run_sweep(serial);
    const SweepResult b = run_sweep(parallel);
    ASSERT_EQ(a.rows.size(), b.rows.size());
    for (std::size_t k = 0; k < a.rows.size(); ++k) {
        EXPECT_EQ(a.rows[k].total_reward, b.rows[k].total_reward);
        EXPECT_EQ(a.rows[k].seed, b.rows[k].seed);
    }
    ASSERT_EQ(a.traces.size(), b.traces.size());
    for (std::size_t k = 0; k < a.traces.size(); ++k) EXPECT_EQ(a.traces[k].reward, b.traces[k].reward);
}

TEST(Sweep, RowsReproducedBySolve) {
    SweepSpec spec = small_sweep();
    spec.axis = Axis::kPriceScale;
    spec.values = {1.0, 2.0};
    const SweepResult r = run_sweep(spec);
    for (const auto& row : r.rows) {
        const CellSetup cell = make_cell(spec, row.value, row.seed, row.solver);
        EXPECT_EQ(run_solver(cell.instance, cell.solver).total_reward, row.total_reward);
    }
}

TEST(Sweep, FailingCellsBecomeErrorRows) {
    SweepSpec spec = small_sweep();
    spec.values = {10, 60};  // 60 servers > 50 tasks
    spec.seeds = {1};
    const SweepResult r = run_sweep(spec);
    ASSERT_EQ(r.rows.size(), 6u);
    for (std::size_t k = 0; k < 3; ++k) EXPECT_TRUE(r.rows[k].error.empty());
    for (std::size_t k = 3; k < 6; ++k) {
        EXPECT_FALSE(r.rows[k].error.empty());
        EXPECT_TRUE(std::isnan(r.rows[k].total_reward));
    }
    std::ostringstream csv;
    write_sweep_csv(r.rows, csv);
    EXPECT_NE(csv.str().find(",nan,"), std::string::npos);
}

TEST(Sweep, CsvHeaders) {
    SweepSpec spec = small_sweep();
    spec.axis = Axis::kDiscount;
    spec.values = {0.1, 0.9};
    spec.seeds = {7};
    spec.solvers = {SolverKind::kQLearning};
    spec.record_traces = true;
    const SweepResult r = run_sweep(spec);

    std::ostringstream rows;
    write_sweep_csv(r.rows, rows);
    EXPECT_EQ(rows.str().substr(0, rows.str().find('\n')), "axis,value,seed,solver,total_reward,wall_ms");
    EXPECT_NE(rows.str().find("discount,0.90000000000000002,7,qlearning,"), std::string::npos) << rows.str();

    std::ostringstream traces;
    write_trace_csv(r.traces, traces);
    EXPECT_EQ(traces.str().substr(0, traces.str().find('\n')), "episode,reward,best_so_far,alpha,gamma,seed");
    // two trajectories of 20 episodes each, one per gamma
    ASSERT_EQ(r.traces.size(), 40u);
    EXPECT_EQ(r.traces.front().gamma, 0.1);
    EXPECT_EQ(r.traces.back().gamma, 0.9);
}

TEST(Sweep, SpecValidation) {
    SweepSpec spec = small_sweep();
    spec.values = {10, 30, 20};
    EXPECT_THROW(run_sweep(spec), ValidationError);
    spec.values = {10.5};
    EXPECT_THROW(run_sweep(spec), ValidationError);
    spec.values = {};
    EXPECT_THROW(run_sweep(spec), ValidationError);
    spec = small_sweep();
    spec.seeds = {};
    EXPECT_THROW(run_sweep(spec), ValidationError);
    spec = small_sweep();
    spec.axis = Axis::kPriceScale;
    spec.values = {2.0, 1.0};  // decreasing is fine
    spec.seeds = {1};
    EXPECT_NO_THROW(run_sweep(spec));
}

TEST(Sweep, AxisNames) {
    for (Axis a : {Axis::kNumServers, Axis::kNumTasks, Axis::kPriceScale, Axis::kDataScale, Axis::kLearningRate,
                   Axis::kDiscount}) {
        EXPECT_EQ(parse_axis(to_string(a)), a);
    }
    EXPECT_THROW(parse_axis("temperature"), ValidationError);
}

TEST(Config, ParsesKeys) {
    const HarnessConfig cfg = parse_config(R"(# experiment
profile = compact
servers = 4
tasks = 9
episodes = 123   # trailing comment
alpha = 0.2
gamma = 0.5
epsilon = 0.7
seed = 99
screen = deadline
lambda = 0.2
price_min = 2
price_max = 3
)");
    EXPECT_EQ(cfg.generator.num_servers, 4u);
    EXPECT_EQ(cfg.generator.num_tasks, 9u);
    EXPECT_EQ(cfg.generator.capacity.hi, GeneratorParams::compact().capacity.hi);
    EXPECT_EQ(cfg.generator.unit_price.lo, 2.0);
    EXPECT_EQ(cfg.generator.unit_price.hi, 3.0);
    EXPECT_EQ(cfg.generator.intermediary_rate, 0.2);
    EXPECT_EQ(cfg.learn.episodes, 123u);
    EXPECT_EQ(cfg.learn.learning_rate, 0.2);
    EXPECT_EQ(cfg.learn.discount, 0.5);
    EXPECT_EQ(cfg.learn.epsilon, 0.7);
    EXPECT_EQ(cfg.learn.seed, 99u);
    EXPECT_TRUE(cfg.seed_set);
    EXPECT_EQ(cfg.learn.screen, learning::ResidualScreen::kCoversDeadline);
}

TEST(Config, ErrorsCarryLineNumbers) {
    try {
        parse_config("episodes = 10\n\nwarp = 9\n");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
    }
    try {
        parse_config("alpha = fast\n");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 1u);
    }
    EXPECT_THROW(parse_config("episodes\n"), ParseError);
}

TEST(Config, EnvironmentSeed) {
    ::unsetenv("EDGE_MTA_SEED");
    EXPECT_FALSE(seed_from_env().has_value());
    ::setenv("EDGE_MTA_SEED", "1234", 1);
    EXPECT_EQ(seed_from_env(), 1234u);
    ::setenv("EDGE_MTA_SEED", "abc", 1);
    EXPECT_THROW(seed_from_env(), ParseError);
    ::unsetenv("EDGE_MTA_SEED");
}

} // namespace
} // namespace edgemta
