#ifndef EDGEMTA_SWEEP_HPP
#define EDGEMTA_SWEEP_HPP

#include "edgemta/config.hpp"
#include "edgemta/solvers.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace edgemta {

enum class Axis { kNumServers, kNumTasks, kPriceScale, kDataScale, kLearningRate, kDiscount };

std::string to_string(Axis axis);
Axis parse_axis(std::string_view name);

struct SweepSpec {
    Axis axis = Axis::kNumServers;
    std::vector<double> values;          // strictly monotone
    std::vector<std::uint64_t> seeds;    // non-empty
    HarnessConfig base;
    std::vector<SolverKind> solvers{SolverKind::kQLearning, SolverKind::kGreedy, SolverKind::kRandom};
    bool record_traces = false;          // keep per-episode learner traces
    std::size_t jobs = 1;                // worker threads

    void validate() const;
};

struct SweepRow {
    Axis axis = Axis::kNumServers;
    double value = 0.0;
    std::uint64_t seed = 0;
    SolverKind solver = SolverKind::kQLearning;
    double total_reward = 0.0;   // NaN when the cell failed
    double wall_ms = 0.0;
    std::string error;
};

struct TraceRow {
    std::size_t episode = 0;
    double reward = 0.0;
    double best_so_far = 0.0;
    double alpha = 0.0;
    double gamma = 0.0;
    std::uint64_t seed = 0;
};

struct SweepResult {
    std::vector<SweepRow> rows;      // ordered by (value, seed, solver)
    std::vector<TraceRow> traces;    // same cell order, episodes ascending
};

// One cell per (value, seed, solver). The instance for a cell is generated
// from the base parameters with the cell seed; size axes replace n or m,
// scale axes multiply the generated prices or data sizes, and learner axes
// override alpha or gamma. The cell seed also seeds the learner and the
// random baseline. A failing cell yields a row with `error` set.
SweepResult run_sweep(const SweepSpec& spec);

// Configuration a cell runs with; `solve` on the same instance and config
// reproduces the row.
struct CellSetup {
    Instance instance;
    SolverConfig solver;
};
CellSetup make_cell(const SweepSpec& spec, double value, std::uint64_t seed, SolverKind solver);

// axis,value,seed,solver,total_reward,wall_ms
void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out);
// episode,reward,best_so_far,alpha,gamma,seed
void write_trace_csv(const std::vector<TraceRow>& rows, std::ostream& out);

std::vector<TraceRow> make_trace(const learning::SolveResult& result, const learning::LearnConfig& cfg);

} // namespace edgemta

#endif // EDGEMTA_SWEEP_HPP
