#include "edgemta/sweep.hpp"

#include "edgemta/error.hpp"
#include "edgemta/generator.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <thread>

namespace edgemta {

std::string to_string(Axis axis) {
    switch (axis) {
    case Axis::kNumServers: return "num_servers";
    case Axis::kNumTasks: return "num_tasks";
    case Axis::kPriceScale: return "price_scale";
    case Axis::kDataScale: return "data_scale";
    case Axis::kLearningRate: return "learning_rate";
    case Axis::kDiscount: return "discount";
    }
    return "?";
}

Axis parse_axis(std::string_view name) {
    for (Axis a : {Axis::kNumServers, Axis::kNumTasks, Axis::kPriceScale, Axis::kDataScale, Axis::kLearningRate,
                   Axis::kDiscount}) {
        if (to_string(a) == name) return a;
    }
    throw ValidationError("unknown sweep axis '" + std::string(name) + "'");
}

void SweepSpec::validate() const {
    if (values.empty()) throw ValidationError("sweep needs at least one axis value");
    if (seeds.empty()) throw ValidationError("sweep needs at least one seed");
    if (solvers.empty()) throw ValidationError("sweep needs at least one solver");
    if (jobs == 0) throw ValidationError("jobs must be >= 1");
    if (values.size() > 1) {
        const bool up = values[1] > values[0];
        for (std::size_t k = 1; k < values.size(); ++k) {
            if (up ? !(values[k] > values[k - 1]) : !(values[k] < values[k - 1])) {
                throw ValidationError("sweep values must be strictly monotone");
            }
        }
    }
    for (double v : values) {
        if (!std::isfinite(v)) throw ValidationError("sweep values must be finite");
        if ((axis == Axis::kNumServers || axis == Axis::kNumTasks) && (v < 1.0 || v != std::floor(v))) {
            throw ValidationError("size axes take positive integers");
        }
    }
}

CellSetup make_cell(const SweepSpec& spec, double value, std::uint64_t seed, SolverKind solver) {
    GeneratorParams gen = spec.base.generator;
    SolverConfig cfg;
    cfg.kind = solver;
    cfg.learn = spec.base.learn;
    cfg.learn.seed = seed;

    double price_scale = 1.0;
    double data_scale = 1.0;
    switch (spec.axis) {
    case Axis::kNumServers: gen.num_servers = static_cast<std::size_t>(value); break;
    case Axis::kNumTasks: gen.num_tasks = static_cast<std::size_t>(value); break;
    case Axis::kPriceScale: price_scale = value; break;
    case Axis::kDataScale: data_scale = value; break;
    case Axis::kLearningRate: cfg.learn.learning_rate = value; break;
    case Axis::kDiscount: cfg.learn.discount = value; break;
    }
    Instance inst = generate_instance(gen, seed);
    if (price_scale != 1.0 || data_scale != 1.0) {
        inst = scale_instance(inst, price_scale, data_scale);
    }
    return CellSetup{std::move(inst), cfg};
}

std::vector<TraceRow> make_trace(const learning::SolveResult& result, const learning::LearnConfig& cfg) {
    std::vector<TraceRow> rows;
    rows.reserve(result.reward_trajectory.size());
    for (std::size_t k = 0; k < result.reward_trajectory.size(); ++k) {
        rows.push_back({k, result.reward_trajectory[k], result.best_so_far_trajectory[k], cfg.learning_rate,
                        cfg.discount, cfg.seed});
    }
    return rows;
}

SweepResult run_sweep(const SweepSpec& spec) {
    spec.validate();

    struct Cell {
        SweepRow row;
        std::vector<TraceRow> trace;
    };
    const std::size_t per_value = spec.seeds.size() * spec.solvers.size();
    std::vector<Cell> cells(spec.values.size() * per_value);

    auto run_cell = [&](std::size_t idx) {
        const std::size_t v = idx / per_value;
        const std::size_t s = (idx % per_value) / spec.solvers.size();
        const std::size_t k = idx % spec.solvers.size();
        Cell& cell = cells[idx];
        cell.row.axis = spec.axis;
        cell.row.value = spec.values[v];
        cell.row.seed = spec.seeds[s];
        cell.row.solver = spec.solvers[k];
        try {
            const CellSetup setup = make_cell(spec, spec.values[v], spec.seeds[s], spec.solvers[k]);
            const auto start = std::chrono::steady_clock::now();
            SolverOutcome outcome = run_solver(setup.instance, setup.solver);
            const auto stop = std::chrono::steady_clock::now();
            cell.row.total_reward = outcome.total_reward;
            cell.row.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
            if (spec.record_traces && outcome.learning) {
                cell.trace = make_trace(*outcome.learning, setup.solver.learn);
            }
        } catch (const std::exception& e) {
            cell.row.total_reward = std::numeric_limits<double>::quiet_NaN();
            cell.row.error = e.what();
        }
    };

    if (spec.jobs <= 1) {
        for (std::size_t idx = 0; idx < cells.size(); ++idx) run_cell(idx);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> workers;
        for (std::size_t w = 0; w < spec.jobs; ++w) {
            workers.emplace_back([&] {
                for (std::size_t idx = next++; idx < cells.size(); idx = next++) run_cell(idx);
            });
        }
    }

    // cells are already laid out in key order
    SweepResult out;
    out.rows.reserve(cells.size());
    for (auto& c : cells) {
        out.rows.push_back(std::move(c.row));
        out.traces.insert(out.traces.end(), c.trace.begin(), c.trace.end());
    }
    return out;
}

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
    out << "axis,value,seed,solver,total_reward,wall_ms\n";
    out << std::setprecision(17);
    for (const auto& r : rows) {
        out << to_string(r.axis) << ',' << r.value << ',' << r.seed << ',' << to_string(r.solver) << ',';
        if (std::isnan(r.total_reward)) out << "nan";
        else out << r.total_reward;
        out << ',' << std::setprecision(6) << r.wall_ms << std::setprecision(17) << '\n';
    }
}

void write_trace_csv(const std::vector<TraceRow>& rows, std::ostream& out) {
    out << "episode,reward,best_so_far,alpha,gamma,seed\n";
    out << std::setprecision(17);
    for (const auto& r : rows) {
        out << r.episode << ',' << r.reward << ',' << r.best_so_far << ',' << r.alpha << ',' << r.gamma << ','
            << r.seed << '\n';
    }
}

} // namespace edgemta
