#include "edgemta/cli.hpp"

#include "edgemta/allocation.hpp"
#include "edgemta/baselines.hpp"
#include "edgemta/config.hpp"
#include "edgemta/error.hpp"
#include "edgemta/generator.hpp"
#include "edgemta/instance_io.hpp"
#include "edgemta/reward_engine.hpp"
#include "edgemta/round_pipeline.hpp"
#include "edgemta/solvers.hpp"
#include "edgemta/sweep.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

namespace edgemta::cli {

namespace {

struct Options {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::string out_path;

    std::string profile;
    std::optional<std::size_t> servers;
    std::optional<std::size_t> tasks;

    std::string instance_path;
    std::string solver = "qlearning";
    std::optional<std::size_t> episodes;
    std::optional<double> alpha;
    std::optional<double> gamma;
    std::optional<double> epsilon;
    std::string screen;
    std::string trace_path;
    std::string rewards_csv;

    std::string axis;
    std::vector<double> values;
    std::vector<std::uint64_t> seeds;
    std::vector<std::string> solvers;
    std::size_t jobs = 1;

    std::string ledger_path;
    double budget_bits = baselines::ExactOptions{}.max_search_bits;
};

void add_learner_flags(CLI::App* app, Options& o) {
    app->add_option("--episodes", o.episodes, "Learning episodes K");
    app->add_option("--alpha", o.alpha, "Learning rate");
    app->add_option("--gamma", o.gamma, "Discount factor");
    app->add_option("--epsilon", o.epsilon, "Probability of exploiting the Q-table");
    app->add_option("--screen", o.screen, "Residual-time screen")->check(CLI::IsMember({"nonnegative", "deadline"}));
}

void add_generator_flags(CLI::App* app, Options& o) {
    app->add_option("--profile", o.profile, "Generator profile")->check(CLI::IsMember({"baseline", "compact"}));
    app->add_option("--servers", o.servers, "Number of servers n");
    app->add_option("--tasks", o.tasks, "Number of tasks m");
}

// Precedence for every setting: command-line flag, config file, built-in
// default. EDGE_MTA_SEED replaces the built-in default seed only.
HarnessConfig resolve(const Options& o) {
    HarnessConfig cfg;
    if (const auto env = seed_from_env()) {
        cfg.learn.seed = *env;
    }
    if (!o.config_path.empty()) {
        cfg = load_config(o.config_path, cfg);
    }
    auto& g = cfg.generator;
    if (o.profile == "baseline" || o.profile == "compact") {
        const auto n = g.num_servers;
        const auto m = g.num_tasks;
        g = o.profile == "baseline" ? GeneratorParams::baseline() : GeneratorParams::compact();
        if (!o.config_path.empty()) {
            // sizes from a config file survive a profile switch
            g.num_servers = n;
            g.num_tasks = m;
        }
    }
    if (o.servers) g.num_servers = *o.servers;
    if (o.tasks) g.num_tasks = *o.tasks;
    if (o.seed) cfg.learn.seed = *o.seed;
    if (o.episodes) cfg.learn.episodes = *o.episodes;
    if (o.alpha) cfg.learn.learning_rate = *o.alpha;
    if (o.gamma) cfg.learn.discount = *o.gamma;
    if (o.epsilon) cfg.learn.epsilon = *o.epsilon;
    if (o.screen == "deadline") cfg.learn.screen = learning::ResidualScreen::kCoversDeadline;
    if (o.screen == "nonnegative") cfg.learn.screen = learning::ResidualScreen::kNonNegative;
    return cfg;
}

void write_text(const std::string& path, const std::string& text, std::ostream& fallback) {
    if (path.empty() || path == "-") {
        fallback << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw Error("cannot write " + path);
    f << text;
}

std::string assignment_json(const Allocation& a, const SolverOutcome& outcome, SolverKind kind) {
    nlohmann::ordered_json doc;
    doc["solver"] = to_string(kind);
    doc["assignment"] = nlohmann::ordered_json::array();
    for (ServerIndex s : a.assignment) {
        doc["assignment"].push_back(s == kUnassigned ? nlohmann::ordered_json(-1) : nlohmann::ordered_json(s));
    }
    doc["total_reward"] = outcome.total_reward;
    doc["total_utility"] = a.total_utility;
    return doc.dump(2) + "\n";
}

int cmd_gen(const Options& o, std::ostream& out) {
    const HarnessConfig cfg = resolve(o);
    const Instance inst = generate_instance(cfg.generator, cfg.learn.seed);
    write_text(o.out_path, serialize_instance(inst), out);
    return 0;
}

int cmd_solve(const Options& o, std::ostream& out) {
    const HarnessConfig cfg = resolve(o);
    const Instance inst = load_instance(o.instance_path);
    SolverConfig solver;
    solver.kind = parse_solver(o.solver);
    solver.learn = cfg.learn;
    solver.exact.max_search_bits = o.budget_bits;

    const SolverOutcome outcome = run_solver(inst, solver);
    const FeasibilityReport report = check_feasible(inst, outcome.allocation.assignment);

    out << std::setprecision(17);
    out << "solver: " << to_string(solver.kind) << '\n';
    out << "total_reward: " << outcome.total_reward << '\n';
    out << "total_utility: " << outcome.allocation.total_utility << '\n';
    out << "assigned: " << outcome.allocation.assigned_count() << '/' << inst.num_tasks() << '\n';
    out << "feasible: " << (report.ok ? "yes" : "no") << '\n';

    if (!o.out_path.empty()) {
        write_text(o.out_path, assignment_json(outcome.allocation, outcome, solver.kind), out);
    }
    if (!o.trace_path.empty() && outcome.learning) {
        std::ostringstream csv;
        write_trace_csv(make_trace(*outcome.learning, solver.learn), csv);
        write_text(o.trace_path, csv.str(), out);
    }
    if (!o.rewards_csv.empty()) {
        std::ostringstream csv;
        write_reward_csv(build_reward_table(inst), csv);
        write_text(o.rewards_csv, csv.str(), out);
    }
    return 0;
}

int cmd_sweep(const Options& o, std::ostream& out, std::ostream& err) {
    SweepSpec spec;
    spec.base = resolve(o);
    spec.axis = parse_axis(o.axis);
    spec.values = o.values;
    spec.seeds = o.seeds.empty() ? std::vector<std::uint64_t>{spec.base.learn.seed} : o.seeds;
    if (!o.solvers.empty()) {
        spec.solvers.clear();
        for (const auto& s : o.solvers) spec.solvers.push_back(parse_solver(s));
    }
    spec.base.learn.validate();
    spec.jobs = o.jobs;
    spec.record_traces = !o.trace_path.empty();

    const SweepResult result = run_sweep(spec);
    for (const auto& row : result.rows) {
        if (!row.error.empty()) {
            err << "cell " << to_string(row.axis) << "=" << row.value << " seed=" << row.seed << " "
                << to_string(row.solver) << " failed: " << row.error << '\n';
        }
    }
    std::ostringstream csv;
    write_sweep_csv(result.rows, csv);
    write_text(o.out_path, csv.str(), out);
    if (spec.record_traces) {
        std::ostringstream trace;
        write_trace_csv(result.traces, trace);
        write_text(o.trace_path, trace.str(), out);
    }
    return 0;
}

int cmd_round(const Options& o, std::ostream& out) {
    const HarnessConfig cfg = resolve(o);
    const Instance inst = load_instance(o.instance_path);
    SolverConfig solver;
    solver.kind = parse_solver(o.solver);
    solver.learn = cfg.learn;
    solver.exact.max_search_bits = o.budget_bits;

    round::Ledger ledger = o.ledger_path.empty() ? round::Ledger{} : round::Ledger::load(o.ledger_path);
    const round::LedgerRecord& record = ledger.run_and_append(inst, solver);
    if (!o.ledger_path.empty()) {
        round::append_to_file(record, o.ledger_path);
    }

    out << std::setprecision(17);
    out << "round: " << record.round << '\n';
    out << "payments: " << record.payments.size() << '\n';
    out << "user_payments: " << round::total_user_payments(record) << '\n';
    for (ServerIndex i = 0; i < record.published_resources.size(); ++i) {
        out << "server " << i << " net_income: " << round::server_net_income(record, i) << '\n';
    }
    out << "total_utility: " << record.allocation.total_utility << '\n';
    if (o.ledger_path.empty() && !o.out_path.empty()) {
        write_text(o.out_path, round::to_json_line(record) + "\n", out);
    }
    return 0;
}

int cmd_oracle(const Options& o, std::ostream& out) {
    const Instance inst = load_instance(o.instance_path);
    baselines::ExactOptions opts;
    opts.max_search_bits = o.budget_bits;
    const Allocation best = baselines::solve_exact(inst, opts);
    out << std::setprecision(17);
    out << "optimum: " << best.total_utility << '\n';
    out << "assignment:";
    for (ServerIndex s : best.assignment) {
        out << ' ' << (s == kUnassigned ? std::string("-") : std::to_string(s));
    }
    out << '\n';
    if (!o.out_path.empty()) {
        SolverOutcome outcome;
        outcome.total_reward = collected_reward(build_reward_table(inst), best.assignment);
        write_text(o.out_path, assignment_json(best, outcome, SolverKind::kExact), out);
    }
    return 0;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Edge task allocation: instance generation, solvers, sweeps and round simulation", "edge_mta"};
    app.require_subcommand(1);
    Options o;

    auto common = [&o](CLI::App* sub) {
        sub->add_option("--config", o.config_path, "Flat key=value config file")->check(CLI::ExistingFile);
        sub->add_option("--seed", o.seed, "RNG seed (default: $EDGE_MTA_SEED or 42)");
        sub->add_option("--out", o.out_path, "Output path");
    };

    auto* gen = app.add_subcommand("gen", "Generate a random instance document");
    common(gen);
    add_generator_flags(gen, o);

    auto* solve = app.add_subcommand("solve", "Solve a saved instance and print its total reward");
    common(solve);
    solve->add_option("instance", o.instance_path, "Instance document")->required()->check(CLI::ExistingFile);
    solve->add_option("--solver", o.solver, "qlearning|greedy|random|exact")
        ->check(CLI::IsMember({"qlearning", "learning", "greedy", "random", "exact"}));
    add_learner_flags(solve, o);
    solve->add_option("--trace", o.trace_path, "Per-episode learner trace CSV");
    solve->add_option("--rewards-csv", o.rewards_csv, "Dump the reward table as CSV");
    solve->add_option("--budget-bits", o.budget_bits, "Exact-search budget in bits");

    auto* sweep = app.add_subcommand("sweep", "Parameter sweep over generated instances (CSV)");
    common(sweep);
    add_generator_flags(sweep, o);
    add_learner_flags(sweep, o);
    sweep->add_option("--axis", o.axis, "Swept axis")
        ->required()
        ->check(CLI::IsMember(
            {"num_servers", "num_tasks", "price_scale", "data_scale", "learning_rate", "discount"}));
    sweep->add_option("--values", o.values, "Axis values")->required()->delimiter(',');
    sweep->add_option("--seeds", o.seeds, "Seeds")->delimiter(',');
    sweep->add_option("--solvers", o.solvers, "Solvers (default qlearning,greedy,random)")->delimiter(',');
    sweep->add_option("--trace", o.trace_path, "Learner convergence traces CSV");
    sweep->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);

    auto* round_cmd = app.add_subcommand("round", "Simulate one allocation-and-settlement round");
    common(round_cmd);
    round_cmd->add_option("instance", o.instance_path, "Instance document")->required()->check(CLI::ExistingFile);
    round_cmd->add_option("--solver", o.solver, "qlearning|greedy|random|exact")
        ->check(CLI::IsMember({"qlearning", "learning", "greedy", "random", "exact"}));
    add_learner_flags(round_cmd, o);
    round_cmd->add_option("--ledger", o.ledger_path, "Append-only ledger file (one JSON record per line)");
    round_cmd->add_option("--budget-bits", o.budget_bits, "Exact-search budget in bits");

    auto* oracle = app.add_subcommand("oracle", "Exact optimum by exhaustive search (small instances)");
    oracle->add_option("instance", o.instance_path, "Instance document")->required()->check(CLI::ExistingFile);
    oracle->add_option("--out", o.out_path, "Write the optimal assignment as JSON");
    oracle->add_option("--budget-bits", o.budget_bits, "Refuse when m*log2(n+1) exceeds this");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    try {
        if (gen->parsed()) return cmd_gen(o, out);
        if (solve->parsed()) return cmd_solve(o, out);
        if (sweep->parsed()) return cmd_sweep(o, out, err);
        if (round_cmd->parsed()) return cmd_round(o, out);
        if (oracle->parsed()) return cmd_oracle(o, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

} // namespace edgemta::cli
