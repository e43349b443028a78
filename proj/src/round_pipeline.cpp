#include "edgemta/round_pipeline.hpp"

#include "edgemta/cost_model.hpp"
#include "edgemta/error.hpp"

#include <json.hpp>

#include <fstream>

namespace edgemta::round {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string party_string(const Party& p) {
    return (p.kind == Party::Kind::kUser ? "user:" : "server:") + std::to_string(p.index);
}

Party parse_party(const std::string& s) {
    const auto colon = s.find(':');
    if (colon == std::string::npos) {
        throw ParseError("bad party '" + s + "'");
    }
    const std::string kind = s.substr(0, colon);
    const std::size_t index = std::stoull(s.substr(colon + 1));
    if (kind == "user") return Party::user(index);
    if (kind == "server") return Party::server(index);
    throw ParseError("bad party kind '" + kind + "'");
}

// JSON cannot carry SIZE_MAX portably next to small ints, so unassigned
// entries are written as -1.
ordered_json slot_json(ServerIndex s) {
    return s == kUnassigned ? ordered_json(-1) : ordered_json(s);
}

ServerIndex slot_from_json(const json& j) {
    const long long v = j.get<long long>();
    return v < 0 ? kUnassigned : static_cast<ServerIndex>(v);
}

} // namespace

LedgerRecord run_round(const Instance& inst, const SolverConfig& solver, std::size_t round_number) {
    LedgerRecord record;
    record.round = round_number;
    record.intermediary_rate = inst.intermediary_rate();
    record.noise = inst.noise();
    record.published_resources.assign(inst.servers().begin(), inst.servers().end());
    record.task_descriptions.assign(inst.tasks().begin(), inst.tasks().end());

    record.allocation = run_solver(inst, solver).allocation;
    record.results = record.allocation.assignment;

    const double lambda = inst.intermediary_rate();
    for (TaskIndex j = 0; j < inst.num_tasks(); ++j) {
        const ServerIndex k = record.allocation.assignment[j];
        if (k == kUnassigned) {
            continue;
        }
        const TaskSpec& task = inst.task(j);
        const ServerIndex origin = task.origin_server;
        const double payment = task.unit_price * cost::cycles_required(inst.server(k), task);
        record.payments.push_back({Party::user(j), Party::server(k), payment, PaymentKind::kTaskPayment, j});
        if (k != origin) {
            const double fee = lambda * task.unit_price * cost::cycles_required(inst.server(origin), task);
            record.payments.push_back(
                {Party::server(k), Party::server(origin), fee, PaymentKind::kIntermediaryFee, j});
        }
    }
    return record;
}

double server_energy_cost(const LedgerRecord& record, ServerIndex i) {
    double energy = 0.0;
    for (TaskIndex j = 0; j < record.task_descriptions.size(); ++j) {
        const ServerIndex k = record.allocation.assignment[j];
        if (k == kUnassigned) {
            continue;
        }
        const TaskSpec& task = record.task_descriptions[j];
        if (k == i) {
            energy += cost::compute_energy(record.published_resources[i], task);
        } else if (task.origin_server == i) {
            energy += cost::comm_energy(record.published_resources[i], task, record.noise);
        }
    }
    return energy;
}

double server_net_income(const LedgerRecord& record, ServerIndex i) {
    const Party self = Party::server(i);
    double net = 0.0;
    for (const auto& p : record.payments) {
        if (p.payee == self) net += p.amount;
        if (p.payer == self) net -= p.amount;
    }
    return net - server_energy_cost(record, i);
}

double total_user_payments(const LedgerRecord& record) {
    double total = 0.0;
    for (const auto& p : record.payments) {
        if (p.payer.kind == Party::Kind::kUser) {
            total += p.amount;
        }
    }
    return total;
}

std::string to_json_line(const LedgerRecord& record) {
    ordered_json doc;
    doc["round"] = record.round;
    doc["lambda"] = record.intermediary_rate;
    doc["delta"] = record.noise;
    auto& servers = doc["published_resources"] = ordered_json::array();
    for (const auto& s : record.published_resources) {
        servers.push_back({{"alpha", s.cpu_arch_coeff}, {"theta", s.cycles_per_sample}, {"f", s.cpu_frequency},
                           {"mu", s.capacity},          {"B", s.bandwidth},             {"H", s.tx_power},
                           {"G", s.channel_gain}});
    }
    auto& tasks = doc["task_descriptions"] = ordered_json::array();
    for (const auto& t : record.task_descriptions) {
        tasks.push_back({{"p", t.unit_price}, {"D", t.data_size}, {"tau_e", t.deadline}, {"origin", t.origin_server}});
    }
    auto& alloc = doc["allocation"] = ordered_json::object();
    alloc["assignment"] = ordered_json::array();
    for (ServerIndex s : record.allocation.assignment) alloc["assignment"].push_back(slot_json(s));
    alloc["total_utility"] = record.allocation.total_utility;
    auto& payments = doc["payments"] = ordered_json::array();
    for (const auto& p : record.payments) {
        payments.push_back({{"payer", party_string(p.payer)},
                            {"payee", party_string(p.payee)},
                            {"amount", p.amount},
                            {"kind", p.kind == PaymentKind::kTaskPayment ? "task_payment" : "intermediary_fee"},
                            {"task", p.task}});
    }
    auto& results = doc["results"] = ordered_json::array();
    for (ServerIndex s : record.results) results.push_back(slot_json(s));
    return doc.dump();
}

LedgerRecord from_json_line(std::string_view line) {
    LedgerRecord r;
    try {
        const json doc = json::parse(line.begin(), line.end());
        r.round = doc.at("round").get<std::size_t>();
        r.intermediary_rate = doc.at("lambda").get<double>();
        r.noise = doc.at("delta").get<double>();
        std::size_t idx = 0;
        for (const auto& s : doc.at("published_resources")) {
            r.published_resources.push_back({idx++, s.at("alpha").get<double>(), s.at("theta").get<double>(),
                                             s.at("f").get<double>(), s.at("mu").get<double>(),
                                             s.at("B").get<double>(), s.at("H").get<double>(),
                                             s.at("G").get<double>()});
        }
        idx = 0;
        for (const auto& t : doc.at("task_descriptions")) {
            r.task_descriptions.push_back({idx++, t.at("p").get<double>(), t.at("D").get<double>(),
                                           t.at("tau_e").get<double>(), t.at("origin").get<std::size_t>()});
        }
        const auto& alloc = doc.at("allocation");
        for (const auto& s : alloc.at("assignment")) r.allocation.assignment.push_back(slot_from_json(s));
        r.allocation.total_utility = alloc.at("total_utility").get<double>();
        for (const auto& p : doc.at("payments")) {
            const std::string kind = p.at("kind").get<std::string>();
            if (kind != "task_payment" && kind != "intermediary_fee") {
                throw ParseError("bad payment kind '" + kind + "'");
            }
            r.payments.push_back({parse_party(p.at("payer").get<std::string>()),
                                  parse_party(p.at("payee").get<std::string>()), p.at("amount").get<double>(),
                                  kind == "task_payment" ? PaymentKind::kTaskPayment : PaymentKind::kIntermediaryFee,
                                  p.at("task").get<std::size_t>()});
        }
        for (const auto& s : doc.at("results")) r.results.push_back(slot_from_json(s));
    } catch (const json::exception& e) {
        throw ParseError(std::string("ledger record: ") + e.what());
    }
    return r;
}

Ledger Ledger::load(const std::filesystem::path& path) {
    Ledger ledger;
    std::ifstream in(path);
    if (!in) {
        return ledger;
    }
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            ledger.append(from_json_line(line));
        } catch (const Error& e) {
            throw ParseError(e.what(), lineno);
        }
    }
    return ledger;
}

const LedgerRecord& Ledger::append(LedgerRecord record) {
    if (record.round != next_round()) {
        throw ValidationError("ledger is append-only: expected round " + std::to_string(next_round()) + ", got " +
                              std::to_string(record.round));
    }
    records_.push_back(std::move(record));
    return records_.back();
}

const LedgerRecord& Ledger::run_and_append(const Instance& inst, const SolverConfig& solver) {
    return append(run_round(inst, solver, next_round()));
}

void append_to_file(const LedgerRecord& record, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::app);
    if (!out) {
        throw Error("cannot open ledger file " + path.string());
    }
    out << to_json_line(record) << '\n';
}

} // namespace edgemta::round
