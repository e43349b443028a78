#ifndef EDGEMTA_ROUND_PIPELINE_HPP
#define EDGEMTA_ROUND_PIPELINE_HPP

#include "edgemta/domain.hpp"
#include "edgemta/solvers.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace edgemta::round {

enum class PaymentKind { kTaskPayment, kIntermediaryFee };

// A user is identified by the task it submitted.
struct Party {
    enum class Kind { kUser, kServer };
    Kind kind = Kind::kServer;
    std::size_t index = 0;

    static Party user(TaskIndex task) { return {Kind::kUser, task}; }
    static Party server(ServerIndex server) { return {Kind::kServer, server}; }
    bool operator==(const Party&) const = default;
};

struct Payment {
    Party payer;
    Party payee;
    double amount = 0.0;
    PaymentKind kind = PaymentKind::kTaskPayment;
    TaskIndex task = 0;

    bool operator==(const Payment&) const = default;
};

// Everything the leader commits for one round. The record keeps its own
// copies of lambda and delta so settlement can be recomputed from it alone.
struct LedgerRecord {
    std::size_t round = 0;
    double intermediary_rate = 0.0;
    double noise = 0.0;
    std::vector<ServerSpec> published_resources;
    std::vector<TaskSpec> task_descriptions;
    Allocation allocation;
    std::vector<Payment> payments;
    // Completion marker per task: the server that ran it, or kUnassigned.
    std::vector<ServerIndex> results;

    bool operator==(const LedgerRecord&) const = default;
};

// Publication, allocation, offloading and settlement for one instance.
// For each assigned task j (origin o, assignee k) the user pays p_j mu_kj to
// k; when k != o, k pays lambda p_j mu_oj to o. Unassigned tasks settle
// nothing. Solver errors (e.g. BudgetExceeded) propagate.
LedgerRecord run_round(const Instance& inst, const SolverConfig& solver, std::size_t round_number = 0);

// Energy server i spends in the round: compute energy for the tasks it ran
// plus transmission energy for its own tasks that ran elsewhere.
double server_energy_cost(const LedgerRecord& record, ServerIndex i);

// Received - paid - energy.
double server_net_income(const LedgerRecord& record, ServerIndex i);

// Sum of user-side task payments.
double total_user_payments(const LedgerRecord& record);

std::string to_json_line(const LedgerRecord& record);
LedgerRecord from_json_line(std::string_view line);

// Append-only sequence of round records. Round numbers start at 0 and
// increase by exactly one.
class Ledger {
public:
    Ledger() = default;

    // Reads one record per line. Throws ParseError/ValidationError when the
    // file is malformed or its round numbers are not consecutive.
    static Ledger load(const std::filesystem::path& path);

    std::size_t next_round() const noexcept { return records_.size(); }
    const std::vector<LedgerRecord>& records() const noexcept { return records_; }

    // Throws ValidationError when record.round != next_round().
    const LedgerRecord& append(LedgerRecord record);

    // Runs a round numbered next_round() and appends it.
    const LedgerRecord& run_and_append(const Instance& inst, const SolverConfig& solver);

private:
    std::vector<LedgerRecord> records_;
};

// Appends one line to `path`, creating the file if needed.
void append_to_file(const LedgerRecord& record, const std::filesystem::path& path);

} // namespace edgemta::round

#endif // EDGEMTA_ROUND_PIPELINE_HPP
