#include "edgemta/domain.hpp"

#include "edgemta/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace edgemta {

namespace {

void require_positive(double value, const std::string& what) {
    if (!std::isfinite(value) || value <= 0.0) {
        throw ValidationError(what + " must be finite and > 0 (got " + std::to_string(value) + ")");
    }
}

} // namespace

Instance::Instance(std::vector<ServerSpec> servers, std::vector<TaskSpec> tasks,
                   double intermediary_rate, double noise)
    : servers_(std::move(servers)), tasks_(std::move(tasks)),
      intermediary_rate_(intermediary_rate), noise_(noise) {
    const std::size_t n = servers_.size();
    const std::size_t m = tasks_.size();
    if (n == 0) {
        throw ValidationError("C4: at least one server is required (n > 0)");
    }
    if (n > m) {
        throw ValidationError("C4: number of servers must not exceed number of tasks (n=" +
                              std::to_string(n) + ", m=" + std::to_string(m) + ")");
    }
    if (!(intermediary_rate >= 0.0 && intermediary_rate < 1.0)) {
        throw ValidationError("lambda must lie in [0, 1) (got " + std::to_string(intermediary_rate) + ")");
    }
    if (!(noise > 0.0 && noise <= 1.0)) {
        throw ValidationError("delta must lie in (0, 1] (got " + std::to_string(noise) + ")");
    }

    for (std::size_t i = 0; i < n; ++i) {
        auto& s = servers_[i];
        s.id = i;
        const std::string at = "server " + std::to_string(i) + ": ";
        require_positive(s.cpu_arch_coeff, at + "alpha");
        require_positive(s.cycles_per_sample, at + "theta");
        require_positive(s.cpu_frequency, at + "f");
        require_positive(s.capacity, at + "mu");
        require_positive(s.bandwidth, at + "B");
        require_positive(s.tx_power, at + "H");
        require_positive(s.channel_gain, at + "G");
    }
    for (std::size_t j = 0; j < m; ++j) {
        auto& t = tasks_[j];
        t.id = j;
        const std::string at = "task " + std::to_string(j) + ": ";
        require_positive(t.unit_price, at + "p");
        require_positive(t.data_size, at + "D");
        require_positive(t.deadline, at + "tau_e");
        if (t.origin_server >= n) {
            throw ValidationError(at + "origin " + std::to_string(t.origin_server) +
                                  " is not a valid server index (n=" + std::to_string(n) + ")");
        }
    }
}

void validate_assignment(const Instance& inst, std::span<const ServerIndex> assignment) {
    if (assignment.size() != inst.num_tasks()) {
        throw ValidationError("assignment has " + std::to_string(assignment.size()) +
                              " entries, instance has " + std::to_string(inst.num_tasks()) + " tasks");
    }
    for (std::size_t j = 0; j < assignment.size(); ++j) {
        if (assignment[j] != kUnassigned && assignment[j] >= inst.num_servers()) {
            throw ValidationError("task " + std::to_string(j) + " assigned to invalid server " +
                                  std::to_string(assignment[j]));
        }
    }
}

std::size_t Allocation::assigned_count() const {
    return static_cast<std::size_t>(
        std::count_if(assignment.begin(), assignment.end(), [](ServerIndex s) { return s != kUnassigned; }));
}

} // namespace edgemta
