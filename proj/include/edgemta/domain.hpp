#ifndef EDGEMTA_DOMAIN_HPP
#define EDGEMTA_DOMAIN_HPP

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

namespace edgemta {

using ServerIndex = std::size_t;
using TaskIndex = std::size_t;

// Marks a task that no server processes. Sorts after every real server index.
inline constexpr ServerIndex kUnassigned = std::numeric_limits<ServerIndex>::max();

// One entry per task: the assigned server or kUnassigned.
using Assignment = std::vector<ServerIndex>;

// An offloading task as described by the submitting user.
struct TaskSpec {
    TaskIndex id = 0;
    double unit_price = 0.0;   // payment per CPU cycle
    double data_size = 0.0;    // data units
    double deadline = 0.0;     // seconds
    ServerIndex origin_server = 0;

    bool operator==(const TaskSpec&) const = default;
};

// Resources an MEC server publishes for the current round.
struct ServerSpec {
    ServerIndex id = 0;
    double cpu_arch_coeff = 0.0;      // energy coefficient of the CPU architecture
    double cycles_per_sample = 0.0;   // CPU cycles per data unit
    double cpu_frequency = 0.0;       // cycles per second
    double capacity = 0.0;            // total CPU cycles available this round
    double bandwidth = 0.0;
    double tx_power = 0.0;
    double channel_gain = 0.0;

    bool operator==(const ServerSpec&) const = default;
};

// A complete allocation problem. Validated on construction and immutable
// afterwards; ids of servers and tasks are rewritten to their positions.
class Instance {
public:
    // Throws ValidationError naming the violated invariant.
    Instance(std::vector<ServerSpec> servers, std::vector<TaskSpec> tasks,
             double intermediary_rate, double noise);

    std::span<const ServerSpec> servers() const noexcept { return servers_; }
    std::span<const TaskSpec> tasks() const noexcept { return tasks_; }
    const ServerSpec& server(ServerIndex i) const { return servers_.at(i); }
    const TaskSpec& task(TaskIndex j) const { return tasks_.at(j); }

    std::size_t num_servers() const noexcept { return servers_.size(); }
    std::size_t num_tasks() const noexcept { return tasks_.size(); }

    double intermediary_rate() const noexcept { return intermediary_rate_; }
    double noise() const noexcept { return noise_; }

    bool operator==(const Instance&) const = default;

private:
    std::vector<ServerSpec> servers_;
    std::vector<TaskSpec> tasks_;
    double intermediary_rate_;
    double noise_;
};

// Checks shape and index range only (not C1/C2). Throws ValidationError.
void validate_assignment(const Instance& inst, std::span<const ServerIndex> assignment);

// An assignment together with its objective value. Build through
// make_allocation (allocation.hpp) so the two stay consistent.
struct Allocation {
    Assignment assignment;
    double total_utility = 0.0;

    std::size_t assigned_count() const;
    bool operator==(const Allocation&) const = default;
};

} // namespace edgemta

#endif // EDGEMTA_DOMAIN_HPP
