#include "edgemta/cost_model.hpp"

#include <cmath>

namespace edgemta::cost {

double cycles_required(const ServerSpec& server, const TaskSpec& task) {
    return task.data_size * server.cycles_per_sample;
}

double compute_energy(const ServerSpec& server, const TaskSpec& task) {
    const double f = server.cpu_frequency;
    return server.cpu_arch_coeff * cycles_required(server, task) * f * f;
}

double compute_time(const ServerSpec& server, const TaskSpec& task) {
    return cycles_required(server, task) / server.cpu_frequency;
}

double transmission_rate(const ServerSpec& server, double noise) {
    const double snr = server.tx_power * server.channel_gain / (noise * noise);
    return server.bandwidth * std::log2(1.0 + snr);
}

double comm_time(const ServerSpec& server, const TaskSpec& task, double noise) {
    return task.data_size / transmission_rate(server, noise);
}

double comm_energy(const ServerSpec& server, const TaskSpec& task, double noise) {
    return server.tx_power * comm_time(server, task, noise);
}

PairCosts pair_costs(const ServerSpec& server, const TaskSpec& task, double noise) {
    PairCosts c;
    c.cycles = cycles_required(server, task);
    c.e_comp = compute_energy(server, task);
    c.t_comp = compute_time(server, task);
    c.rate = transmission_rate(server, noise);
    c.t_comm = comm_time(server, task, noise);
    c.e_comm = comm_energy(server, task, noise);
    return c;
}

} // namespace edgemta::cost
