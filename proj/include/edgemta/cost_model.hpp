#ifndef EDGEMTA_COST_MODEL_HPP
#define EDGEMTA_COST_MODEL_HPP

#include "edgemta/domain.hpp"

namespace edgemta::cost {

// CPU cycles needed to run `task` on `server`: D_j * theta_i.
double cycles_required(const ServerSpec& server, const TaskSpec& task);

// alpha_i * cycles * f_i^2
double compute_energy(const ServerSpec& server, const TaskSpec& task);

// cycles / f_i
double compute_time(const ServerSpec& server, const TaskSpec& task);

// Shannon bound B_i * log2(1 + H_i G_i / delta^2). `noise` is delta itself,
// squared here; no dB conversion.
double transmission_rate(const ServerSpec& server, double noise);

// Time for `server` to ship the task's data: D_j / r_i.
double comm_time(const ServerSpec& server, const TaskSpec& task, double noise);

// H_i * comm_time
double comm_energy(const ServerSpec& server, const TaskSpec& task, double noise);

struct PairCosts {
    double cycles = 0.0;
    double e_comp = 0.0;
    double t_comp = 0.0;
    double rate = 0.0;
    double t_comm = 0.0;
    double e_comm = 0.0;
};

PairCosts pair_costs(const ServerSpec& server, const TaskSpec& task, double noise);

} // namespace edgemta::cost

#endif // EDGEMTA_COST_MODEL_HPP
