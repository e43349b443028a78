#ifndef EDGEMTA_GENERATOR_HPP
#define EDGEMTA_GENERATOR_HPP

#include "edgemta/domain.hpp"

#include <cstdint>

namespace edgemta {

struct Range {
    double lo = 0.0;
    double hi = 0.0;
};

// Sampling ranges for random instances. Every ranged quantity is drawn
// uniformly and independently; task origins are uniform over the servers.
struct GeneratorParams {
    std::size_t num_servers = 20;
    std::size_t num_tasks = 50;

    Range unit_price{1.0, 10.0};
    Range data_size{10.0, 20.0};
    Range deadline{1.0, 100.0};
    Range cpu_frequency{1.0, 10.0};
    Range tx_power{5.0, 10.0};
    Range channel_gain{5.0, 10.0};
    Range bandwidth{5.0, 10.0};
    // Per-server CPU-cycle budget mu_i for the round.
    Range capacity{200.0, 400.0};

    double cycles_per_sample = 0.01;
    double cpu_arch_coeff = 0.01;
    double noise = 0.01;
    double intermediary_rate = 0.1;

    // The 20-server / 50-task baseline settings.
    static GeneratorParams baseline();

    // Same price, data and radio ranges at a small scale where capacity and
    // deadlines actually bind: capacity x1e-3 -> [0.2, 0.4], deadline x1e-2 ->
    // [0.01, 1]. Defaults to 3 servers and 6 tasks.
    static GeneratorParams compact(std::size_t servers = 3, std::size_t tasks = 6);

    // Throws ValidationError for empty/negative ranges or n > m.
    void validate() const;
};

// Deterministic per (params, seed). Draw order: servers (f, mu, B, H, G)
// then tasks (p, D, tau_e, origin).
Instance generate_instance(const GeneratorParams& params, std::uint64_t seed);

// Multiplies every task's unit price and data size.
Instance scale_instance(const Instance& inst, double price_scale, double data_scale);

} // namespace edgemta

#endif // EDGEMTA_GENERATOR_HPP
