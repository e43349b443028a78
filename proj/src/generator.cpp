#include "edgemta/generator.hpp"

#include "edgemta/error.hpp"

#include <cmath>
#include <random>
#include <string>
#include <vector>

namespace edgemta {

namespace {

void check_range(const Range& r, const char* name) {
    if (!std::isfinite(r.lo) || !std::isfinite(r.hi) || r.lo <= 0.0 || r.hi < r.lo) {
        throw ValidationError(std::string("range ") + name + " must satisfy 0 < lo <= hi (got [" +
                              std::to_string(r.lo) + ", " + std::to_string(r.hi) + "])");
    }
}

double draw(std::mt19937_64& rng, const Range& r) {
    if (r.lo == r.hi) {
        return r.lo;
    }
    return std::uniform_real_distribution<double>(r.lo, r.hi)(rng);
}

} // namespace

GeneratorParams GeneratorParams::baseline() { return GeneratorParams{}; }

GeneratorParams GeneratorParams::compact(std::size_t servers, std::size_t tasks) {
    GeneratorParams p;
    p.num_servers = servers;
    p.num_tasks = tasks;
    p.capacity = {0.2, 0.4};
    p.deadline = {0.01, 1.0};
    return p;
}

void GeneratorParams::validate() const {
    if (num_servers == 0 || num_servers > num_tasks) {
        throw ValidationError("C4: need 0 < servers <= tasks (got " + std::to_string(num_servers) + " servers, " +
                              std::to_string(num_tasks) + " tasks)");
    }
    check_range(unit_price, "unit_price");
    check_range(data_size, "data_size");
    check_range(deadline, "deadline");
    check_range(cpu_frequency, "cpu_frequency");
    check_range(tx_power, "tx_power");
    check_range(channel_gain, "channel_gain");
    check_range(bandwidth, "bandwidth");
    check_range(capacity, "capacity");
    if (!(cycles_per_sample > 0.0) || !(cpu_arch_coeff > 0.0)) {
        throw ValidationError("theta and cpu alpha must be > 0");
    }
    if (!(noise > 0.0 && noise <= 1.0)) {
        throw ValidationError("delta must lie in (0, 1]");
    }
    if (!(intermediary_rate >= 0.0 && intermediary_rate < 1.0)) {
        throw ValidationError("lambda must lie in [0, 1)");
    }
}

Instance generate_instance(const GeneratorParams& params, std::uint64_t seed) {
    params.validate();
    std::mt19937_64 rng(seed);

    std::vector<ServerSpec> servers(params.num_servers);
    for (std::size_t i = 0; i < servers.size(); ++i) {
        auto& s = servers[i];
        s.id = i;
        s.cpu_arch_coeff = params.cpu_arch_coeff;
        s.cycles_per_sample = params.cycles_per_sample;
        s.cpu_frequency = draw(rng, params.cpu_frequency);
        s.capacity = draw(rng, params.capacity);
        s.bandwidth = draw(rng, params.bandwidth);
        s.tx_power = draw(rng, params.tx_power);
        s.channel_gain = draw(rng, params.channel_gain);
    }

    std::uniform_int_distribution<std::size_t> origin(0, params.num_servers - 1);
    std::vector<TaskSpec> tasks(params.num_tasks);
    for (std::size_t j = 0; j < tasks.size(); ++j) {
        auto& t = tasks[j];
        t.id = j;
        t.unit_price = draw(rng, params.unit_price);
        t.data_size = draw(rng, params.data_size);
        t.deadline = draw(rng, params.deadline);
        t.origin_server = origin(rng);
    }
    return Instance(std::move(servers), std::move(tasks), params.intermediary_rate, params.noise);
}

Instance scale_instance(const Instance& inst, double price_scale, double data_scale) {
    if (!(price_scale > 0.0) || !(data_scale > 0.0)) {
        throw ValidationError("scale factors must be > 0");
    }
    std::vector<TaskSpec> tasks(inst.tasks().begin(), inst.tasks().end());
    for (auto& t : tasks) {
        t.unit_price *= price_scale;
        t.data_size *= data_scale;
    }
    return Instance(std::vector<ServerSpec>(inst.servers().begin(), inst.servers().end()), std::move(tasks),
                    inst.intermediary_rate(), inst.noise());
}

} // namespace edgemta
