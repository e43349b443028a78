#ifndef EDGEMTA_TESTS_FIXTURES_HPP
#define EDGEMTA_TESTS_FIXTURES_HPP

#include "edgemta/domain.hpp"

#include <vector>

namespace edgemta::testing {

// Reference server: alpha 0.01, theta 0.01, f 2, B 5, H 10, G 10.
inline ServerSpec ref_server(double frequency = 2.0, double capacity = 100.0) {
    ServerSpec s;
    s.cpu_arch_coeff = 0.01;
    s.cycles_per_sample = 0.01;
    s.cpu_frequency = frequency;
    s.capacity = capacity;
    s.bandwidth = 5.0;
    s.tx_power = 10.0;
    s.channel_gain = 10.0;
    return s;
}

// Reference task: p 5, D 10.
inline TaskSpec ref_task(ServerIndex origin = 0, double deadline = 100.0, double data = 10.0) {
    TaskSpec t;
    t.unit_price = 5.0;
    t.data_size = data;
    t.deadline = deadline;
    t.origin_server = origin;
    return t;
}

inline constexpr double kLambda = 0.1;
inline constexpr double kDelta = 0.01;

inline Instance make(std::vector<ServerSpec> servers, std::vector<TaskSpec> tasks, double lambda = kLambda) {
    return Instance(std::move(servers), std::move(tasks), lambda, kDelta);
}

// One server, one own task that fits: reward 0.496.
inline Instance single_pair() { return make({ref_server()}, {ref_task()}); }

// Origin server 0 (f 2) and a faster server 1 (f 10). Task 0 comes from
// server 0; task 1 (from server 1) only keeps n <= m and is left unassigned.
inline Instance foreign_pair(double deadline = 100.0) {
    return make({ref_server(2.0), ref_server(10.0)}, {ref_task(0, deadline), ref_task(1)});
}

} // namespace edgemta::testing

#endif // EDGEMTA_TESTS_FIXTURES_HPP
