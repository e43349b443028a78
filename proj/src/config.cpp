#include "edgemta/config.hpp"

#include "edgemta/error.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>

namespace edgemta {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double to_double(std::string_view v, std::size_t line, std::string_view key) {
    try {
        std::size_t used = 0;
        const std::string s(v);
        const double d = std::stod(s, &used);
        if (used == s.size()) return d;
    } catch (const std::exception&) {
    }
    throw ParseError("'" + std::string(key) + "' expects a number, got '" + std::string(v) + "'", line);
}

std::uint64_t to_uint(std::string_view v, std::size_t line, std::string_view key) {
    std::uint64_t out = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size()) {
        throw ParseError("'" + std::string(key) + "' expects an unsigned integer, got '" + std::string(v) + "'", line);
    }
    return out;
}

} // namespace

HarnessConfig parse_config(std::string_view text, HarnessConfig cfg) {
    using Setter = std::function<void(std::string_view, std::size_t, std::string_view)>;
    auto& g = cfg.generator;
    auto& l = cfg.learn;

    auto real = [](double& field) -> Setter {
        return [&field](std::string_view v, std::size_t line, std::string_view k) { field = to_double(v, line, k); };
    };
    auto count = [](std::size_t& field) -> Setter {
        return [&field](std::string_view v, std::size_t line, std::string_view k) {
            field = static_cast<std::size_t>(to_uint(v, line, k));
        };
    };

    std::map<std::string, Setter, std::less<>> setters{
        {"episodes", count(l.episodes)},
        {"alpha", real(l.learning_rate)},
        {"gamma", real(l.discount)},
        {"epsilon", real(l.epsilon)},
        {"seed", [&](std::string_view v, std::size_t line, std::string_view k) {
             l.seed = to_uint(v, line, k);
             cfg.seed_set = true;
         }},
        {"screen", [&](std::string_view v, std::size_t line, std::string_view) {
             if (v == "nonnegative") l.screen = learning::ResidualScreen::kNonNegative;
             else if (v == "deadline") l.screen = learning::ResidualScreen::kCoversDeadline;
             else throw ParseError("screen must be 'nonnegative' or 'deadline'", line);
         }},
        {"profile", [&](std::string_view v, std::size_t line, std::string_view) {
             const auto n = g.num_servers;
             const auto m = g.num_tasks;
             if (v == "baseline") g = GeneratorParams::baseline();
             else if (v == "compact") g = GeneratorParams::compact();
             else throw ParseError("profile must be 'baseline' or 'compact'", line);
             g.num_servers = n;
             g.num_tasks = m;
         }},
        {"servers", count(g.num_servers)},
        {"tasks", count(g.num_tasks)},
        {"lambda", real(g.intermediary_rate)},
        {"delta", real(g.noise)},
        {"theta", real(g.cycles_per_sample)},
        {"cpu_alpha", real(g.cpu_arch_coeff)},
    };
    const std::pair<const char*, Range*> ranges[] = {
        {"price", &g.unit_price},    {"data", &g.data_size},       {"deadline", &g.deadline},
        {"freq", &g.cpu_frequency},  {"power", &g.tx_power},       {"gain", &g.channel_gain},
        {"bandwidth", &g.bandwidth}, {"capacity", &g.capacity},
    };
    for (const auto& [name, range] : ranges) {
        setters.emplace(std::string(name) + "_min", real(range->lo));
        setters.emplace(std::string(name) + "_max", real(range->hi));
    }

    std::size_t lineno = 0;
    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string_view line = raw;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ParseError("expected 'key = value'", lineno);
        }
        const std::string_view key = trim(line.substr(0, eq));
        const std::string_view value = trim(line.substr(eq + 1));
        const auto it = setters.find(key);
        if (it == setters.end()) {
            throw ParseError("unknown config key '" + std::string(key) + "'", lineno);
        }
        it->second(value, lineno, key);
    }
    return cfg;
}

HarnessConfig load_config(const std::filesystem::path& path, HarnessConfig base) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open config file " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), std::move(base));
}

std::optional<std::uint64_t> seed_from_env() {
    const char* v = std::getenv("EDGE_MTA_SEED");
    if (v == nullptr || *v == '\0') {
        return std::nullopt;
    }
    return to_uint(v, 0, "EDGE_MTA_SEED");
}

} // namespace edgemta
