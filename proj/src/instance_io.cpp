#include "edgemta/instance_io.hpp"

#include "edgemta/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace edgemta {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::size_t line_of(std::string_view text, std::size_t byte) {
    byte = std::min(byte, text.size());
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + byte, '\n'));
}

const json& field(const json& obj, const char* key, const std::string& path) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        throw ParseError("missing field '" + path + key + "'");
    }
    return *it;
}

double number(const json& obj, const char* key, const std::string& path) {
    const json& v = field(obj, key, path);
    if (!v.is_number()) {
        throw ParseError("field '" + path + key + "' must be a number");
    }
    return v.get<double>();
}

std::size_t index(const json& obj, const char* key, const std::string& path) {
    const json& v = field(obj, key, path);
    if (!v.is_number_integer() || v.get<long long>() < 0) {
        throw ParseError("field '" + path + key + "' must be a non-negative integer");
    }
    return v.get<std::size_t>();
}

const json& array(const json& obj, const char* key) {
    const json& v = field(obj, key, "");
    if (!v.is_array()) {
        throw ParseError(std::string("field '") + key + "' must be an array");
    }
    return v;
}

} // namespace

Instance parse_instance(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(e.what(), line_of(text, e.byte == 0 ? 0 : e.byte - 1));
    }
    if (!doc.is_object()) {
        throw ParseError("instance document must be a JSON object", 1);
    }

    std::vector<ServerSpec> servers;
    const json& jservers = array(doc, "servers");
    for (std::size_t i = 0; i < jservers.size(); ++i) {
        const json& s = jservers[i];
        const std::string path = "servers[" + std::to_string(i) + "].";
        if (!s.is_object()) {
            throw ParseError("'" + path.substr(0, path.size() - 1) + "' must be an object");
        }
        ServerSpec spec;
        spec.id = i;
        spec.cpu_arch_coeff = number(s, "alpha", path);
        spec.cycles_per_sample = number(s, "theta", path);
        spec.cpu_frequency = number(s, "f", path);
        spec.capacity = number(s, "mu", path);
        spec.bandwidth = number(s, "B", path);
        spec.tx_power = number(s, "H", path);
        spec.channel_gain = number(s, "G", path);
        servers.push_back(spec);
    }

    std::vector<TaskSpec> tasks;
    const json& jtasks = array(doc, "tasks");
    for (std::size_t j = 0; j < jtasks.size(); ++j) {
        const json& t = jtasks[j];
        const std::string path = "tasks[" + std::to_string(j) + "].";
        if (!t.is_object()) {
            throw ParseError("'" + path.substr(0, path.size() - 1) + "' must be an object");
        }
        TaskSpec spec;
        spec.id = j;
        spec.unit_price = number(t, "p", path);
        spec.data_size = number(t, "D", path);
        spec.deadline = number(t, "tau_e", path);
        spec.origin_server = index(t, "origin", path);
        tasks.push_back(spec);
    }

    return Instance(std::move(servers), std::move(tasks), number(doc, "lambda", ""), number(doc, "delta", ""));
}

Instance load_instance(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open instance file " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

std::string serialize_instance(const Instance& inst) {
    ordered_json doc;
    doc["lambda"] = inst.intermediary_rate();
    doc["delta"] = inst.noise();
    doc["servers"] = ordered_json::array();
    for (const auto& s : inst.servers()) {
        ordered_json js;
        js["alpha"] = s.cpu_arch_coeff;
        js["theta"] = s.cycles_per_sample;
        js["f"] = s.cpu_frequency;
        js["mu"] = s.capacity;
        js["B"] = s.bandwidth;
        js["H"] = s.tx_power;
        js["G"] = s.channel_gain;
        doc["servers"].push_back(std::move(js));
    }
    doc["tasks"] = ordered_json::array();
    for (const auto& t : inst.tasks()) {
        ordered_json jt;
        jt["p"] = t.unit_price;
        jt["D"] = t.data_size;
        jt["tau_e"] = t.deadline;
        jt["origin"] = t.origin_server;
        doc["tasks"].push_back(std::move(jt));
    }
    return doc.dump(2) + "\n";
}

void save_instance(const Instance& inst, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw Error("cannot write instance file " + path.string());
    }
    out << serialize_instance(inst);
}

} // namespace edgemta
