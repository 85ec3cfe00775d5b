#pragma once

#include <fstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "fanout/circuit.hpp"
#include "fanout/schedule_types.hpp"

namespace fanout {

// Circuit JSON v1:
//   {"version":1,"num_qubits":N,"label":"...","gates":[...]}
// Each gate: {"name":..., "qubits":[...]} plus, where applicable,
// "params":[...], "polarities":[0|1,...] with "targets":[...] (mcx_fanout),
// "matrix":[[re,im]x4] (u), "block":int (scheduling tag).
// For "fanout", qubits[0] is the control. Scheduled circuits replace "gates"
// with "moments": a list of gate lists.

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline nlohmann::json gate_to_json(const Gate& g) {
    nlohmann::json j;
    j["name"] = gate_name(g.kind);
    if (g.kind == GateKind::MCX_FANOUT) {
        j["qubits"] = g.controls();
        j["targets"] = g.targets();
        j["polarities"] = g.polarities;
    } else {
        j["qubits"] = g.qubits;
    }
    if (!g.params.empty()) j["params"] = g.params;
    if (g.kind == GateKind::U) {
        nlohmann::json m = nlohmann::json::array();
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t c = 0; c < 2; ++c)
                m.push_back({g.matrix(r, c).real(), g.matrix(r, c).imag()});
        j["matrix"] = m;
    }
    if (g.block >= 0) j["block"] = g.block;
    return j;
}

inline Gate gate_from_json(const nlohmann::json& j) {
    if (!j.contains("name") || !j["name"].is_string())
        throw ParseError("gate is missing a name");
    std::string name = j["name"].get<std::string>();
    auto kind = gate_kind_from_name(name);
    if (!kind) throw ParseError("unknown gate name: " + name);

    Gate g;
    g.kind = *kind;
    if (!j.contains("qubits") || !j["qubits"].is_array())
        throw ParseError("gate " + name + " is missing qubits");
    g.qubits = j["qubits"].get<std::vector<int>>();
    if (g.kind == GateKind::MCX_FANOUT) {
        if (!j.contains("polarities") || !j.contains("targets"))
            throw ParseError("mcx_fanout needs polarities and targets");
        g.polarities = j["polarities"].get<std::vector<int>>();
        auto targets = j["targets"].get<std::vector<int>>();
        if (g.qubits.size() != g.polarities.size())
            throw ParseError("mcx_fanout: one polarity per control required");
        g.qubits.insert(g.qubits.end(), targets.begin(), targets.end());
    }
    if (j.contains("params")) g.params = j["params"].get<std::vector<double>>();
    if (g.kind == GateKind::U) {
        if (!j.contains("matrix") || !j["matrix"].is_array() || j["matrix"].size() != 4)
            throw ParseError("u gate needs a matrix of 4 [re,im] pairs");
        g.matrix = ComplexMatrix(2, 2);
        for (std::size_t i = 0; i < 4; ++i) {
            const auto& e = j["matrix"][i];
            if (!e.is_array() || e.size() != 2) throw ParseError("bad matrix entry");
            g.matrix(i / 2, i % 2) = Complex(e[0].get<double>(), e[1].get<double>());
        }
    }
    if (j.contains("block")) g.block = j["block"].get<int>();

    int arity = expected_arity(g.kind);
    if (arity >= 0 && static_cast<int>(g.qubits.size()) != arity)
        throw ParseError("arity mismatch for gate " + name);
    if (g.kind == GateKind::FANOUT && g.qubits.size() < 2)
        throw ParseError("fanout needs a control and at least one target");
    if (static_cast<int>(g.params.size()) != expected_params(g.kind))
        throw ParseError("parameter count mismatch for gate " + name);
    return g;
}

inline nlohmann::json parse_document(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("json parse error: ") + e.what());
    }
    if (!j.is_object() || !j.contains("version") || j["version"].get<int>() != 1)
        throw ParseError("expected a version-1 circuit document");
    if (!j.contains("num_qubits")) throw ParseError("missing num_qubits");
    return j;
}

}  // namespace detail

inline std::string to_json(const Circuit& c) {
    nlohmann::json j;
    j["version"] = 1;
    j["num_qubits"] = c.num_qubits;
    j["label"] = c.label;
    j["gates"] = nlohmann::json::array();
    for (const Gate& g : c.gates) j["gates"].push_back(detail::gate_to_json(g));
    return j.dump(2);
}

inline Circuit from_json(const std::string& text) {
    nlohmann::json j = detail::parse_document(text);
    Circuit c(j["num_qubits"].get<int>(), j.value("label", std::string()));
    if (!j.contains("gates") || !j["gates"].is_array())
        throw ParseError("missing gates array");
    for (const auto& gj : j["gates"]) c.add(detail::gate_from_json(gj));
    return c;
}

inline std::string to_json(const ScheduledCircuit& s) {
    nlohmann::json j;
    j["version"] = 1;
    j["num_qubits"] = s.num_qubits;
    j["label"] = s.label;
    j["moments"] = nlohmann::json::array();
    for (const Moment& m : s.moments) {
        nlohmann::json mj = nlohmann::json::array();
        for (const Gate& g : m.gates) mj.push_back(detail::gate_to_json(g));
        j["moments"].push_back(mj);
    }
    return j.dump(2);
}

inline ScheduledCircuit scheduled_from_json(const std::string& text) {
    nlohmann::json j = detail::parse_document(text);
    ScheduledCircuit s;
    s.num_qubits = j["num_qubits"].get<int>();
    s.label = j.value("label", std::string());
    if (!j.contains("moments") || !j["moments"].is_array())
        throw ParseError("missing moments array");
    for (const auto& mj : j["moments"]) {
        Moment m;
        for (const auto& gj : mj) m.gates.push_back(detail::gate_from_json(gj));
        s.moments.push_back(std::move(m));
    }
    return s;
}

// File helpers shared by the CLI.
inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return text;
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << text;
}

}  // namespace fanout
