#pragma once

#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fanout/gates.hpp"

namespace fanout {

// Ordered gate list over a fixed qubit count; the IR shared by all passes.
// Circuits are immutable by convention: passes return new circuits.
struct Circuit {
    int num_qubits = 0;
    std::vector<Gate> gates;
    std::string label;

    Circuit() = default;
    Circuit(int n, std::string lbl = "") : num_qubits(n), label(std::move(lbl)) {}

    Circuit& add(Gate g) {
        gates.push_back(std::move(g));
        return *this;
    }
};

inline int expected_arity(GateKind k) {
    // -1 = variable
    switch (k) {
        case GateKind::CNOT:
        case GateKind::SWAP: return 2;
        case GateKind::CCX:
        case GateKind::CSWAP: return 3;
        case GateKind::FANOUT:
        case GateKind::MCX_FANOUT: return -1;
        case GateKind::MEASURE: return 1;
        default: return 1;  // single-qubit kinds
    }
}

inline int expected_params(GateKind k) {
    switch (k) {
        case GateKind::RZ:
        case GateKind::P:
        case GateKind::RY: return 1;
        default: return 0;
    }
}

// Returns one message per violated invariant; empty means the circuit is valid.
inline std::vector<std::string> validate(const Circuit& c) {
    std::vector<std::string> diags;
    auto report = [&](std::size_t i, const std::string& msg) {
        std::ostringstream os;
        os << "gate " << i << " (" << gate_name(c.gates[i].kind) << "): " << msg;
        diags.push_back(os.str());
    };
    if (c.num_qubits < 0) diags.push_back("negative qubit count");
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
        const Gate& g = c.gates[i];
        std::set<int> seen;
        for (int q : g.qubits) {
            if (q < 0 || q >= c.num_qubits) report(i, "qubit out of range");
            if (!seen.insert(q).second) report(i, "duplicate qubit in gate");
        }
        int arity = expected_arity(g.kind);
        if (arity >= 0 && static_cast<int>(g.qubits.size()) != arity)
            report(i, "arity mismatch");
        if (g.kind == GateKind::FANOUT && g.qubits.size() < 2)
            report(i, "fanout needs a control and at least one target");
        if (g.kind == GateKind::MCX_FANOUT) {
            if (g.polarities.empty()) report(i, "mcx_fanout needs at least one control");
            for (int p : g.polarities)
                if (p != 0 && p != 1) report(i, "polarity must be 0 or 1");
            if (g.qubits.size() <= g.polarities.size())
                report(i, "mcx_fanout needs at least one target");
        }
        if (static_cast<int>(g.params.size()) != expected_params(g.kind))
            report(i, "parameter count mismatch");
        if (g.kind == GateKind::U) {
            if (g.matrix.rows() != 2 || g.matrix.cols() != 2)
                report(i, "u gate needs a 2x2 matrix");
            else if (!g.matrix.is_unitary(1e-10))
                report(i, "u matrix is not unitary");
        }
    }
    return diags;
}

inline void require_valid(const Circuit& c) {
    auto diags = validate(c);
    if (!diags.empty()) throw std::invalid_argument("invalid circuit: " + diags.front());
}

}  // namespace fanout
