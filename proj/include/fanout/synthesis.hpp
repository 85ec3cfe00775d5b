#pragma once

#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fanout/decompose.hpp"
#include "fanout/schedule.hpp"

namespace fanout {

// Controlled application of a multi-qubit circuit: apply u_circuit iff the
// control qubit is |1>. u_circuit must never touch the control and must be
// over the basis {1q, CNOT}.
struct ControlledUSpec {
    int control = 0;
    Circuit u_circuit;
};

inline void check_spec(const ControlledUSpec& spec) {
    require_valid(spec.u_circuit);
    if (spec.control < 0 || spec.control >= spec.u_circuit.num_qubits)
        throw std::invalid_argument("controlled-u: control out of range");
    for (const Gate& g : spec.u_circuit.gates) {
        if (!is_single_qubit(g.kind) && g.kind != GateKind::CNOT)
            throw std::invalid_argument("controlled-u: u_circuit must be over {1q, CNOT}");
        for (int q : g.qubits)
            if (q == spec.control)
                throw std::invalid_argument("controlled-u: u_circuit touches the control");
    }
}

// Simultaneous shared-control single-qubit gates: exactly five moments
// regardless of how many (target, U) pairs share the control.
//   {C_i} | fan-out | {B_i} | fan-out | {A_i} + P(sum alpha_i) on control
inline ScheduledCircuit synth_shared_1q(int control,
                                        const std::vector<std::pair<int, ComplexMatrix>>& pairs,
                                        int num_qubits) {
    std::set<int> seen{control};
    for (const auto& [t, u] : pairs)
        if (!seen.insert(t).second)
            throw std::invalid_argument("synth_shared_1q: duplicate target");

    ScheduledCircuit s;
    s.num_qubits = num_qubits;
    s.label = "shared-1q";
    s.moments.resize(5);
    std::vector<int> targets;
    double alpha_sum = 0.0;
    for (const auto& [t, u] : pairs) {
        AbcDecomposition d = abc(u);
        s.moments[0].gates.push_back(Gate::u(t, d.c));
        s.moments[2].gates.push_back(Gate::u(t, d.b));
        s.moments[4].gates.push_back(Gate::u(t, d.a));
        alpha_sum += d.alpha;
        targets.push_back(t);
    }
    s.moments[1].gates.push_back(Gate::fanout(control, targets));
    s.moments[3].gates.push_back(Gate::fanout(control, targets));
    s.moments[4].gates.push_back(Gate::p(control, alpha_sum));
    return s;
}

// Simultaneous shared-control Toffolis: exactly twelve moments regardless of
// the number of (control_i, target_i) pairs. The shared-control T gates merge
// into a single P(r*pi/4).
inline ScheduledCircuit synth_shared_toffoli(int shared,
                                             const std::vector<std::pair<int, int>>& pairs,
                                             int num_qubits) {
    std::set<int> seen{shared};
    for (const auto& [ci, ti] : pairs) {
        if (!seen.insert(ci).second || !seen.insert(ti).second)
            throw std::invalid_argument("synth_shared_toffoli: qubit collision");
    }

    ScheduledCircuit s;
    s.num_qubits = num_qubits;
    s.label = "shared-toffoli";
    s.moments.resize(12);
    std::vector<int> ts, cs;
    for (const auto& [ci, ti] : pairs) {
        ts.push_back(ti);
        cs.push_back(ci);
    }
    for (const auto& [ci, ti] : pairs) {
        s.moments[0].gates.push_back(Gate::h(ti));
        s.moments[1].gates.push_back(Gate::cnot(ci, ti));
        s.moments[2].gates.push_back(Gate::tdg(ti));
        s.moments[4].gates.push_back(Gate::t(ti));
        s.moments[5].gates.push_back(Gate::cnot(ci, ti));
        s.moments[6].gates.push_back(Gate::tdg(ti));
        s.moments[8].gates.push_back(Gate::t(ci));
        s.moments[8].gates.push_back(Gate::t(ti));
        s.moments[10].gates.push_back(Gate::tdg(ci));
        s.moments[10].gates.push_back(Gate::h(ti));
    }
    s.moments[3].gates.push_back(Gate::fanout(shared, ts));
    s.moments[7].gates.push_back(Gate::fanout(shared, ts));
    s.moments[9].gates.push_back(Gate::fanout(shared, cs));
    s.moments[10].gates.push_back(Gate::p(shared, pairs.size() * M_PI / 4.0));
    s.moments[11].gates.push_back(Gate::fanout(shared, cs));
    return s;
}

namespace detail {

struct LayerSplit {
    std::vector<std::pair<int, ComplexMatrix>> singles;
    std::vector<std::pair<int, int>> cnots;
};

inline LayerSplit split_layer(const Moment& m) {
    LayerSplit out;
    for (const Gate& g : m.gates) {
        if (is_single_qubit(g.kind))
            out.singles.emplace_back(g.qubits[0], single_qubit_matrix(g));
        else if (g.kind == GateKind::CNOT)
            out.cnots.emplace_back(g.qubits[0], g.qubits[1]);
        else
            throw std::invalid_argument("synthesis: unsupported gate kind in u_circuit");
    }
    return out;
}

}  // namespace detail

// Controlled-U synthesis via fan-out. The input circuit is canonicalized into
// layers by asap_schedule; a pure single-qubit layer costs 5 moments, a pure
// CNOT layer 12, a mixed layer 17 (single-qubit block, then Toffoli block).
// Total depth is at most 17 * depth(U) and no ancilla qubits are used.
inline ScheduledCircuit synth_controlled_u(const ControlledUSpec& spec) {
    check_spec(spec);
    ScheduledCircuit layers = asap_schedule(spec.u_circuit);
    ScheduledCircuit out;
    out.num_qubits = spec.u_circuit.num_qubits;
    out.label = "controlled-" + spec.u_circuit.label;
    for (const Moment& layer : layers.moments) {
        detail::LayerSplit split = detail::split_layer(layer);
        if (!split.singles.empty()) {
            ScheduledCircuit block =
                synth_shared_1q(spec.control, split.singles, out.num_qubits);
            for (Moment& m : block.moments) out.moments.push_back(std::move(m));
        }
        if (!split.cnots.empty()) {
            ScheduledCircuit block =
                synth_shared_toffoli(spec.control, split.cnots, out.num_qubits);
            for (Moment& m : block.moments) out.moments.push_back(std::move(m));
        }
    }
    return out;
}

// Serialization baseline and equivalence oracle: every gate of u_circuit is
// replaced in program order by its controlled form (ABC block for 1q gates,
// Toffoli for CNOTs). Each replacement is one scheduling block.
inline Circuit reference_controlled_u(const ControlledUSpec& spec) {
    check_spec(spec);
    Circuit out(spec.u_circuit.num_qubits, "controlled-" + spec.u_circuit.label + "-serial");
    int next_block = 0;
    for (const Gate& g : spec.u_circuit.gates) {
        int blk = next_block++;
        auto add = [&](Gate h) {
            h.block = blk;
            out.add(std::move(h));
        };
        if (g.kind == GateKind::CNOT) {
            add(Gate::ccx(spec.control, g.qubits[0], g.qubits[1]));
        } else {
            int t = g.qubits[0];
            AbcDecomposition d = abc(single_qubit_matrix(g));
            add(Gate::u(t, d.c));
            add(Gate::cnot(spec.control, t));
            add(Gate::u(t, d.b));
            add(Gate::cnot(spec.control, t));
            add(Gate::u(t, d.a));
            add(Gate::p(spec.control, d.alpha));
        }
    }
    return out;
}

// Per-gate blocks of the serialized baseline, ready for
// block_sequential_schedule.
inline std::vector<Circuit> serialized_blocks(const ControlledUSpec& spec) {
    check_spec(spec);
    std::vector<Circuit> blocks;
    for (const Gate& g : spec.u_circuit.gates) {
        Circuit u(spec.u_circuit.num_qubits);
        u.add(g);
        ControlledUSpec one{spec.control, std::move(u)};
        blocks.push_back(expand(reference_controlled_u(one)));
    }
    return blocks;
}

}  // namespace fanout
