#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "fanout/circuit.hpp"
#include "fanout/decompose.hpp"
#include "fanout/schedule_types.hpp"

namespace fanout {

// Number of moments containing at least one gate whose kind is not excluded.
// MEASURE never counts toward depth (it terminates a wire).
inline int depth(const ScheduledCircuit& s, const std::set<GateKind>& exclude = {}) {
    int d = 0;
    for (const Moment& m : s.moments) {
        bool counted = false;
        for (const Gate& g : m.gates) {
            if (g.kind == GateKind::MEASURE) continue;
            if (exclude.count(g.kind)) continue;
            counted = true;
            break;
        }
        if (counted) ++d;
    }
    return d;
}

namespace detail {

inline bool is_control_type(GateKind k) {
    return k == GateKind::CNOT || k == GateKind::FANOUT || k == GateKind::CCX ||
           k == GateKind::MCX_FANOUT;
}

inline bool contains(const std::vector<int>& v, int q) {
    return std::find(v.begin(), v.end(), q) != v.end();
}

inline bool disjoint(const std::vector<int>& a, const std::vector<int>& b) {
    for (int q : a)
        if (contains(b, q)) return false;
    return true;
}

}  // namespace detail

// Sound-but-incomplete commutation check. Exactly two rules beyond
// disjointness: control-type gates sharing only controls commute, and
// diagonal gates commute through controls. Everything else reports false.
inline bool commutes(const Gate& g1, const Gate& g2) {
    using detail::contains;
    using detail::disjoint;
    if (g1.kind == GateKind::MEASURE || g2.kind == GateKind::MEASURE) return false;

    if (disjoint(g1.qubits, g2.qubits)) return true;

    if (detail::is_control_type(g1.kind) && detail::is_control_type(g2.kind)) {
        auto c1 = g1.controls(), t1 = g1.targets();
        auto c2 = g2.controls(), t2 = g2.targets();
        if (disjoint(t1, t2) && disjoint(t1, c2) && disjoint(c1, t2)) return true;
        return false;
    }

    auto diagonal_through_control = [](const Gate& diag, const Gate& other) {
        if (!is_diagonal(diag.kind)) return false;
        int q = diag.qubits[0];
        if (!detail::is_control_type(other.kind)) return false;
        return contains(other.controls(), q) && !contains(other.targets(), q);
    };
    if (diagonal_through_control(g1, g2) || diagonal_through_control(g2, g1)) return true;

    if (is_diagonal(g1.kind) && is_diagonal(g2.kind) && g1.qubits[0] == g2.qubits[0])
        return true;

    return false;
}

// Fine-grained list scheduler. Each gate goes to the earliest moment after
// every prior gate touching one of its qubits. Gates carrying the same block
// tag additionally issue in order (a gate never lands in an earlier moment
// than its predecessor from the same expansion), which keeps each expanded
// high-level gate at its published layer count instead of letting stray
// diagonal gates slide into unrelated columns. Untagged gates schedule
// purely by qubit dependencies.
inline ScheduledCircuit asap_schedule(const Circuit& c) {
    require_valid(c);
    ScheduledCircuit s;
    s.num_qubits = c.num_qubits;
    s.label = c.label;
    std::vector<int> qubit_frontier(c.num_qubits, 0);  // first free moment per qubit
    std::map<int, int> block_frontier;                 // last issue moment per block

    for (const Gate& g : c.gates) {
        int m = 0;
        for (int q : g.qubits) m = std::max(m, qubit_frontier[q]);
        if (g.block >= 0) {
            auto it = block_frontier.find(g.block);
            if (it != block_frontier.end()) m = std::max(m, it->second);
        }
        if (m >= static_cast<int>(s.moments.size())) s.moments.resize(m + 1);
        s.moments[m].gates.push_back(g);
        for (int q : g.qubits) qubit_frontier[q] = m + 1;
        if (g.block >= 0) block_frontier[g.block] = m;
    }
    return s;
}

// Serialized baseline: each block scheduled on its own, then concatenated.
// Total depth is the sum of the block depths.
inline ScheduledCircuit block_sequential_schedule(const std::vector<Circuit>& blocks) {
    if (blocks.empty()) return {};
    int n = blocks.front().num_qubits;
    for (const Circuit& b : blocks)
        if (b.num_qubits != n)
            throw std::invalid_argument("block_sequential_schedule: width mismatch");
    ScheduledCircuit out;
    out.num_qubits = n;
    for (const Circuit& b : blocks) {
        ScheduledCircuit s = asap_schedule(b);
        for (Moment& m : s.moments) out.moments.push_back(std::move(m));
    }
    return out;
}

namespace detail {

inline bool fanout_mergeable(const Gate& into, const Gate& g) {
    bool into_fan = into.kind == GateKind::CNOT || into.kind == GateKind::FANOUT;
    bool g_fan = g.kind == GateKind::CNOT || g.kind == GateKind::FANOUT;
    if (!into_fan || !g_fan) return false;
    if (into.qubits[0] != g.qubits[0]) return false;
    return disjoint(into.targets(), g.targets());
}

inline Gate merge_fanout(const Gate& into, const Gate& g) {
    std::vector<int> targets = into.targets();
    for (int t : g.targets()) targets.push_back(t);
    std::sort(targets.begin(), targets.end());
    Gate merged = Gate::fanout(into.qubits[0], targets);
    merged.block = into.block;
    return merged;
}

// Phase-gate angle in the P(phi) = diag(1, e^{i phi}) convention. Rz differs
// from P only by global phase, so merging mixed kinds stays equivalent up to
// global phase.
inline double p_angle(const Gate& g) {
    switch (g.kind) {
        case GateKind::T: return M_PI / 4.0;
        case GateKind::TDG: return -M_PI / 4.0;
        case GateKind::P:
        case GateKind::RZ: return g.params.at(0);
        default: throw std::logic_error("p_angle: not a diagonal gate");
    }
}

inline Gate merge_diagonal(const Gate& into, const Gate& g) {
    Gate merged = (into.kind == GateKind::RZ && g.kind == GateKind::RZ)
                      ? Gate::rz(into.qubits[0], into.params[0] + g.params[0])
                      : Gate::p(into.qubits[0], p_angle(into) + p_angle(g));
    merged.block = into.block;
    return merged;
}

}  // namespace detail

// Alignment pass: repeatedly commutes CNOT/FANOUT gates sharing a control
// leftward and merges them into a single fan-out step; adjacent-reachable
// diagonal gates on one qubit collapse the same way (T x T on a shared
// control becomes one phase gate). The gate list is re-canonicalized by
// asap_schedule after every merge until a fixed point is reached, so the
// result is deterministic: earlier program order wins ties.
inline Circuit fanout_align(const Circuit& c) {
    for (const Gate& g : c.gates) {
        if (is_single_qubit(g.kind) || g.kind == GateKind::CNOT ||
            g.kind == GateKind::FANOUT || g.kind == GateKind::MEASURE)
            continue;
        throw std::invalid_argument("fanout_align: circuit must be over {1q, CNOT, FANOUT}");
    }

    Circuit cur = c;
    bool changed = true;
    while (changed) {
        changed = false;
        cur = asap_schedule(cur).flatten();
        auto& gs = cur.gates;
        for (std::size_t i = 0; i < gs.size() && !changed; ++i) {
            const Gate& g = gs[i];
            bool fan = g.kind == GateKind::CNOT || g.kind == GateKind::FANOUT;
            bool diag = is_diagonal(g.kind);
            if (!fan && !diag) continue;
            // Walk left over commuting gates; remember the leftmost merge partner.
            std::ptrdiff_t best = -1;
            for (std::ptrdiff_t j = static_cast<std::ptrdiff_t>(i) - 1; j >= 0; --j) {
                const Gate& h = gs[j];
                bool mergeable = fan ? detail::fanout_mergeable(h, g)
                                     : (is_diagonal(h.kind) && h.qubits[0] == g.qubits[0]);
                if (mergeable) best = j;
                if (!commutes(h, g)) break;
            }
            if (best >= 0) {
                gs[best] = fan ? detail::merge_fanout(gs[best], g)
                               : detail::merge_diagonal(gs[best], g);
                gs.erase(gs.begin() + i);
                changed = true;
            }
        }
    }
    return cur;
}

}  // namespace fanout
