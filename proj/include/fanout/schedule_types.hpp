#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "fanout/circuit.hpp"

namespace fanout {

// One timestep: gates with pairwise-disjoint qubit sets. A fan-out counts as
// one gate, so exclusive activation is enforced at gate granularity.
struct Moment {
    std::vector<Gate> gates;

    bool conflicts(const Gate& g) const {
        for (const Gate& h : gates)
            for (int q : h.qubits)
                for (int qq : g.qubits)
                    if (q == qq) return true;
        return false;
    }
};

struct ScheduledCircuit {
    int num_qubits = 0;
    std::vector<Moment> moments;
    std::string label;

    // Flattening in moment order yields a Circuit with the same unitary.
    Circuit flatten() const {
        Circuit c(num_qubits, label);
        for (const Moment& m : moments)
            for (const Gate& g : m.gates) c.add(g);
        return c;
    }
};

inline void check_moments_disjoint(const ScheduledCircuit& s) {
    for (const Moment& m : s.moments) {
        std::set<int> used;
        for (const Gate& g : m.gates)
            for (int q : g.qubits)
                if (!used.insert(q).second)
                    throw std::logic_error("moment has overlapping qubits");
    }
}

}  // namespace fanout
