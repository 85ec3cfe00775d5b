#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fanout/complex_matrix.hpp"

namespace fanout {

enum class GateKind {
    X,
    H,
    T,
    TDG,
    RZ,
    P,
    RY,
    U,
    CNOT,
    SWAP,
    CCX,
    CSWAP,
    FANOUT,
    MCX_FANOUT,
    MEASURE,
};

inline const char* gate_name(GateKind k) {
    switch (k) {
        case GateKind::X: return "x";
        case GateKind::H: return "h";
        case GateKind::T: return "t";
        case GateKind::TDG: return "tdg";
        case GateKind::RZ: return "rz";
        case GateKind::P: return "p";
        case GateKind::RY: return "ry";
        case GateKind::U: return "u";
        case GateKind::CNOT: return "cx";
        case GateKind::SWAP: return "swap";
        case GateKind::CCX: return "ccx";
        case GateKind::CSWAP: return "cswap";
        case GateKind::FANOUT: return "fanout";
        case GateKind::MCX_FANOUT: return "mcx_fanout";
        case GateKind::MEASURE: return "measure";
    }
    return "?";
}

inline std::optional<GateKind> gate_kind_from_name(const std::string& s) {
    static const std::pair<const char*, GateKind> table[] = {
        {"x", GateKind::X},         {"h", GateKind::H},
        {"t", GateKind::T},         {"tdg", GateKind::TDG},
        {"rz", GateKind::RZ},       {"p", GateKind::P},
        {"ry", GateKind::RY},       {"u", GateKind::U},
        {"cx", GateKind::CNOT},     {"swap", GateKind::SWAP},
        {"ccx", GateKind::CCX},     {"cswap", GateKind::CSWAP},
        {"fanout", GateKind::FANOUT}, {"mcx_fanout", GateKind::MCX_FANOUT},
        {"measure", GateKind::MEASURE},
    };
    for (auto& [name, kind] : table)
        if (s == name) return kind;
    return std::nullopt;
}

inline bool is_single_qubit(GateKind k) {
    switch (k) {
        case GateKind::X:
        case GateKind::H:
        case GateKind::T:
        case GateKind::TDG:
        case GateKind::RZ:
        case GateKind::P:
        case GateKind::RY:
        case GateKind::U: return true;
        default: return false;
    }
}

inline bool is_diagonal(GateKind k) {
    return k == GateKind::RZ || k == GateKind::P || k == GateKind::T || k == GateKind::TDG;
}

// A gate application. `qubits` lists controls before targets. `block`
// groups gates that came from one expansion (see schedule.hpp); -1 = none.
struct Gate {
    GateKind kind;
    std::vector<int> qubits;
    std::vector<double> params;
    std::vector<int> polarities;  // MCX_FANOUT only, one per control
    ComplexMatrix matrix;         // U only, 2x2
    int block = -1;

    int num_controls() const {
        switch (kind) {
            case GateKind::CNOT:
            case GateKind::CSWAP:
            case GateKind::FANOUT: return 1;
            case GateKind::CCX: return 2;
            case GateKind::MCX_FANOUT: return static_cast<int>(polarities.size());
            default: return 0;
        }
    }

    std::vector<int> controls() const {
        return {qubits.begin(), qubits.begin() + num_controls()};
    }
    std::vector<int> targets() const {
        return {qubits.begin() + num_controls(), qubits.end()};
    }

    bool operator==(const Gate& o) const {
        if (kind != o.kind || qubits != o.qubits || params != o.params ||
            polarities != o.polarities || block != o.block)
            return false;
        if (kind == GateKind::U) {
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j)
                    if (matrix(i, j) != o.matrix(i, j)) return false;
        }
        return true;
    }

    static Gate x(int q) { return {GateKind::X, {q}, {}, {}, {}}; }
    static Gate h(int q) { return {GateKind::H, {q}, {}, {}, {}}; }
    static Gate t(int q) { return {GateKind::T, {q}, {}, {}, {}}; }
    static Gate tdg(int q) { return {GateKind::TDG, {q}, {}, {}, {}}; }
    static Gate rz(int q, double theta) { return {GateKind::RZ, {q}, {theta}, {}, {}}; }
    static Gate p(int q, double phi) { return {GateKind::P, {q}, {phi}, {}, {}}; }
    static Gate ry(int q, double theta) { return {GateKind::RY, {q}, {theta}, {}, {}}; }
    static Gate u(int q, const ComplexMatrix& m) { return {GateKind::U, {q}, {}, {}, m}; }
    static Gate cnot(int c, int t) { return {GateKind::CNOT, {c, t}, {}, {}, {}}; }
    static Gate swap(int a, int b) { return {GateKind::SWAP, {a, b}, {}, {}, {}}; }
    static Gate ccx(int c1, int c2, int t) { return {GateKind::CCX, {c1, c2, t}, {}, {}, {}}; }
    static Gate cswap(int c, int a, int b) { return {GateKind::CSWAP, {c, a, b}, {}, {}, {}}; }
    static Gate fanout(int c, std::vector<int> targets) {
        std::vector<int> qs{c};
        qs.insert(qs.end(), targets.begin(), targets.end());
        return {GateKind::FANOUT, std::move(qs), {}, {}, {}};
    }
    static Gate mcx_fanout(std::vector<int> controls, std::vector<int> polarities,
                           std::vector<int> targets) {
        std::vector<int> qs = controls;
        qs.insert(qs.end(), targets.begin(), targets.end());
        return {GateKind::MCX_FANOUT, std::move(qs), {}, std::move(polarities), {}};
    }
    static Gate measure(int q) { return {GateKind::MEASURE, {q}, {}, {}, {}}; }
};

// 2x2 matrix of a single-qubit gate.
inline ComplexMatrix single_qubit_matrix(const Gate& g) {
    switch (g.kind) {
        case GateKind::X: return mats::x();
        case GateKind::H: return mats::h();
        case GateKind::T: return mats::t();
        case GateKind::TDG: return mats::tdg();
        case GateKind::RZ: return mats::rz(g.params.at(0));
        case GateKind::P: return mats::p(g.params.at(0));
        case GateKind::RY: return mats::ry(g.params.at(0));
        case GateKind::U: return g.matrix;
        default: throw std::invalid_argument("single_qubit_matrix: not a single-qubit gate");
    }
}

}  // namespace fanout
