#pragma once

#include <cmath>
#include <stdexcept>

#include "fanout/circuit.hpp"
#include "fanout/complex_matrix.hpp"

namespace fanout {

struct ZyzAngles {
    double alpha;  // global phase
    double beta;   // first Rz
    double gamma;  // Ry, in [0, pi]
    double delta;  // last Rz
};

// U = e^{i alpha} Rz(beta) Ry(gamma) Rz(delta).
// Degenerate branches (gamma = 0 or pi) only determine beta+delta resp.
// beta-delta; they are canonicalized to delta = 0 resp. beta = 0 so golden
// tests are deterministic. Correctness is carried by the reconstruction
// identity, not by specific angle values.
inline ZyzAngles zyz(const ComplexMatrix& u) {
    if (u.rows() != 2 || u.cols() != 2 || !u.is_unitary(1e-10))
        throw std::invalid_argument("zyz: input is not a 2x2 unitary");
    Complex det = u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0);
    double alpha = 0.5 * std::arg(det);
    Complex ph = std::polar(1.0, -alpha);
    Complex v00 = ph * u(0, 0), v10 = ph * u(1, 0);

    ZyzAngles r{};
    r.alpha = alpha;
    r.gamma = 2.0 * std::atan2(std::abs(v10), std::abs(v00));
    constexpr double kDegenerate = 1e-12;
    if (std::abs(v10) < kDegenerate) {  // gamma ~ 0: only beta+delta fixed
        r.beta = -2.0 * std::arg(v00);
        r.delta = 0.0;
        r.gamma = 0.0;
    } else if (std::abs(v00) < kDegenerate) {  // gamma ~ pi: only beta-delta fixed
        r.beta = 0.0;
        r.delta = -2.0 * std::arg(v10);
        r.gamma = M_PI;
    } else {
        r.beta = std::arg(v10) - std::arg(v00);
        r.delta = -std::arg(v10) - std::arg(v00);
    }
    return r;
}

// The (A, B, C, alpha) tuple realizing Controlled-U with two CNOTs:
// A B C = I and e^{i alpha} A X B X C = U.
struct AbcDecomposition {
    ComplexMatrix a, b, c;
    double alpha;
};

inline AbcDecomposition abc(const ComplexMatrix& u) {
    ZyzAngles z = zyz(u);
    AbcDecomposition d{};
    d.a = mats::rz(z.beta) * mats::ry(z.gamma / 2.0);
    d.b = mats::ry(-z.gamma / 2.0) * mats::rz(-(z.delta + z.beta) / 2.0);
    d.c = mats::rz((z.delta - z.beta) / 2.0);
    d.alpha = z.alpha;
    return d;
}

// Standard Toffoli decomposition over {1q, CNOT}: 6 CNOTs, an H pair, and
// seven T/Tdg gates, emitted column-major so the fine-grained schedule of the
// block has exactly 12 moments. Qubits: controls a, b; target c.
inline Circuit toffoli_network(int a = 0, int b = 1, int c = 2, int num_qubits = 3,
                               int block = 0) {
    Circuit out(num_qubits, "toffoli");
    auto add = [&](Gate g) {
        g.block = block;
        out.add(std::move(g));
    };
    add(Gate::h(c));
    add(Gate::cnot(b, c));
    add(Gate::tdg(c));
    add(Gate::cnot(a, c));
    add(Gate::t(c));
    add(Gate::cnot(b, c));
    add(Gate::tdg(c));
    add(Gate::cnot(a, c));
    add(Gate::t(c));
    add(Gate::t(b));
    add(Gate::cnot(a, b));
    add(Gate::h(c));
    add(Gate::t(a));
    add(Gate::tdg(b));
    add(Gate::cnot(a, b));
    return out;
}

// Controlled-SWAP as a triple-XOR. With controlled_outer the outer XORs keep
// the control (three Toffolis); without it they drop to plain CNOTs, which
// leaves the unitary unchanged and is the cheaper form.
inline Circuit cswap_network(int control, int a, int b, bool controlled_outer,
                             int num_qubits = -1) {
    if (control == a || control == b || a == b)
        throw std::invalid_argument("cswap_network: duplicate qubits");
    int n = num_qubits >= 0 ? num_qubits : std::max({control, a, b}) + 1;
    Circuit out(n, "cswap");
    if (controlled_outer) {
        out.add(Gate::ccx(control, b, a));
        out.add(Gate::ccx(control, a, b));
        out.add(Gate::ccx(control, b, a));
    } else {
        out.add(Gate::cnot(b, a));
        out.add(Gate::ccx(control, a, b));
        out.add(Gate::cnot(b, a));
    }
    return out;
}

// Rewrites a circuit over the basis {1q, CNOT, FANOUT, MCX_FANOUT}.
// SWAP -> 3 CNOTs, CCX -> toffoli_network, CSWAP -> outer CNOTs + CCX.
// Every source gate's expansion becomes one scheduling block.
inline Circuit expand(const Circuit& c) {
    Circuit out(c.num_qubits, c.label);
    int next_block = 0;
    for (const Gate& g : c.gates) {
        int blk = next_block++;
        auto add = [&](Gate h) {
            h.block = blk;
            out.add(std::move(h));
        };
        switch (g.kind) {
            case GateKind::SWAP:
                add(Gate::cnot(g.qubits[0], g.qubits[1]));
                add(Gate::cnot(g.qubits[1], g.qubits[0]));
                add(Gate::cnot(g.qubits[0], g.qubits[1]));
                break;
            case GateKind::CCX: {
                Circuit t = toffoli_network(g.qubits[0], g.qubits[1], g.qubits[2],
                                            c.num_qubits, blk);
                for (const Gate& h : t.gates) out.add(h);
                break;
            }
            case GateKind::CSWAP: {
                Circuit s = cswap_network(g.qubits[0], g.qubits[1], g.qubits[2], false,
                                          c.num_qubits);
                Circuit e = expand(s);
                for (Gate h : e.gates) {
                    h.block = blk;
                    out.add(std::move(h));
                }
                break;
            }
            default: out.add(g); break;
        }
    }
    return out;
}

}  // namespace fanout
