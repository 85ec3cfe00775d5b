#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "fanout/circuit.hpp"
#include "fanout/complex_matrix.hpp"
#include "fanout/gates.hpp"
#include "fanout/rng.hpp"

namespace fanout {

// Brute-force statevector simulator; the correctness oracle for every pass.
// Little-endian basis ordering: qubit 0 is the least significant bit.
class StateVector {
  public:
    explicit StateVector(int num_qubits)
        : n_(num_qubits), amp_(std::size_t(1) << num_qubits, Complex(0.0, 0.0)) {
        amp_[0] = 1.0;
    }

    int num_qubits() const { return n_; }
    std::size_t dim() const { return amp_.size(); }
    Complex& operator[](std::size_t i) { return amp_[i]; }
    const Complex& operator[](std::size_t i) const { return amp_[i]; }

    double norm() const {
        double s = 0.0;
        for (const auto& a : amp_) s += std::norm(a);
        return s;
    }

    void apply(const Gate& g) {
        for (int q : g.qubits)
            if (q < 0 || q >= n_) throw std::out_of_range("apply_gate: qubit out of range");
        for (std::size_t i = 0; i < g.qubits.size(); ++i)
            for (std::size_t j = i + 1; j < g.qubits.size(); ++j)
                if (g.qubits[i] == g.qubits[j])
                    throw std::invalid_argument("apply_gate: duplicate qubit in gate");

        switch (g.kind) {
            case GateKind::X:
            case GateKind::H:
            case GateKind::RY:
            case GateKind::U: apply_1q(single_qubit_matrix(g), g.qubits[0]); return;
            case GateKind::T: apply_phase(g.qubits[0], M_PI / 4.0); return;
            case GateKind::TDG: apply_phase(g.qubits[0], -M_PI / 4.0); return;
            case GateKind::P: apply_phase(g.qubits[0], g.params.at(0)); return;
            case GateKind::RZ: apply_rz(g.qubits[0], g.params.at(0)); return;
            case GateKind::CNOT: apply_fanout_mask(bit(g.qubits[0]), bit(g.qubits[1])); return;
            case GateKind::FANOUT: {
                std::uint64_t tmask = 0;
                for (std::size_t i = 1; i < g.qubits.size(); ++i) tmask |= bit(g.qubits[i]);
                apply_fanout_mask(bit(g.qubits[0]), tmask);
                return;
            }
            case GateKind::CCX:
                apply_mcx(bit(g.qubits[0]) | bit(g.qubits[1]),
                          bit(g.qubits[0]) | bit(g.qubits[1]), bit(g.qubits[2]));
                return;
            case GateKind::MCX_FANOUT: {
                std::uint64_t cmask = 0, cval = 0, tmask = 0;
                for (std::size_t i = 0; i < g.polarities.size(); ++i) {
                    cmask |= bit(g.qubits[i]);
                    if (g.polarities[i]) cval |= bit(g.qubits[i]);
                }
                for (std::size_t i = g.polarities.size(); i < g.qubits.size(); ++i)
                    tmask |= bit(g.qubits[i]);
                apply_mcx(cmask, cval, tmask);
                return;
            }
            case GateKind::SWAP: apply_swap(bit(g.qubits[0]), bit(g.qubits[1]), 0, 0); return;
            case GateKind::CSWAP:
                apply_swap(bit(g.qubits[1]), bit(g.qubits[2]), bit(g.qubits[0]),
                           bit(g.qubits[0]));
                return;
            case GateKind::MEASURE:
                throw std::invalid_argument("apply_gate: measurement is not a unitary");
        }
        throw std::invalid_argument("apply_gate: unrecognized gate kind");
    }

    // Applies every gate in order; MEASURE gates are skipped (sampling is a
    // separate step, see sample()).
    void run(const Circuit& c) {
        if (c.num_qubits != n_) throw std::invalid_argument("run: qubit count mismatch");
        for (const Gate& g : c.gates)
            if (g.kind != GateKind::MEASURE) apply(g);
    }

    // Probability of reading 0 on one qubit.
    double prob_zero(int qubit) const {
        if (qubit < 0 || qubit >= n_) throw std::out_of_range("prob_zero: invalid qubit");
        std::uint64_t m = bit(qubit);
        double p = 0.0;
        for (std::size_t i = 0; i < amp_.size(); ++i)
            if (!(i & m)) p += std::norm(amp_[i]);
        return p;
    }

    Complex inner(const StateVector& other) const {
        if (other.n_ != n_) throw std::invalid_argument("inner: dimension mismatch");
        Complex s = 0.0;
        for (std::size_t i = 0; i < amp_.size(); ++i) s += std::conj(amp_[i]) * other.amp_[i];
        return s;
    }

  private:
    static std::uint64_t bit(int q) { return std::uint64_t(1) << q; }

    void apply_1q(const ComplexMatrix& m, int q) {
        std::uint64_t qm = bit(q);
        Complex m00 = m(0, 0), m01 = m(0, 1), m10 = m(1, 0), m11 = m(1, 1);
        for (std::size_t i = 0; i < amp_.size(); ++i) {
            if (i & qm) continue;
            Complex a0 = amp_[i], a1 = amp_[i | qm];
            amp_[i] = m00 * a0 + m01 * a1;
            amp_[i | qm] = m10 * a0 + m11 * a1;
        }
    }

    void apply_phase(int q, double phi) {  // diag(1, e^{i phi})
        std::uint64_t qm = bit(q);
        Complex ph = std::polar(1.0, phi);
        for (std::size_t i = 0; i < amp_.size(); ++i)
            if (i & qm) amp_[i] *= ph;
    }

    void apply_rz(int q, double theta) {  // diag(e^{-it/2}, e^{+it/2})
        std::uint64_t qm = bit(q);
        Complex lo = std::polar(1.0, -theta / 2.0), hi = std::polar(1.0, theta / 2.0);
        for (std::size_t i = 0; i < amp_.size(); ++i) amp_[i] *= (i & qm) ? hi : lo;
    }

    // X on every target bit when the control bit is set.
    void apply_fanout_mask(std::uint64_t cmask, std::uint64_t tmask) {
        apply_mcx(cmask, cmask, tmask);
    }

    // X on every target bit when (i & cmask) == cval.
    void apply_mcx(std::uint64_t cmask, std::uint64_t cval, std::uint64_t tmask) {
        for (std::size_t i = 0; i < amp_.size(); ++i) {
            if ((i & cmask) != cval) continue;
            std::size_t j = i ^ tmask;
            if (i < j) std::swap(amp_[i], amp_[j]);
        }
    }

    // Swaps bits am and bm on basis states matching (i & cmask) == cval.
    void apply_swap(std::uint64_t am, std::uint64_t bm, std::uint64_t cmask,
                    std::uint64_t cval) {
        for (std::size_t i = 0; i < amp_.size(); ++i) {
            if ((i & cmask) != cval) continue;
            if ((i & am) && !(i & bm)) std::swap(amp_[i], amp_[i ^ am ^ bm]);
        }
    }

    int n_;
    std::vector<Complex> amp_;
};

inline StateVector apply_gate(StateVector state, const Gate& g) {
    state.apply(g);
    return state;
}

constexpr int kUnitaryQubitGuard = 12;

// 2^n x 2^n embedding of one gate into the full space.
inline ComplexMatrix gate_unitary(const Gate& g, int num_qubits) {
    if (g.kind == GateKind::MEASURE)
        throw std::invalid_argument("gate_unitary: measurement has no unitary");
    if (num_qubits > kUnitaryQubitGuard)
        throw std::invalid_argument("gate_unitary: qubit count over guard");
    std::size_t dim = std::size_t(1) << num_qubits;
    ComplexMatrix u(dim, dim);
    for (std::size_t col = 0; col < dim; ++col) {
        StateVector sv(num_qubits);
        sv[0] = 0.0;
        sv[col] = 1.0;
        sv.apply(g);
        for (std::size_t row = 0; row < dim; ++row) u(row, col) = sv[row];
    }
    return u;
}

// Ordered product of gate unitaries. Guarded at 12 qubits; rejects MEASURE.
inline ComplexMatrix circuit_unitary(const Circuit& c) {
    if (c.num_qubits > kUnitaryQubitGuard)
        throw std::invalid_argument("circuit_unitary: qubit count over guard");
    for (const Gate& g : c.gates)
        if (g.kind == GateKind::MEASURE)
            throw std::invalid_argument("circuit_unitary: measurement present");
    std::size_t dim = std::size_t(1) << c.num_qubits;
    ComplexMatrix u(dim, dim);
    for (std::size_t col = 0; col < dim; ++col) {
        StateVector sv(c.num_qubits);
        sv[0] = 0.0;
        sv[col] = 1.0;
        for (const Gate& g : c.gates) sv.apply(g);
        for (std::size_t row = 0; row < dim; ++row) u(row, col) = sv[row];
    }
    return u;
}

// |<ideal|noisy>|^2.
inline double fidelity(const StateVector& ideal, const StateVector& noisy) {
    return std::norm(ideal.inner(noisy));
}

struct SampleCounts {
    long zeros = 0;
    long ones = 0;
};

// Repeated single-qubit readout; deterministic for a given seed.
inline SampleCounts sample(const StateVector& state, int qubit, long shots,
                           std::uint64_t seed) {
    if (shots < 1) throw std::invalid_argument("sample: shots must be >= 1");
    double p0 = state.prob_zero(qubit);
    Rng rng(seed);
    SampleCounts counts;
    for (long s = 0; s < shots; ++s) {
        if (rng.uniform() < p0)
            ++counts.zeros;
        else
            ++counts.ones;
    }
    return counts;
}

}  // namespace fanout
