#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "fanout/rng.hpp"
#include "fanout/synthesis.hpp"

namespace fanout {

// ---------------------------------------------------------------------------
// SWAP test between two k-qubit registers.
// Qubit layout: ancilla = 0, A_i = 1 + i, B_i = 1 + k + i.

struct SwapTestLayout {
    int k;
    int ancilla() const { return 0; }
    int a(int i) const { return 1 + i; }
    int b(int i) const { return 1 + k + i; }
    int num_qubits() const { return 2 * k + 1; }
};

// Optimized form: the outer two controls on the ancilla are removed, leaving
// one CNOT moment, a single shared-control Toffoli block, and a mirrored CNOT
// moment. Depth excluding the Hadamards is 14 for every k.
inline ScheduledCircuit gen_swap_test(int k, bool optimized) {
    if (k < 1) throw std::invalid_argument("gen_swap_test: k must be >= 1");
    SwapTestLayout q{k};
    ScheduledCircuit s;
    s.num_qubits = q.num_qubits();
    s.label = optimized ? "swap-test" : "swap-test-unopt";

    Moment h_front, h_back, meas;
    h_front.gates.push_back(Gate::h(q.ancilla()));
    h_back.gates.push_back(Gate::h(q.ancilla()));
    meas.gates.push_back(Gate::measure(q.ancilla()));

    s.moments.push_back(h_front);
    auto append = [&](ScheduledCircuit block) {
        for (Moment& m : block.moments) s.moments.push_back(std::move(m));
    };
    std::vector<std::pair<int, int>> ab, ba;
    for (int i = 0; i < k; ++i) {
        ab.emplace_back(q.a(i), q.b(i));
        ba.emplace_back(q.b(i), q.a(i));
    }
    if (optimized) {
        Moment outer;
        for (int i = 0; i < k; ++i) outer.gates.push_back(Gate::cnot(q.b(i), q.a(i)));
        s.moments.push_back(outer);
        append(synth_shared_toffoli(q.ancilla(), ab, s.num_qubits));
        s.moments.push_back(outer);
    } else {
        append(synth_shared_toffoli(q.ancilla(), ba, s.num_qubits));
        append(synth_shared_toffoli(q.ancilla(), ab, s.num_qubits));
        append(synth_shared_toffoli(q.ancilla(), ba, s.num_qubits));
    }
    s.moments.push_back(h_back);
    s.moments.push_back(meas);
    return s;
}

// High-level form of the same circuit (Toffolis not yet compiled); the input
// to the asap and serialized baselines.
inline Circuit swap_test_highlevel(int k, bool optimized) {
    SwapTestLayout q{k};
    Circuit c(q.num_qubits(), optimized ? "swap-test" : "swap-test-unopt");
    c.add(Gate::h(q.ancilla()));
    if (optimized) {
        for (int i = 0; i < k; ++i) c.add(Gate::cnot(q.b(i), q.a(i)));
        for (int i = 0; i < k; ++i) c.add(Gate::ccx(q.ancilla(), q.a(i), q.b(i)));
        for (int i = 0; i < k; ++i) c.add(Gate::cnot(q.b(i), q.a(i)));
    } else {
        for (int i = 0; i < k; ++i) c.add(Gate::ccx(q.ancilla(), q.b(i), q.a(i)));
        for (int i = 0; i < k; ++i) c.add(Gate::ccx(q.ancilla(), q.a(i), q.b(i)));
        for (int i = 0; i < k; ++i) c.add(Gate::ccx(q.ancilla(), q.b(i), q.a(i)));
    }
    c.add(Gate::h(q.ancilla()));
    c.add(Gate::measure(q.ancilla()));
    return c;
}

// Depth under the swap-test counting convention: the two Hadamard moments on
// the ancilla are ignored; Hadamard layers inside the Toffoli blocks still
// count.
inline int swap_test_depth(const ScheduledCircuit& s, int ancilla = 0) {
    int d = 0;
    for (const Moment& m : s.moments) {
        bool counted = false;
        for (const Gate& g : m.gates) {
            if (g.kind == GateKind::MEASURE) continue;
            if (g.kind == GateKind::H && g.qubits[0] == ancilla) continue;
            counted = true;
            break;
        }
        if (counted) ++d;
    }
    return d;
}

// Fine-grained baseline: each controlled-SWAP layer expanded and scheduled on
// its own, layers concatenated. At k = 2 this is the 63-layer schedule.
inline ScheduledCircuit swap_test_asap_baseline(int k, bool optimized = false) {
    SwapTestLayout q{k};
    int n = q.num_qubits();
    std::vector<Circuit> groups;
    auto group = [&](bool forward) {
        Circuit g(n);
        for (int i = 0; i < k; ++i)
            g.add(forward ? Gate::ccx(q.ancilla(), q.a(i), q.b(i))
                          : Gate::ccx(q.ancilla(), q.b(i), q.a(i)));
        return expand(g);
    };
    if (optimized) {
        Circuit head(n), tail(n);
        for (int i = 0; i < k; ++i) head.add(Gate::cnot(q.b(i), q.a(i)));
        for (int i = 0; i < k; ++i) tail.add(Gate::cnot(q.b(i), q.a(i)));
        groups = {head, group(true), tail};
    } else {
        groups = {group(false), group(true), group(false)};
    }
    return block_sequential_schedule(groups);
}

// Serialized baseline: one controlled-SWAP (outer CNOTs uncontrolled) per
// qubit pair, compiled independently; 14 moments per pair.
inline ScheduledCircuit swap_test_serialized_baseline(int k) {
    SwapTestLayout q{k};
    std::vector<Circuit> blocks;
    for (int i = 0; i < k; ++i)
        blocks.push_back(
            expand(cswap_network(q.ancilla(), q.a(i), q.b(i), false, q.num_qubits())));
    return block_sequential_schedule(blocks);
}

// ---------------------------------------------------------------------------
// Interference circuit: overlap of U_A|0> and U_B|0> with k+1 qubits. The
// open control on U_B is realized as X . control . X.

inline Circuit widen(const Circuit& u, int num_qubits) {
    Circuit out(num_qubits, u.label);
    out.gates = u.gates;
    return out;
}

inline ScheduledCircuit gen_interference(const Circuit& u_a, const Circuit& u_b) {
    if (u_a.num_qubits != u_b.num_qubits)
        throw std::invalid_argument("gen_interference: register width mismatch");
    int k = u_a.num_qubits;
    int anc = k;
    ScheduledCircuit s;
    s.num_qubits = k + 1;
    s.label = "interference";

    auto one = [&](const Gate& g) {
        Moment m;
        m.gates.push_back(g);
        s.moments.push_back(std::move(m));
    };
    auto append = [&](ScheduledCircuit block) {
        for (Moment& m : block.moments) s.moments.push_back(std::move(m));
    };
    one(Gate::h(anc));
    append(synth_controlled_u({anc, widen(u_a, k + 1)}));
    one(Gate::x(anc));
    append(synth_controlled_u({anc, widen(u_b, k + 1)}));
    one(Gate::x(anc));
    one(Gate::h(anc));
    one(Gate::measure(anc));
    return s;
}

// ---------------------------------------------------------------------------
// Hadamard test: H, Controlled-U, H, measure. P(0) = (1 + Re<psi|U|psi>)/2.

inline ScheduledCircuit gen_hadamard_test(const Circuit& u) {
    int k = u.num_qubits;
    int anc = k;
    ScheduledCircuit s;
    s.num_qubits = k + 1;
    s.label = "hadamard-" + u.label;
    Moment hf, hb, meas;
    hf.gates.push_back(Gate::h(anc));
    hb.gates.push_back(Gate::h(anc));
    meas.gates.push_back(Gate::measure(anc));
    s.moments.push_back(hf);
    ScheduledCircuit block = synth_controlled_u({anc, widen(u, k + 1)});
    for (Moment& m : block.moments) s.moments.push_back(std::move(m));
    s.moments.push_back(hb);
    s.moments.push_back(meas);
    return s;
}

// Baselines for the controlled-U style benchmarks (interference, Hadamard).
inline ScheduledCircuit controlled_u_asap_baseline(const ControlledUSpec& spec) {
    return asap_schedule(expand(reference_controlled_u(spec)));
}

inline ScheduledCircuit controlled_u_serialized_baseline(const ControlledUSpec& spec) {
    return block_sequential_schedule(serialized_blocks(spec));
}

// ---------------------------------------------------------------------------
// U families for the Hadamard test, all over the basis {1q, CNOT}.

enum class UFamily { QFT, BRICKWORK, HARDWARE_EFFICIENT, SWAP_NETWORK };

inline UFamily u_family_from_name(const std::string& s) {
    if (s == "qft") return UFamily::QFT;
    if (s == "brickwork") return UFamily::BRICKWORK;
    if (s == "hardware_efficient") return UFamily::HARDWARE_EFFICIENT;
    if (s == "swap_network") return UFamily::SWAP_NETWORK;
    throw std::invalid_argument("unknown u family: " + s);
}

namespace detail {

// Controlled-phase from the {1q, CNOT} basis.
inline void add_cp(Circuit& c, int a, int b, double phi) {
    c.add(Gate::p(a, phi / 2.0));
    c.add(Gate::p(b, phi / 2.0));
    c.add(Gate::cnot(a, b));
    c.add(Gate::p(b, -phi / 2.0));
    c.add(Gate::cnot(a, b));
}

inline void add_swap_cnots(Circuit& c, int a, int b) {
    c.add(Gate::cnot(a, b));
    c.add(Gate::cnot(b, a));
    c.add(Gate::cnot(a, b));
}

}  // namespace detail

inline Circuit gen_u_family(UFamily kind, int width, int depth_layers = 1,
                            std::uint64_t seed = 0) {
    if (width < 1) throw std::invalid_argument("gen_u_family: width must be >= 1");
    Circuit c(width);
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(kind), width, depth_layers));
    switch (kind) {
        case UFamily::QFT: {
            c.label = "qft";
            for (int j = width - 1; j >= 0; --j) {
                c.add(Gate::h(j));
                for (int m = 1; m <= j; ++m)
                    detail::add_cp(c, j - m, j, M_PI / double(1 << m));
            }
            for (int i = 0; i < width / 2; ++i)
                detail::add_swap_cnots(c, i, width - 1 - i);
            return c;
        }
        case UFamily::BRICKWORK: {
            c.label = "brickwork";
            for (int layer = 0; layer < depth_layers; ++layer) {
                if (layer % 2 == 0) {
                    for (int q = 0; q < width; ++q) c.add(Gate::u(q, haar_unitary_2x2(rng)));
                } else {
                    int offset = (layer / 2) % 2;
                    for (int q = offset; q + 1 < width; q += 2) c.add(Gate::cnot(q, q + 1));
                }
            }
            return c;
        }
        case UFamily::HARDWARE_EFFICIENT: {
            c.label = "hardware_efficient";
            for (int layer = 0; layer < depth_layers; ++layer) {
                for (int q = 0; q < width; ++q) {
                    c.add(Gate::ry(q, rng.uniform(0.0, 2.0 * M_PI)));
                    c.add(Gate::rz(q, rng.uniform(0.0, 2.0 * M_PI)));
                }
                for (int q = 0; q + 1 < width; ++q) c.add(Gate::cnot(q, q + 1));
            }
            return c;
        }
        case UFamily::SWAP_NETWORK: {
            c.label = "swap_network";
            for (int layer = 0; layer < depth_layers; ++layer) {
                int offset = layer % 2;
                for (int q = offset; q + 1 < width; q += 2)
                    detail::add_swap_cnots(c, q, q + 1);
            }
            return c;
        }
    }
    throw std::invalid_argument("gen_u_family: unknown kind");
}

// ---------------------------------------------------------------------------
// Explicit quantum memory (cell-per-qubit multiplexer), bitwidth W = 1.
// Qubits: b_0..b_{n-1}, then 2^n cells, then the load/store qubit. Index bit
// b_{n-1} is the most significant: its column swaps the upper cell half onto
// the lower half, halving the active window per level.

struct MemoryLayout {
    int n = 0;
    int w = 1;
    int index_qubit(int j) const { return j; }
    int cell_qubit(int cell) const { return n + cell; }
    int load_qubit() const { return n + (1 << n); }
    int num_qubits() const { return n + (1 << n) + 1; }
};

inline Circuit gen_explicit_memory(const MemoryLayout& layout) {
    if (layout.w != 1)
        throw std::invalid_argument("gen_explicit_memory: only W = 1 is implemented");
    if (layout.n < 1) throw std::invalid_argument("gen_explicit_memory: n must be >= 1");
    Circuit c(layout.num_qubits(), "explicit-memory");
    auto level = [&](int k) {
        for (int j = 0; j < (1 << k); ++j)
            c.add(Gate::cswap(layout.index_qubit(k), layout.cell_qubit((1 << k) + j),
                              layout.cell_qubit(j)));
    };
    for (int k = layout.n - 1; k >= 0; --k) level(k);
    c.add(Gate::swap(layout.cell_qubit(0), layout.load_qubit()));
    for (int k = 0; k < layout.n; ++k) level(k);
    return c;
}

// Compiled (simultaneous) form: each CSWAP column becomes two outer CNOT
// moments around one shared-control Toffoli block, 14 moments per level; the
// load swap expands to three CNOT moments. Depth is 28n + 3.
inline ScheduledCircuit explicit_memory_schedule(const MemoryLayout& layout) {
    if (layout.w != 1)
        throw std::invalid_argument("explicit_memory_schedule: only W = 1 is implemented");
    ScheduledCircuit s;
    s.num_qubits = layout.num_qubits();
    s.label = "explicit-memory";
    auto level = [&](int k) {
        Moment outer;
        std::vector<std::pair<int, int>> pairs;
        for (int j = 0; j < (1 << k); ++j) {
            int hi = layout.cell_qubit((1 << k) + j), lo = layout.cell_qubit(j);
            outer.gates.push_back(Gate::cnot(lo, hi));
            pairs.emplace_back(hi, lo);
        }
        s.moments.push_back(outer);
        ScheduledCircuit block =
            synth_shared_toffoli(layout.index_qubit(k), pairs, s.num_qubits);
        for (Moment& m : block.moments) s.moments.push_back(std::move(m));
        s.moments.push_back(outer);
    };
    for (int k = layout.n - 1; k >= 0; --k) level(k);
    int m0 = layout.cell_qubit(0), load = layout.load_qubit();
    for (Gate g : {Gate::cnot(m0, load), Gate::cnot(load, m0), Gate::cnot(m0, load)}) {
        Moment m;
        m.gates.push_back(std::move(g));
        s.moments.push_back(std::move(m));
    }
    for (int k = 0; k < layout.n; ++k) level(k);
    return s;
}

// Serialized baseline: every controlled-SWAP compiled on its own.
inline ScheduledCircuit explicit_memory_serialized_baseline(const MemoryLayout& layout) {
    Circuit high = gen_explicit_memory(layout);
    std::vector<Circuit> blocks;
    for (const Gate& g : high.gates) {
        Circuit b(high.num_qubits);
        b.add(g);
        blocks.push_back(expand(b));
    }
    return block_sequential_schedule(blocks);
}

// ---------------------------------------------------------------------------
// Implicit quantum memory: classical data wired through polarized controls.
// One multi-controlled fan-out per nonzero address; depth 2^n independent of
// the bitwidth W. Qubits: b_0..b_{n-1}, then W data bits.

inline Circuit gen_implicit_memory(const std::vector<std::uint64_t>& data, int w) {
    std::size_t size = data.size();
    if (size == 0 || (size & (size - 1)) != 0)
        throw std::invalid_argument("gen_implicit_memory: data length must be a power of two");
    int n = 0;
    while ((std::size_t(1) << n) < size) ++n;
    for (std::uint64_t v : data)
        if (w >= 64 || v >= (std::uint64_t(1) << w))
            throw std::invalid_argument("gen_implicit_memory: value exceeds bitwidth");
    Circuit c(n + w, "implicit-memory");
    std::vector<int> controls(n);
    for (int j = 0; j < n; ++j) controls[j] = j;
    for (std::size_t addr = 0; addr < size; ++addr) {
        if (data[addr] == 0) continue;
        std::vector<int> polarities(n);
        for (int j = 0; j < n; ++j) polarities[j] = (addr >> j) & 1;
        std::vector<int> targets;
        for (int bit = 0; bit < w; ++bit)
            if ((data[addr] >> bit) & 1) targets.push_back(n + bit);
        c.add(Gate::mcx_fanout(controls, polarities, targets));
    }
    return c;
}

// Closed-form serial comparison for the implicit memory: one X per stored
// bit, sum of popcounts. Dense data attains W * 2^n.
inline long implicit_memory_serial_formula(const std::vector<std::uint64_t>& data) {
    long total = 0;
    for (std::uint64_t v : data) total += std::popcount(v);
    return total;
}

}  // namespace fanout
