#include "fanout/schedule.hpp"

#include <gtest/gtest.h>

#include "fanout/benchmarks.hpp"
#include "fanout/simulator.hpp"
#include "oracles.hpp"

using namespace fanout;

namespace {

// Two shared-control Toffolis (shared control 0), the running example for the
// fine-grained baseline and the alignment pass.
Circuit two_shared_toffolis() {
    Circuit c(5);
    c.add(Gate::ccx(0, 1, 2));
    c.add(Gate::ccx(0, 3, 4));
    return c;
}

}  // namespace

TEST(Depth, EmptyScheduleIsZero) {
    ScheduledCircuit s;
    EXPECT_EQ(depth(s), 0);
}

TEST(Depth, ExcludesMeasureAlways) {
    Circuit c(1);
    c.add(Gate::h(0));
    c.add(Gate::measure(0));
    ScheduledCircuit s = asap_schedule(c);
    EXPECT_EQ(depth(s), 1);
    EXPECT_EQ(depth(s, {GateKind::H}), 0);
}

TEST(Depth, ThreeLayerExampleCircuit) {
    // Four qubits, three layers: a phase/flip layer, two disjoint CNOTs, then
    // a closing mixed layer.
    Circuit c(4);
    c.add(Gate::rz(0, 0.1));
    c.add(Gate::x(1));
    c.add(Gate::x(2));
    c.add(Gate::rz(3, 0.2));
    c.add(Gate::cnot(0, 1));
    c.add(Gate::cnot(3, 2));
    c.add(Gate::x(0));
    c.add(Gate::cnot(2, 1));
    c.add(Gate::rz(3, 0.3));
    EXPECT_EQ(depth(asap_schedule(c)), 3);
}

TEST(Commutes, Rules) {
    // shared control, different targets
    EXPECT_TRUE(commutes(Gate::cnot(0, 1), Gate::cnot(0, 2)));
    // diagonal through a control
    EXPECT_TRUE(commutes(Gate::rz(0, 0.3), Gate::cnot(0, 2)));
    // Diagonal on a target does not commute.
    EXPECT_FALSE(commutes(Gate::rz(1, 0.3), Gate::cnot(0, 1)));
    // Disjoint gates always commute.
    EXPECT_TRUE(commutes(Gate::h(0), Gate::ccx(1, 2, 3)));
    // Same diagonal qubit.
    EXPECT_TRUE(commutes(Gate::t(0), Gate::rz(0, 0.4)));
    // Sound-not-complete: overlapping non-commuting shapes report false.
    EXPECT_FALSE(commutes(Gate::h(0), Gate::cnot(0, 1)));
    EXPECT_FALSE(commutes(Gate::cnot(0, 1), Gate::cnot(1, 0)));
}

// commutes(g1, g2) == true must imply the embedded unitaries commute.
TEST(Commutes, SoundnessAgainstMatrixOracle) {
    std::vector<Gate> catalog = {
        Gate::x(0),          Gate::h(1),           Gate::t(0),
        Gate::tdg(2),        Gate::rz(0, 0.7),     Gate::p(1, 1.1),
        Gate::ry(2, 0.4),    Gate::cnot(0, 1),     Gate::cnot(0, 2),
        Gate::cnot(1, 0),    Gate::cnot(2, 3),     Gate::ccx(0, 1, 2),
        Gate::ccx(0, 2, 3),  Gate::swap(1, 2),     Gate::cswap(0, 1, 2),
        Gate::fanout(0, {1, 2}), Gate::fanout(0, {3, 4}), Gate::fanout(1, {2, 3}),
        Gate::mcx_fanout({0, 1}, {1, 0}, {2, 5}),
    };
    int checked = 0;
    for (const Gate& g1 : catalog) {
        for (const Gate& g2 : catalog) {
            if (!commutes(g1, g2)) continue;
            ComplexMatrix u1 = gate_unitary(g1, 6), u2 = gate_unitary(g2, 6);
            EXPECT_LE((u1 * u2).max_abs_diff(u2 * u1), 1e-10)
                << gate_name(g1.kind) << " vs " << gate_name(g2.kind);
            ++checked;
        }
    }
    EXPECT_GT(checked, 50);
}

TEST(Commutes, SymmetricOnCatalogPairs) {
    std::vector<Gate> catalog = {Gate::t(0), Gate::cnot(0, 1), Gate::fanout(0, {1, 2}),
                                 Gate::ccx(0, 1, 2), Gate::h(2), Gate::rz(2, 0.2)};
    for (const Gate& g1 : catalog)
        for (const Gate& g2 : catalog)
            EXPECT_EQ(commutes(g1, g2), commutes(g2, g1));
}

TEST(Asap, DisjointSingleQubitGatesShareOneMoment) {
    Circuit c(4);
    for (int q = 0; q < 4; ++q) c.add(Gate::h(q));
    EXPECT_EQ(depth(asap_schedule(c)), 1);
}

TEST(Asap, TwoSharedToffolisPinTwentyOne) {
    ScheduledCircuit s = asap_schedule(expand(two_shared_toffolis()));
    EXPECT_EQ(static_cast<int>(s.moments.size()), 21);
    check_moments_disjoint(s);
}

TEST(Asap, SingleToffoliPinTwelve) {
    Circuit c(3);
    c.add(Gate::ccx(0, 1, 2));
    EXPECT_EQ(depth(asap_schedule(expand(c))), 12);
}

TEST(Asap, PreservesUnitaryExactly) {
    Rng rng(77);
    for (int trial = 0; trial < 5; ++trial) {
        Circuit c(4);
        for (int g = 0; g < 14; ++g) {
            int q = int(rng.bits() % 4), r = int(rng.bits() % 4);
            switch (rng.bits() % 4) {
                case 0: c.add(Gate::u(q, haar_unitary_2x2(rng))); break;
                case 1: c.add(Gate::t(q)); break;
                case 2:
                    if (q != r) c.add(Gate::cnot(q, r));
                    break;
                default:
                    if (q != r) c.add(Gate::ccx(q, (r + 1) % 4 == q ? (r + 2) % 4 : (r + 1) % 4, r));
                    break;
            }
        }
        Circuit e = expand(c);
        ScheduledCircuit s = asap_schedule(e);
        check_moments_disjoint(s);
        EXPECT_LE(static_cast<int>(s.moments.size()), static_cast<int>(e.gates.size()));
        EXPECT_NEAR(circuit_unitary(s.flatten()).max_abs_diff(circuit_unitary(e)), 0.0,
                    1e-10);
    }
}

TEST(BlockSequential, FredkinBlocksPinFourteenEach) {
    // One block per qubit pair: CNOT, Toffoli network, CNOT = 14 moments.
    auto fredkin = [](int n, int c, int a, int b) {
        return expand(cswap_network(c, a, b, false, n));
    };
    for (int k : {1, 2, 4}) {
        std::vector<Circuit> blocks;
        int n = 2 * k + 1;
        for (int i = 0; i < k; ++i) blocks.push_back(fredkin(n, 0, 1 + i, 1 + k + i));
        ScheduledCircuit s = block_sequential_schedule(blocks);
        EXPECT_EQ(depth(s), 14 * k);
    }
}

TEST(BlockSequential, OneBlockEqualsAsap) {
    Circuit c(3);
    c.add(Gate::h(0));
    c.add(Gate::cnot(0, 1));
    c.add(Gate::cnot(1, 2));
    ScheduledCircuit a = asap_schedule(c);
    ScheduledCircuit b = block_sequential_schedule({c});
    ASSERT_EQ(a.moments.size(), b.moments.size());
    EXPECT_EQ(depth(a), depth(b));
}

TEST(BlockSequential, WidthMismatchRejected) {
    EXPECT_THROW(block_sequential_schedule({Circuit(2), Circuit(3)}), std::invalid_argument);
}

TEST(FanoutAlign, MergesCnotChainIntoFanout) {
    Circuit c(4);
    c.add(Gate::cnot(0, 1));
    c.add(Gate::cnot(0, 2));
    c.add(Gate::cnot(0, 3));
    Circuit aligned = fanout_align(c);
    ASSERT_EQ(aligned.gates.size(), 1u);
    EXPECT_EQ(aligned.gates[0].kind, GateKind::FANOUT);
    EXPECT_EQ(aligned.gates[0].qubits, (std::vector<int>{0, 1, 2, 3}));
    EXPECT_TRUE(equiv_global_phase(circuit_unitary(aligned),
                                   oracles::fanout(4, 0, {1, 2, 3}), 1e-9));
}

TEST(FanoutAlign, CommutesThroughDiagonalOnControl) {
    Circuit c(3);
    c.add(Gate::cnot(0, 1));
    c.add(Gate::rz(0, 0.9));
    c.add(Gate::cnot(0, 2));
    Circuit aligned = fanout_align(c);
    ASSERT_EQ(aligned.gates.size(), 2u);
    EXPECT_EQ(aligned.gates[0].kind, GateKind::FANOUT);
    EXPECT_EQ(aligned.gates[0].qubits, (std::vector<int>{0, 1, 2}));
    EXPECT_EQ(aligned.gates[1].kind, GateKind::RZ);
    EXPECT_TRUE(
        equiv_global_phase(circuit_unitary(aligned), circuit_unitary(c), 1e-9));
}

TEST(FanoutAlign, BlockedByDiagonalOnTarget) {
    Circuit c(3);
    c.add(Gate::cnot(0, 1));
    c.add(Gate::h(1));
    c.add(Gate::cnot(0, 1));
    Circuit aligned = fanout_align(c);
    EXPECT_EQ(aligned.gates.size(), 3u);
}

TEST(FanoutAlign, TwoToffolisReachTwelveMoments) {
    Circuit expanded = expand(two_shared_toffolis());
    ComplexMatrix before = circuit_unitary(expanded);
    Circuit aligned = fanout_align(expanded);
    ScheduledCircuit s = asap_schedule(aligned);
    check_moments_disjoint(s);
    EXPECT_EQ(static_cast<int>(s.moments.size()), 12);
    EXPECT_TRUE(equiv_global_phase(circuit_unitary(aligned), before, 1e-9));
    // alignment produced genuine fan-outs
    int fanouts = 0;
    for (const Gate& g : aligned.gates) fanouts += g.kind == GateKind::FANOUT;
    EXPECT_EQ(fanouts, 4);
}

TEST(FanoutAlign, NeverIncreasesAsapDepthOnBenchmarks) {
    Rng rng(31337);
    for (int trial = 0; trial < 8; ++trial) {
        int n = 3 + int(rng.bits() % 4);
        Circuit c(n);
        for (int g = 0; g < 18; ++g) {
            int q = int(rng.bits() % n), r = int(rng.bits() % n);
            switch (rng.bits() % 5) {
                case 0: c.add(Gate::h(q)); break;
                case 1: c.add(Gate::t(q)); break;
                case 2: c.add(Gate::rz(q, rng.uniform(0, 6.28))); break;
                default:
                    if (q != r) c.add(Gate::cnot(q, r));
                    break;
            }
        }
        int before = depth(asap_schedule(c));
        Circuit aligned = fanout_align(c);
        int after = depth(asap_schedule(aligned));
        EXPECT_LE(after, before);
        EXPECT_TRUE(
            equiv_global_phase(circuit_unitary(aligned), circuit_unitary(c), 1e-9));
    }
}

TEST(FanoutAlign, BenchmarkCircuitsStable) {
    // Alignment of already-compiled benchmark circuits: unitary preserved,
    // depth never grows.
    for (int k : {1, 2, 3}) {
        Circuit flat = gen_swap_test(k, true).flatten();
        Circuit unitary_part = flat;
        unitary_part.gates.pop_back();  // drop MEASURE for the oracle
        ComplexMatrix before = circuit_unitary(unitary_part);
        int depth_before = depth(asap_schedule(flat));

        Circuit aligned = fanout_align(flat);
        EXPECT_LE(depth(asap_schedule(aligned)), depth_before) << "k=" << k;
        Circuit aligned_unitary = aligned;
        for (std::size_t i = 0; i < aligned_unitary.gates.size(); ++i) {
            if (aligned_unitary.gates[i].kind == GateKind::MEASURE) {
                aligned_unitary.gates.erase(aligned_unitary.gates.begin() + i);
                break;
            }
        }
        EXPECT_TRUE(equiv_global_phase(circuit_unitary(aligned_unitary), before, 1e-9))
            << "k=" << k;
    }
}

TEST(FanoutAlign, RejectsWidePrimitives) {
    Circuit c(3);
    c.add(Gate::ccx(0, 1, 2));
    EXPECT_THROW(fanout_align(c), std::invalid_argument);
}
