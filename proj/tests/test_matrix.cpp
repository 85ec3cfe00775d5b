#include "fanout/complex_matrix.hpp"

#include <gtest/gtest.h>

#include "fanout/rng.hpp"

using namespace fanout;

TEST(ComplexMatrix, ProductAndAdjoint) {
    ComplexMatrix a = mat2(1, Complex(0, 1), 2, 0);
    ComplexMatrix b = mat2(0, 1, 1, 0);
    ComplexMatrix ab = a * b;
    EXPECT_EQ(ab(0, 0), Complex(0, 1));
    EXPECT_EQ(ab(0, 1), Complex(1, 0));
    EXPECT_EQ(ab(1, 0), Complex(0, 0));
    EXPECT_EQ(ab(1, 1), Complex(2, 0));
    ComplexMatrix ad = a.adjoint();
    EXPECT_EQ(ad(1, 0), Complex(0, -1));
}

TEST(ComplexMatrix, NamedGatesAreUnitary) {
    EXPECT_TRUE(mats::x().is_unitary());
    EXPECT_TRUE(mats::h().is_unitary());
    EXPECT_TRUE(mats::t().is_unitary());
    EXPECT_TRUE(mats::tdg().is_unitary());
    EXPECT_TRUE(mats::rz(0.7).is_unitary());
    EXPECT_TRUE(mats::p(1.3).is_unitary());
    EXPECT_TRUE(mats::ry(2.1).is_unitary());
}

TEST(ComplexMatrix, FixedConventions) {
    // Rz(t) = diag(e^{-it/2}, e^{+it/2}); T = diag(1, e^{i pi/4}); P(phi) =
    // diag(1, e^{i phi}).
    double t = 0.9;
    EXPECT_NEAR(std::abs(mats::rz(t)(0, 0) - std::polar(1.0, -t / 2)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(mats::t()(1, 1) - std::polar(1.0, M_PI / 4)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(mats::p(t)(1, 1) - std::polar(1.0, t)), 0.0, 1e-15);
    EXPECT_EQ(mats::t()(0, 1), Complex(0, 0));
    // T equals P(pi/4) entry for entry.
    EXPECT_NEAR(mats::t().max_abs_diff(mats::p(M_PI / 4)), 0.0, 1e-15);
}

TEST(EquivGlobalPhase, ReflexiveAndPhaseInvariant) {
    Rng rng(3);
    ComplexMatrix m = haar_unitary_2x2(rng);
    EXPECT_TRUE(equiv_global_phase(m, m, 1e-12));
    ComplexMatrix rotated = m.scaled(std::polar(1.0, M_PI / 7.0));
    EXPECT_TRUE(equiv_global_phase(m, rotated, 1e-12));
    EXPECT_TRUE(equiv_global_phase(rotated, m, 1e-12));
}

TEST(EquivGlobalPhase, DistinctUnitariesDiffer) {
    // CNOT vs SWAP on 2 qubits; the optimal phase from tr(b^dagger a) still
    // leaves a large residual, so no phase can reconcile them.
    ComplexMatrix cnot(4, 4), swap(4, 4);
    int cnot_perm[4] = {0, 1, 3, 2};  // little-endian CNOT(0 -> 1)
    int swap_perm[4] = {0, 2, 1, 3};
    for (int i = 0; i < 4; ++i) cnot(cnot_perm[i], i) = 1.0;
    for (int i = 0; i < 4; ++i) swap(swap_perm[i], i) = 1.0;
    Complex tr = 0.0;
    ComplexMatrix prod = swap.adjoint() * cnot;
    for (int i = 0; i < 4; ++i) tr += prod(i, i);
    ComplexMatrix best = swap.scaled(std::abs(tr) > 0 ? std::polar(1.0, std::arg(tr))
                                                      : Complex(1.0, 0.0));
    EXPECT_GT(cnot.max_abs_diff(best), 0.5);
    EXPECT_FALSE(equiv_global_phase(cnot, swap, 1e-9));
}

TEST(EquivGlobalPhase, DimensionMismatchThrows) {
    EXPECT_THROW(equiv_global_phase(ComplexMatrix::identity(2), ComplexMatrix::identity(4)),
                 std::invalid_argument);
}

TEST(HaarUnitary, SamplesAreUnitaryAndSeeded) {
    Rng a(17), b(17), c(18);
    for (int i = 0; i < 50; ++i) {
        ComplexMatrix u = haar_unitary_2x2(a);
        EXPECT_TRUE(u.is_unitary(1e-12));
        ComplexMatrix v = haar_unitary_2x2(b);
        EXPECT_NEAR(u.max_abs_diff(v), 0.0, 0.0);
    }
    EXPECT_GT(haar_unitary_2x2(c).max_abs_diff(haar_unitary_2x2(a)), 1e-3);
}
