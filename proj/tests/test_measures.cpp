#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace qqcorr;
using qqcorr::fixtures::Rng;

namespace {

ModelParams fig1_jz1() {
    ModelParams p = figure_preset("fig1").base;
    p.Jz = 1.0;
    return p;
}

// |up> (x) |m = 1>
DensityMatrix up_plus_one() {
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(6);
    psi(fixtures::basis_index(0, 1)) = 1.0;
    return fixtures::pure_density(psi);
}

}  // namespace

TEST(BlochFano, MaximallyMixed) {
    const auto bf = bloch_fano(DensityMatrix{});
    EXPECT_LT(bf.x.norm(), 1e-15);
    EXPECT_LT(bf.y.norm(), 1e-15);
    EXPECT_LT(bf.t.norm(), 1e-15);
    EXPECT_LT(max_abs(bf.beta[0] - Matrix3c::Identity() / 3.0), 1e-15);
    for (int i = 1; i < 4; ++i) EXPECT_LT(max_abs(bf.beta[i]), 1e-15);
}

TEST(BlochFano, ProductOfStretchedStates) {
    const auto bf = bloch_fano(up_plus_one());
    EXPECT_LT((bf.x - Eigen::Vector3d(0, 0, 1)).norm(), 1e-15);
    EXPECT_LT((bf.y - Eigen::Vector3d(0, 0, 1)).norm(), 1e-15);
    EXPECT_NEAR(bf.t(2, 2), 1.0, 1e-15);
}

TEST(BlochFano, BetaMatchesIndexPartialTrace) {
    const auto rho = gibbs_analytic(fig1_jz1(), 1.0);
    const auto bf = bloch_fano(rho);
    EXPECT_LT(max_abs(bf.beta[0] - fixtures::partial_trace_by_indices(rho.matrix)), 1e-12);
    for (int i = 0; i < 3; ++i) {
        const Matrix6c op = kron(pauli(kAxes[i]), identity(3));
        EXPECT_LT(max_abs(bf.beta[i + 1] - fixtures::partial_trace_by_indices(Matrix6c(rho.matrix * op))), 1e-12);
    }
}

TEST(BlochFano, Invariants) {
    Rng rng(41);
    for (int k = 0; k < 100; ++k) {
        const auto rho = k % 2 ? fixtures::random_mixed(rng) : fixtures::random_thermal(rng);
        const auto bf = bloch_fano(rho);
        EXPECT_LE(bf.x.norm(), 1.0 + 1e-10);
        EXPECT_NEAR(bf.beta[0].trace().real(), 1.0, 1e-10);
        for (int i = 0; i < 3; ++i) EXPECT_NEAR(bf.beta[i + 1].trace().real(), bf.x(i), 1e-10);
        // operator-Schmidt reconstruction rho = 1/2 (I (x) beta0 + sum sigma_i (x) beta_i)
        Matrix6c r = kron(identity(2), bf.beta[0]);
        for (int i = 0; i < 3; ++i) r += kron(pauli(kAxes[i]), bf.beta[i + 1]);
        EXPECT_LT(max_abs(Matrix6c(0.5 * r) - rho.matrix), 1e-12);
    }
}

TEST(PartialTranspose, IndexRule) {
    Rng rng(42);
    const auto rho = fixtures::random_mixed(rng);
    const Matrix6c pt = partial_transpose_qubit(rho.matrix);
    // <ij|pt|kl> = <kj|rho|il>
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 3; ++l) EXPECT_EQ(pt(3 * i + j, 3 * k + l), rho.matrix(3 * k + j, 3 * i + l));
    EXPECT_LT(max_abs(partial_transpose_qubit(pt) - rho.matrix), 1e-16);
}

TEST(Negativity, ProductStatesVanish) {
    Rng rng(43);
    for (int k = 0; k < 50; ++k) {
        const Eigen::Vector3d x = fixtures::random_unit_vector(rng) * fixtures::uniform(rng, 0, 1);
        const auto rho = fixtures::product_state(fixtures::qubit_state(x), fixtures::random_qutrit_state(rng));
        EXPECT_EQ(negativity(rho), 0.0);
    }
}

TEST(Negativity, EmbeddedBell) { EXPECT_NEAR(negativity(fixtures::embedded_bell()), 0.5, 1e-10); }

TEST(Negativity, PureStatesMatchSchmidtOracle) {
    Rng rng(44);
    for (int k = 0; k < 200; ++k) {
        const Eigen::VectorXcd psi = fixtures::random_pure_vector(rng, 6);
        EXPECT_NEAR(negativity(fixtures::pure_density(psi)), fixtures::schmidt_negativity(psi), 1e-10);
    }
}

TEST(Min, ProductAndMaximallyMixedVanish) {
    EXPECT_LT(min_measure(DensityMatrix{}), 1e-15);
    Rng rng(45);
    for (int k = 0; k < 50; ++k) {
        const Eigen::Vector3d x = fixtures::random_unit_vector(rng) * fixtures::uniform(rng, 0, 1);
        const auto rho = fixtures::product_state(fixtures::qubit_state(x), fixtures::random_qutrit_state(rng));
        EXPECT_LT(min_measure(rho), 1e-12);
    }
}

TEST(Min, EmbeddedBellMatchesBruteForce) {
    const auto rho = fixtures::embedded_bell();
    EXPECT_NEAR(min_measure(rho), fixtures::min_brute_force(rho), 1e-6);
    EXPECT_GT(min_measure(rho), 0.1);
}

TEST(Min, ThermalStatesMatchBruteForce) {
    Rng rng(46);
    for (int k = 0; k < 25; ++k) {
        const auto rho = fixtures::random_thermal(rng);
        EXPECT_NEAR(min_measure(rho), fixtures::min_brute_force(rho), 1e-6);
    }
}

TEST(Min, UnbiasedMarginalBranchMatchesBruteForce) {
    Rng rng(47);
    for (int k = 0; k < 10; ++k) {
        const auto rho = fixtures::random_unbiased_qubit_state(rng);
        ASSERT_LT(bloch_fano(rho).x.norm(), 1e-12);
        EXPECT_NEAR(min_measure(rho), fixtures::min_brute_force(rho), 1e-6);
    }
}

TEST(Skew, PureStateEqualsVariance) {
    Rng rng(48);
    for (int k = 0; k < 50; ++k) {
        const Eigen::VectorXcd psi = fixtures::random_pure_vector(rng, 6);
        const Matrix6c kop = fixtures::random_hermitian(rng, 6);
        const double mean = (psi.adjoint() * kop * psi)(0).real();
        const double second = (psi.adjoint() * kop * kop * psi)(0).real();
        EXPECT_NEAR(skew_information(fixtures::pure_density(psi), kop), second - mean * mean, 1e-9);
    }
}

TEST(Skew, CommutingObservableGivesZero) {
    const auto rho = gibbs_analytic(fig1_jz1(), 0.7);
    EXPECT_LT(skew_information(rho, total_sz()), 1e-12);
    EXPECT_LT(skew_information(rho, hamiltonian_from_operators(fig1_jz1())), 1e-12);
}

TEST(Skew, MatchesSchurRootEvaluation) {
    Rng rng(49);
    for (int k = 0; k < 50; ++k) {
        const auto rho = fixtures::random_mixed(rng);
        const Matrix6c kop = fixtures::random_hermitian(rng, 6);
        const Eigen::MatrixXcd dense = rho.matrix;
        const Matrix6c root = dense.sqrt();
        EXPECT_NEAR(skew_information(rho, kop), fixtures::skew_information_schur(root, kop), 1e-10);
    }
}

TEST(Skew, RejectsNonHermitianObservable) {
    Matrix6c k = Matrix6c::Zero();
    k(0, 1) = 1.0;
    EXPECT_THROW(skew_information(DensityMatrix{}, k), NotHermitian);
}

TEST(Uin, Examples) {
    const Eigen::Matrix3d w = uin_matrix(DensityMatrix{});
    EXPECT_LT((w - Eigen::Matrix3d::Identity()).norm(), 1e-14);
    EXPECT_NEAR(uin(DensityMatrix{}), 0.0, 1e-14);
    EXPECT_NEAR(uin(fixtures::embedded_bell()), 1.0, 1e-10);

    Rng rng(50);
    for (int k = 0; k < 20; ++k) {
        const Eigen::Vector3d x = fixtures::random_unit_vector(rng) * fixtures::uniform(rng, 0.1, 0.9);
        const auto rho = fixtures::product_state(fixtures::qubit_state(x), fixtures::random_qutrit_state(rng));
        EXPECT_LT(uin(rho), 1e-10);
    }
}

TEST(Uin, ThermalStatesMatchBruteForce) {
    Rng rng(51);
    for (int k = 0; k < 25; ++k) {
        const auto rho = fixtures::random_thermal(rng);
        EXPECT_NEAR(uin(rho), fixtures::uin_brute_force(rho), 1e-6);
    }
}

TEST(Uin, UnbiasedMarginalBranchMatchesBruteForce) {
    Rng rng(52);
    for (int k = 0; k < 10; ++k) {
        const auto rho = fixtures::random_unbiased_qubit_state(rng);
        EXPECT_NEAR(uin(rho), fixtures::uin_brute_force(rho), 1e-6);
    }
}

TEST(Measures, RangesOnRandomStates) {
    Rng rng(53);
    for (int k = 0; k < 100; ++k) {
        const auto rho = k % 2 ? fixtures::random_mixed(rng) : fixtures::random_thermal(rng);
        const double n = negativity(rho), u = uin(rho), m = min_measure(rho);
        EXPECT_GE(n, 0.0);
        EXPECT_LE(n, 0.5 + 1e-10);
        EXPECT_GE(u, -1e-12);
        EXPECT_LE(u, 1.0 + 1e-10);
        EXPECT_GE(m, 0.0);
    }
}

TEST(Measures, ThermalDecayIsMonotoneAtFig1) {
    const ModelParams p = fig1_jz1();
    CorrelationReport prev;
    for (int i = 0; i < 60; ++i) {
        const double T = 0.05 * (i + 1);
        const auto r = run_point(p, T);
        if (i > 0) {
            for (Measure m : kAllMeasures) EXPECT_LE(*r.get(m), *prev.get(m) + 1e-8) << measure_name(m) << " T=" << T;
        }
        prev = r;
    }
}
