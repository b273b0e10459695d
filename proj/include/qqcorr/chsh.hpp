#pragma once
//
// Maximal CHSH value of a qubit-qutrit state.
//
// Writing rho = 1/2 (I2 (x) beta_0 + sum_i sigma_i (x) beta_i), the maximum
// over dichotomic observables reduces to
//
//   B_max = 2 max_{R in SO(3)} sqrt( ||(R beta)_1||_1^2 + ||(R beta)_2||_1^2 ),
//   (R beta)_a = sum_i R_ai beta_i,
//
// which is searched with multi-start Nelder-Mead over Z-Y-Z Euler angles.
//

#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>
#include <cstdint>

#include "measures.hpp"
#include "nelder_mead.hpp"

namespace qqcorr {

using Rotation = Eigen::Matrix3d;

inline Rotation euler_zyz(double alpha, double beta, double gamma) {
    return (Eigen::AngleAxisd(alpha, Eigen::Vector3d::UnitZ()) * Eigen::AngleAxisd(beta, Eigen::Vector3d::UnitY()) *
            Eigen::AngleAxisd(gamma, Eigen::Vector3d::UnitZ()))
        .toRotationMatrix();
}

/// The three traceless-side operator-Schmidt components beta_1..3.
using BetaTriple = std::array<Matrix3c, 3>;

inline BetaTriple beta_triple(const DensityMatrix& rho) {
    const BlochFano bf = bloch_fano(rho);
    return {bf.beta[1], bf.beta[2], bf.beta[3]};
}

/// (R beta)_a for row a of R.
inline Matrix3c rotated_beta(const BetaTriple& beta, const Rotation& r, int row) {
    return r(row, 0) * beta[0] + r(row, 1) * beta[1] + r(row, 2) * beta[2];
}

inline double trace_norm3(const Matrix3c& m) {
    Eigen::SelfAdjointEigenSolver<Matrix3c> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().sum();
}

/// 2 sqrt(||(R beta)_1||^2 + ||(R beta)_2||^2) for a given rotation.
inline double chsh_value(const BetaTriple& beta, const Rotation& r) {
    const double n1 = trace_norm3(rotated_beta(beta, r, 0));
    const double n2 = trace_norm3(rotated_beta(beta, r, 1));
    return 2.0 * std::sqrt(n1 * n1 + n2 * n2);
}

struct ChshResult {
    double value = 0.0;
    Rotation rotation = Rotation::Identity();
    int restarts_agreeing = 0;  // restarts within 1e-8 of the best
    int restarts = 0;
};

struct ChshOptions {
    int lattice_starts = 24;
    int random_starts = 8;
    std::uint64_t seed = 0x5eed'c45b'0001ULL;
};

namespace detail {

inline double radical_inverse(unsigned n, unsigned base) {
    double inv = 1.0 / base, f = inv, r = 0.0;
    while (n > 0) {
        r += f * static_cast<double>(n % base);
        n /= base;
        f *= inv;
    }
    return r;
}

// Maps a point of the unit cube to Euler angles, uniform in the Haar measure.
inline std::array<double, 3> cube_to_euler(double u, double v, double w) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    return {two_pi * u, std::acos(1.0 - 2.0 * v), two_pi * w};
}

}  // namespace detail

/// Seeds for the multi-start search: a Halton (2,3,5) lattice followed by
/// fixed-seed pseudo-random points.
inline std::vector<std::array<double, 3>> chsh_start_points(const ChshOptions& opt = {}) {
    std::vector<std::array<double, 3>> starts;
    for (int k = 1; k <= opt.lattice_starts; ++k) {
        const auto n = static_cast<unsigned>(k);
        starts.push_back(detail::cube_to_euler(detail::radical_inverse(n, 2), detail::radical_inverse(n, 3),
                                               detail::radical_inverse(n, 5)));
    }
    std::mt19937_64 rng(opt.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int k = 0; k < opt.random_starts; ++k) {
        const double u = unit(rng), v = unit(rng), w = unit(rng);
        starts.push_back(detail::cube_to_euler(u, v, w));
    }
    return starts;
}

inline ChshResult chsh_max(const DensityMatrix& rho, const ChshOptions& opt = {}) {
    const BetaTriple beta = beta_triple(rho);
    auto objective = [&](const std::array<double, 3>& a) { return -chsh_value(beta, euler_zyz(a[0], a[1], a[2])); };

    std::vector<double> values;
    ChshResult best;
    best.value = -1.0;
    for (const auto& s : chsh_start_points(opt)) {
        const auto run = nelder_mead<3>(objective, s);
        values.push_back(-run.value);
        if (-run.value > best.value) {
            best.value = -run.value;
            best.rotation = euler_zyz(run.x[0], run.x[1], run.x[2]);
        }
    }
    best.restarts = static_cast<int>(values.size());
    for (double v : values)
        if (best.value - v <= 1e-8) ++best.restarts_agreeing;
    return best;
}

/// Dichotomic observables realizing the CHSH value at a given rotation.
struct ChshObservables {
    Matrix2c A0, A1;  // qubit
    Matrix3c B0, B1;  // qutrit

    Matrix6c bell_operator() const {
        const Matrix3c plus = B0 + B1, minus = B0 - B1;
        return kron(A0, plus) + kron(A1, minus);
    }
};

/// Involution sign(M) from the eigenbasis of M; eigenvalues with
/// |lambda| <= 1e-12 get sign +1.
inline Matrix3c sign_involution(const Matrix3c& m) {
    Eigen::SelfAdjointEigenSolver<Matrix3c> es(m);
    Eigen::Vector3cd s;
    for (int k = 0; k < 3; ++k) s(k) = es.eigenvalues()(k) < -1e-12 ? -1.0 : 1.0;
    Matrix3c b = es.eigenvectors() * s.asDiagonal() * es.eigenvectors().adjoint();
    return 0.5 * (b + b.adjoint());
}

/// Bob's settings are the sign-aligned involutions of (R beta)_1 and
/// (R beta)_2; Alice's are cos(t) r1 +- sin(t) r2 with tan(t) the ratio of
/// the two trace norms, r1 and r2 the first two rows of R.
inline ChshObservables extract_chsh_observables(const DensityMatrix& rho, const Rotation& r) {
    if ((r * r.transpose() - Rotation::Identity()).cwiseAbs().maxCoeff() > 1e-9 || std::abs(r.determinant() - 1.0) > 1e-9)
        throw InvalidRotation("not in SO(3)");
    const BetaTriple beta = beta_triple(rho);
    const Matrix3c m1 = rotated_beta(beta, r, 0), m2 = rotated_beta(beta, r, 1);
    const double n1 = trace_norm3(m1), n2 = trace_norm3(m2);
    const double theta = (n1 == 0.0 && n2 == 0.0) ? 0.0 : std::atan2(n2, n1);

    const Eigen::Vector3d r1 = r.row(0).transpose(), r2 = r.row(1).transpose();
    const Eigen::Vector3d a0 = std::cos(theta) * r1 + std::sin(theta) * r2;
    const Eigen::Vector3d a1 = std::cos(theta) * r1 - std::sin(theta) * r2;
    auto dot_sigma = [](const Eigen::Vector3d& n) {
        Matrix2c m = Matrix2c::Zero();
        for (int i = 0; i < 3; ++i) m += n(i) * Matrix2c(pauli(kAxes[i]));
        return m;
    };

    ChshObservables obs;
    obs.A0 = dot_sigma(a0);
    obs.A1 = dot_sigma(a1);
    obs.B0 = sign_involution(m1);
    obs.B1 = sign_involution(m2);
    return obs;
}

/// Tr(rho B) for the assembled Bell operator.
inline double chsh_expectation(const DensityMatrix& rho, const ChshObservables& obs) {
    return (rho.matrix * obs.bell_operator()).trace().real();
}

}  // namespace qqcorr
