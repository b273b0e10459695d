#pragma once
//
// Correlation quantifiers for a qubit (A) - qutrit (B) state: negativity,
// measurement-induced nonlocality (MIN) and uncertainty-induced
// nonlocality (UIN). The CHSH maximization lives in chsh.hpp.
//

#include <array>
#include <cmath>

#include "gibbs.hpp"

namespace qqcorr {

using Matrix3c = Eigen::Matrix<cplx, 3, 3>;
using Matrix2c = Eigen::Matrix<cplx, 2, 2>;

/// Partial trace over the qubit of a 6x6 operator.
template <typename Derived>
Matrix3c partial_trace_qubit(const Eigen::MatrixBase<Derived>& m) {
    return m.template block<3, 3>(0, 0) + m.template block<3, 3>(3, 3);
}

/// Partial trace over the qutrit of a 6x6 operator.
template <typename Derived>
Matrix2c partial_trace_qutrit(const Eigen::MatrixBase<Derived>& m) {
    Matrix2c r;
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k) r(i, k) = m.template block<3, 3>(3 * i, 3 * k).trace();
    return r;
}

/// Partial transpose on the qubit: <ij|rho^TA|kl> = <kj|rho|il>.
inline Matrix6c partial_transpose_qubit(const Matrix6c& rho) {
    Matrix6c r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 3; ++l) r(3 * i + j, 3 * k + l) = rho(3 * k + j, 3 * i + l);
    return r;
}

/// Orthonormal traceless Hermitian basis of the qutrit (Gell-Mann / sqrt 2,
/// Tr(L_j L_k) = delta_jk).
inline const std::array<Matrix3c, 8>& qutrit_orthonormal_basis() {
    static const std::array<Matrix3c, 8> basis = [] {
        std::array<Matrix3c, 8> b;
        for (auto& m : b) m.setZero();
        const double r = 1.0 / std::sqrt(2.0);
        int n = 0;
        for (int j = 0; j < 3; ++j)
            for (int k = j + 1; k < 3; ++k) {
                b[n](j, k) = b[n](k, j) = r;
                ++n;
                b[n](j, k) = -I_UNIT * r;
                b[n](k, j) = I_UNIT * r;
                ++n;
            }
        b[6](0, 0) = r;
        b[6](1, 1) = -r;
        const double s = 1.0 / std::sqrt(6.0);
        b[7](0, 0) = s;
        b[7](1, 1) = s;
        b[7](2, 2) = -2.0 * s;
        return b;
    }();
    return basis;
}

/// Local Bloch data and operator-Schmidt components of a 2x3 state.
struct BlochFano {
    Eigen::Vector3d x = Eigen::Vector3d::Zero();  // x_i = Tr rho (sigma_i (x) I3)
    Eigen::Vector3d y = Eigen::Vector3d::Zero();  // y_j = Tr rho (I2 (x) S_j)
    Eigen::Matrix3d t = Eigen::Matrix3d::Zero();  // t_ij = Tr rho (sigma_i (x) S_j)
    std::array<Matrix3c, 4> beta{};               // beta_i = Tr_A[rho (sigma_i (x) I3)], sigma_0 = I2
};

inline BlochFano bloch_fano(const DensityMatrix& rho) {
    BlochFano bf;
    const ComplexMatrix I2 = identity(2), I3 = identity(3);
    bf.beta[0] = partial_trace_qubit(rho.matrix);
    for (int i = 0; i < 3; ++i) {
        const ComplexMatrix si = pauli(kAxes[i]);
        const Matrix6c op = kron(si, I3);
        bf.x(i) = (rho.matrix * op).trace().real();
        bf.beta[i + 1] = partial_trace_qubit(rho.matrix * op);
        bf.y(i) = (rho.matrix * kron(I2, spin1(kAxes[i]))).trace().real();
        for (int j = 0; j < 3; ++j) bf.t(i, j) = (rho.matrix * kron(si, spin1(kAxes[j]))).trace().real();
    }
    return bf;
}

/// Sum of the magnitudes of the negative eigenvalues of rho^TA. Exactly 0
/// when every eigenvalue is >= -1e-12.
inline double negativity(const DensityMatrix& rho) {
    const RealVector ev = herm_eigenvalues(partial_transpose_qubit(rho.matrix));
    double n = 0.0;
    for (Eigen::Index k = 0; k < ev.size(); ++k)
        if (ev(k) < -1e-12) n -= ev(k);
    return n;
}

inline constexpr double kDegenerateMarginal = 1e-9;

/// Correlation matrix in orthonormal local bases: C_ij = Tr rho (sigma_i/sqrt2 (x) L_j)
/// with L_j the qutrit orthonormal basis. 3x8.
inline Eigen::Matrix<double, 3, 8> orthonormal_correlation(const DensityMatrix& rho) {
    Eigen::Matrix<double, 3, 8> c;
    const auto& basis = qutrit_orthonormal_basis();
    for (int i = 0; i < 3; ++i) {
        const ComplexMatrix si = pauli(kAxes[i]) / std::sqrt(2.0);
        for (int j = 0; j < 8; ++j) c(i, j) = (rho.matrix * kron(si, basis[j])).trace().real();
    }
    return c;
}

/// Measurement-induced nonlocality (Hilbert-Schmidt).
///
/// With C = orthonormal_correlation(rho):
///   MIN = Tr(C C^T) - x^T C C^T x / |x|^2   if |x| > 1e-9
///   MIN = Tr(C C^T) - lambda_min(C C^T)     otherwise
inline double min_measure(const DensityMatrix& rho) {
    const auto c = orthonormal_correlation(rho);
    const Eigen::Matrix3d cc = c * c.transpose();
    const Eigen::Vector3d x = bloch_fano(rho).x;
    double value;
    if (x.norm() > kDegenerateMarginal) {
        value = cc.trace() - x.dot(cc * x) / x.squaredNorm();
    } else {
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(cc, Eigen::EigenvaluesOnly);
        value = cc.trace() - es.eigenvalues()(0);
    }
    return value < 0.0 ? 0.0 : value;
}

/// Wigner-Yanase skew information -1/2 Tr([sqrt(rho), K]^2).
template <typename Derived>
double skew_information(const DensityMatrix& rho, const Eigen::MatrixBase<Derived>& k) {
    if (k.rows() != 6 || k.cols() != 6 || !is_hermitian(k, kHermitianTol))
        throw NotHermitian("skew_information observable");
    const Matrix6c s = sqrt_psd(rho.matrix);
    const Matrix6c kk = k;
    const Matrix6c c = s * kk - kk * s;
    const double v = -0.5 * (c * c).trace().real();
    return v < 0.0 ? 0.0 : v;
}

/// W_ij = Tr[sqrt(rho) (sigma_i (x) I3) sqrt(rho) (sigma_j (x) I3)], real symmetric.
inline Eigen::Matrix3d uin_matrix(const DensityMatrix& rho) {
    const Matrix6c s = sqrt_psd(rho.matrix);
    std::array<Matrix6c, 3> ops;
    for (int i = 0; i < 3; ++i) ops[i] = s * kron(pauli(kAxes[i]), identity(3));
    Eigen::Matrix3d w;
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) w(i, j) = w(j, i) = (ops[i] * ops[j]).trace().real();
    return w;
}

/// Uncertainty-induced nonlocality: max skew information over K_a = n.sigma
/// commuting with the qubit marginal.
///   U = 1 - x^T W x / |x|^2   if |x| > 1e-9 (n fixed along x)
///   U = 1 - lambda_min(W)     otherwise
inline double uin(const DensityMatrix& rho) {
    const Eigen::Matrix3d w = uin_matrix(rho);
    const Eigen::Vector3d x = bloch_fano(rho).x;
    double value;
    if (x.norm() > kDegenerateMarginal) {
        value = 1.0 - x.dot(w * x) / x.squaredNorm();
    } else {
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(w, Eigen::EigenvaluesOnly);
        value = 1.0 - es.eigenvalues()(0);
    }
    return value < 0.0 ? 0.0 : value;
}

}  // namespace qqcorr
