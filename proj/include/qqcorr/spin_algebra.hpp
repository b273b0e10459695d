#pragma once
//
// Dense complex kernels for the 2x3 composite system: Pauli and spin-1
// operators, Kronecker products and the Hermitian spectral functions
// (eigendecomposition, PSD square root, trace norm, exponential).
//
// Everything here is a pure function of its inputs.
//

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include "errors.hpp"

namespace qqcorr {

using cplx = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

inline constexpr cplx I_UNIT{0.0, 1.0};

enum class Axis { x, y, z };

inline constexpr Axis kAxes[3] = {Axis::x, Axis::y, Axis::z};

/// Largest entry magnitude, 0 for an empty matrix.
template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
    if (m.size() == 0) return 0.0;
    return m.cwiseAbs().maxCoeff();
}

/// max|M - M^dagger|, the Hermiticity defect.
template <typename Derived>
double hermitian_defect(const Eigen::MatrixBase<Derived>& m) {
    if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
    return max_abs(m - m.adjoint());
}

/// True when max|M - M^dagger| <= tol * max(1, max|M|).
template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& m, double tol) {
    if (m.rows() != m.cols()) return false;
    return hermitian_defect(m) <= tol * std::max(1.0, max_abs(m));
}

inline ComplexMatrix pauli(Axis a) {
    ComplexMatrix s(2, 2);
    switch (a) {
        case Axis::x: s << 0.0, 1.0, 1.0, 0.0; break;
        case Axis::y: s << 0.0, -I_UNIT, I_UNIT, 0.0; break;
        case Axis::z: s << 1.0, 0.0, 0.0, -1.0; break;
    }
    return s;
}

/// Spin-1 matrices in the basis m = 1, 0, -1.
inline ComplexMatrix spin1(Axis a) {
    const double r = 1.0 / std::sqrt(2.0);
    ComplexMatrix s = ComplexMatrix::Zero(3, 3);
    switch (a) {
        case Axis::x:
            s(0, 1) = s(1, 0) = s(1, 2) = s(2, 1) = r;
            break;
        case Axis::y:
            s(0, 1) = -I_UNIT * r;
            s(1, 0) = I_UNIT * r;
            s(1, 2) = -I_UNIT * r;
            s(2, 1) = I_UNIT * r;
            break;
        case Axis::z:
            s(0, 0) = 1.0;
            s(2, 2) = -1.0;
            break;
    }
    return s;
}

inline ComplexMatrix identity(Eigen::Index n) { return ComplexMatrix::Identity(n, n); }

template <typename DA, typename DB>
ComplexMatrix kron(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = cplx(a(i, j)) * b.template cast<cplx>();
    return out;
}

struct EigenDecomposition {
    RealVector eigenvalues;     // ascending
    ComplexMatrix eigenvectors; // column k pairs with eigenvalues[k]

    ComplexMatrix reconstruct() const {
        return eigenvectors * eigenvalues.cast<cplx>().asDiagonal() * eigenvectors.adjoint();
    }
};

inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kPsdClamp = 1e-10;

/// Hermitian eigendecomposition, eigenvalues ascending.
///
/// Symmetrizes the input before handing it to a Householder
/// tridiagonalization + implicit QL/QR solver. Throws NotHermitian when the
/// input is not Hermitian within kHermitianTol (relative to max(1, max|M|)).
template <typename Derived>
EigenDecomposition herm_eig(const Eigen::MatrixBase<Derived>& m) {
    if (!is_hermitian(m, kHermitianTol))
        throw NotHermitian("herm_eig: defect " + std::to_string(hermitian_defect(m)));
    const ComplexMatrix h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
    if (solver.info() != Eigen::Success) throw NumericalError("herm_eig: eigensolver did not converge");
    return {solver.eigenvalues(), solver.eigenvectors()};
}

/// Eigenvalues only, ascending.
template <typename Derived>
RealVector herm_eigenvalues(const Eigen::MatrixBase<Derived>& m) {
    if (!is_hermitian(m, kHermitianTol))
        throw NotHermitian("herm_eigenvalues: defect " + std::to_string(hermitian_defect(m)));
    const ComplexMatrix h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw NumericalError("herm_eigenvalues: eigensolver did not converge");
    return solver.eigenvalues();
}

/// Applies f to the spectrum: V f(diag) V^dagger.
template <typename F>
ComplexMatrix apply_spectral(const EigenDecomposition& ed, F&& f) {
    Eigen::VectorXcd fv(ed.eigenvalues.size());
    for (Eigen::Index k = 0; k < fv.size(); ++k) fv(k) = f(ed.eigenvalues(k));
    return ed.eigenvectors * fv.asDiagonal() * ed.eigenvectors.adjoint();
}

/// Principal square root of a PSD matrix. Eigenvalues in [-1e-10, 0) are
/// clamped to zero; anything more negative throws NotPSD. Eigenvalues at
/// the solver's roundoff level are also zeroed, since their square roots
/// would otherwise inject errors of order sqrt(eps).
template <typename Derived>
ComplexMatrix sqrt_psd(const Eigen::MatrixBase<Derived>& m) {
    const EigenDecomposition ed = herm_eig(m);
    const Eigen::Index n = ed.eigenvalues.size();
    if (n == 0) return ComplexMatrix(0, 0);
    if (ed.eigenvalues(0) < -kPsdClamp) throw NotPSD("sqrt_psd: eigenvalue " + std::to_string(ed.eigenvalues(0)));
    const double floor = 16.0 * static_cast<double>(n) * std::numeric_limits<double>::epsilon() *
                         ed.eigenvalues.cwiseAbs().maxCoeff();
    ComplexMatrix s = apply_spectral(ed, [floor](double l) { return cplx(l > floor ? std::sqrt(l) : 0.0); });
    return 0.5 * (s + s.adjoint());
}

/// Sum of absolute eigenvalues of a Hermitian matrix.
template <typename Derived>
double trace_norm(const Eigen::MatrixBase<Derived>& m) {
    return herm_eigenvalues(m).cwiseAbs().sum();
}

/// exp(M) for Hermitian M through its eigendecomposition.
template <typename Derived>
ComplexMatrix expm_hermitian(const Eigen::MatrixBase<Derived>& m) {
    const EigenDecomposition ed = herm_eig(m);
    ComplexMatrix e = apply_spectral(ed, [](double l) { return cplx(std::exp(l)); });
    return 0.5 * (e + e.adjoint());
}

template <typename DA, typename DB>
ComplexMatrix commutator(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
    return a * b - b * a;
}

}  // namespace qqcorr
