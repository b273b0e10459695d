#pragma once
//
// Thermal states rho = exp(-H/T) / Z (k_B = 1).
//
// gibbs_analytic assembles rho from the closed-form block elements;
// gibbs_numeric exponentiates the operator-built Hamiltonian and serves as
// the oracle for it. Both factor out exp(-E_min/T) before summing, so the
// partition function is carried as log Z.
//

#include <cmath>
#include <string>

#include "model.hpp"

namespace qqcorr {

/// A 6x6 density matrix in the model basis.
struct DensityMatrix {
    Matrix6c matrix = Matrix6c::Identity() / 6.0;

    DensityMatrix() = default;
    explicit DensityMatrix(const Matrix6c& m) : matrix(m) {}

    cplx operator()(int i, int j) const { return matrix(i, j); }
};

/// Throws NumericalError unless m is Hermitian (1e-12), unit trace (1e-10)
/// and has no eigenvalue below -1e-10.
inline void validate_density(const Matrix6c& m) {
    if (!is_hermitian(m, 1e-12)) throw NotHermitian("density matrix defect " + std::to_string(hermitian_defect(m)));
    const cplx tr = m.trace();
    if (std::abs(tr - 1.0) > 1e-10) throw NumericalError("density matrix trace " + std::to_string(tr.real()));
    const RealVector ev = herm_eigenvalues(m);
    if (ev(0) < -kPsdClamp) throw NotPSD("density matrix eigenvalue " + std::to_string(ev(0)));
}

/// Builds a checked DensityMatrix.
inline DensityMatrix make_density(const Matrix6c& m) {
    validate_density(m);
    return DensityMatrix(0.5 * (m + m.adjoint()));
}

/// Nonzero elements of the thermal state in the block basis.
struct GibbsElements {
    double p1 = 0, p6 = 0, a = 0, b = 0, c = 0, d = 0;
    cplx u{}, v{};
    double log_Z = 0;  // log of the partition function

    double Z() const { return std::exp(log_Z); }
};

namespace detail {

inline void check_temperature(double T) {
    if (!(T > 0.0) || !std::isfinite(T)) throw InvalidTemperature(T);
}

// sinh(x)/x, using the series below x = 1e-6.
inline double sinhc(double x) {
    if (std::abs(x) < 1e-6) {
        const double x2 = x * x;
        return 1.0 + x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sinh(x) / x;
}

// Scaled contributions of one 2x2 block [[hi, g], [g*, hj]] to exp(-H/T),
// each multiplied by exp(e_min / T):
//   cosh_part = exp(-(hi+hj)/2T) cosh(R/2T)
//   sinh_part = exp(-(hi+hj)/2T) sinh(R/2T) / R
struct BlockWeights {
    double cosh_part;
    double sinh_part;
};

inline BlockWeights block_weights(double hi, double hj, double R, double T, double e_min) {
    const double mid = 0.5 * (hi + hj);
    const double x = R / (2.0 * T);
    const double lower = mid - 0.5 * R;
    const double base = std::exp(-(lower - e_min) / T);  // <= 1
    BlockWeights w;
    w.cosh_part = 0.5 * base * (1.0 + std::exp(-2.0 * x));
    if (x >= 1e-6) {
        w.sinh_part = base * (-std::expm1(-2.0 * x)) / (2.0 * R);
    } else {
        w.sinh_part = std::exp(-(mid - e_min) / T) * sinhc(x) / (2.0 * T);
    }
    return w;
}

}  // namespace detail

/// Closed-form thermal-state elements.
///
/// Throws InvalidTemperature for T <= 0 and OverflowGuard when the scaled
/// weights are not representable (non-finite couplings or T so small that
/// the energy spread over T is not finite).
inline GibbsElements gibbs_elements(const ModelParams& p, double T) {
    detail::check_temperature(T);
    if (!p.finite()) throw OverflowGuard("non-finite coupling");
    const BlockQuantities q = block_quantities(p);
    const auto e = q.energies();
    double e_min = e[0];
    for (double v : e) e_min = std::min(e_min, v);

    const double w1 = std::exp(-(q.E1 - e_min) / T);
    const double w6 = std::exp(-(q.E6 - e_min) / T);
    const auto blk1 = detail::block_weights(q.h1, q.h3, q.R1, T, e_min);
    const auto blk2 = detail::block_weights(q.h2, q.h4, q.R2, T, e_min);

    const double zs = w1 + w6 + 2.0 * blk1.cosh_part + 2.0 * blk2.cosh_part;
    if (!std::isfinite(zs) || !(zs > 0.0) || !std::isfinite(e_min / T))
        throw OverflowGuard("partition function at T=" + std::to_string(T));

    GibbsElements g;
    g.p1 = w1 / zs;
    g.p6 = w6 / zs;
    g.a = (blk1.cosh_part + (q.h3 - q.h1) * blk1.sinh_part) / zs;
    g.c = (blk1.cosh_part + (q.h1 - q.h3) * blk1.sinh_part) / zs;
    g.b = (blk2.cosh_part + (q.h4 - q.h2) * blk2.sinh_part) / zs;
    g.d = (blk2.cosh_part + (q.h2 - q.h4) * blk2.sinh_part) / zs;
    g.u = -2.0 * q.g1 * blk1.sinh_part / zs;
    g.v = -2.0 * q.g2 * blk2.sinh_part / zs;
    g.log_Z = std::log(zs) - e_min / T;
    return g;
}

inline Matrix6c assemble_density(const GibbsElements& g) {
    Matrix6c r = Matrix6c::Zero();
    r(0, 0) = g.p1;
    r(5, 5) = g.p6;
    r(1, 1) = g.a;
    r(2, 2) = g.b;
    r(3, 3) = g.c;
    r(4, 4) = g.d;
    r(1, 3) = g.u;
    r(3, 1) = std::conj(g.u);
    r(2, 4) = g.v;
    r(4, 2) = std::conj(g.v);
    return r;
}

inline DensityMatrix gibbs_analytic(const ModelParams& p, double T) {
    return DensityMatrix(assemble_density(gibbs_elements(p, T)));
}

/// Partition function exactly as the unshifted closed form; overflows for
/// large |E|/T, which is why gibbs_elements works with log Z.
inline double partition_function_closed_form(const ModelParams& p, double T) {
    detail::check_temperature(T);
    const BlockQuantities q = block_quantities(p);
    return 2.0 * (std::cosh((p.B1 + 2 * p.B2 + p.K2) / (2 * T)) * std::exp(-(p.Jz + 2 * p.K + 2 * p.K1) / (2 * T)) +
                  std::cosh(q.R1 / (2 * T)) * std::exp(-(q.h1 + q.h3) / (2 * T)) +
                  std::cosh(q.R2 / (2 * T)) * std::exp(-(q.h2 + q.h4) / (2 * T)));
}

/// Oracle path: exp(-(H - E_min)/T) of the operator-built H, normalized by its trace.
inline DensityMatrix gibbs_numeric(const ModelParams& p, double T) {
    detail::check_temperature(T);
    if (!p.finite()) throw OverflowGuard("non-finite coupling");
    const Matrix6c h = hamiltonian_from_operators(p);
    const double e_min = herm_eigenvalues(h)(0);
    const Matrix6c shifted = (h - e_min * Matrix6c::Identity()) / T;
    const Matrix6c e = expm_hermitian(-shifted);
    const cplx tr = e.trace();
    if (!std::isfinite(tr.real()) || !(tr.real() > 0.0)) throw OverflowGuard("numeric Gibbs trace");
    return DensityMatrix(e / tr.real());
}

/// log Z of the numeric path.
inline double log_partition_numeric(const ModelParams& p, double T) {
    detail::check_temperature(T);
    const Matrix6c h = hamiltonian_from_operators(p);
    const RealVector ev = herm_eigenvalues(h);
    double s = 0.0;
    for (Eigen::Index k = 0; k < ev.size(); ++k) s += std::exp(-(ev(k) - ev(0)) / T);
    return std::log(s) - ev(0) / T;
}

/// T -> 0+ limit: uniform mixture over the ground eigenspace (levels within
/// 1e-9 of the minimum).
inline DensityMatrix ground_state_limit(const ModelParams& p) {
    const EigenDecomposition ed = herm_eig(hamiltonian_from_operators(p));
    const double e0 = ed.eigenvalues(0);
    Matrix6c r = Matrix6c::Zero();
    int count = 0;
    for (Eigen::Index k = 0; k < ed.eigenvalues.size(); ++k) {
        if (ed.eigenvalues(k) - e0 > 1e-9) break;
        r += ed.eigenvectors.col(k) * ed.eigenvectors.col(k).adjoint();
        ++count;
    }
    r /= static_cast<double>(count);
    return DensityMatrix(0.5 * (r + r.adjoint()));
}

}  // namespace qqcorr
