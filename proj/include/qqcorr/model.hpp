#pragma once
//
// Axially symmetric qubit-qutrit Hamiltonian.
//
// Basis ordering is qubit-major with the qutrit index m descending:
//   0: |up, 1>  1: |up, 0>  2: |up, -1>  3: |dn, 1>  4: |dn, 0>  5: |dn, -1>
//
// In this ordering H only couples |up,0>-|dn,1> (total S_z = 1/2) and
// |up,-1>-|dn,0> (total S_z = -1/2); the stretched states |up,1> and
// |dn,-1> are eigenvectors.
//

#include <array>
#include <cmath>
#include <complex>
#include <string_view>
#include <optional>

#include "spin_algebra.hpp"

namespace qqcorr {

using Matrix6c = Eigen::Matrix<cplx, 6, 6>;

/// The ten real couplings of the Hamiltonian (energy units, k_B = 1).
struct ModelParams {
    double B1 = 0.0;      // qubit longitudinal field
    double B2 = 0.0;      // qutrit longitudinal field
    double J = 0.0;       // transverse exchange
    double Jz = 0.0;      // longitudinal exchange
    double K = 0.0;       // uniaxial single-ion anisotropy
    double K1 = 0.0;      // planar single-ion anisotropy
    double K2 = 0.0;      // biquadratic anisotropy s_z S_z^2
    double Dz = 0.0;      // DM coupling along z
    double Gamma = 0.0;   // three-spin coupling
    double Lambda = 0.0;  // three-spin coupling

    bool operator==(const ModelParams&) const = default;

    bool finite() const {
        for (double v : {B1, B2, J, Jz, K, K1, K2, Dz, Gamma, Lambda})
            if (!std::isfinite(v)) return false;
        return true;
    }
};

inline constexpr std::array<std::string_view, 10> kParamNames = {
    "B1", "B2", "J", "Jz", "K", "K1", "K2", "Dz", "Gamma", "Lambda"};

/// Mutable access to a coupling by name; nullptr if the name is unknown.
inline double* param_ref(ModelParams& p, std::string_view name) {
    if (name == "B1") return &p.B1;
    if (name == "B2") return &p.B2;
    if (name == "J") return &p.J;
    if (name == "Jz") return &p.Jz;
    if (name == "K") return &p.K;
    if (name == "K1") return &p.K1;
    if (name == "K2") return &p.K2;
    if (name == "Dz") return &p.Dz;
    if (name == "Gamma") return &p.Gamma;
    if (name == "Lambda") return &p.Lambda;
    return nullptr;
}

inline std::array<double, 10> param_values(const ModelParams& p) {
    return {p.B1, p.B2, p.J, p.Jz, p.K, p.K1, p.K2, p.Dz, p.Gamma, p.Lambda};
}

/// Closed-form spectral data of the two 2x2 blocks and the stretched states.
struct BlockQuantities {
    double h1 = 0, h2 = 0, h3 = 0, h4 = 0;
    cplx g1{}, g2{};
    double R1 = 0, R2 = 0;
    double E1 = 0, E2 = 0, E3 = 0, E4 = 0, E5 = 0, E6 = 0;

    std::array<double, 6> energies() const { return {E1, E2, E3, E4, E5, E6}; }
};

inline BlockQuantities block_quantities(const ModelParams& p) {
    BlockQuantities q;
    const double common = -p.Jz / 2 + p.K + p.K1;
    q.h1 = p.B1 / 2 + 2 * p.K1;
    q.h4 = -p.B1 / 2 + 2 * p.K1;
    q.h2 = p.B1 / 2 - p.B2 + common + p.K2 / 2;
    q.h3 = -p.B1 / 2 + p.B2 + common - p.K2 / 2;

    const double rt2 = std::sqrt(2.0);
    q.g1 = cplx(p.J + p.Gamma, p.Dz + p.Lambda) / rt2;
    q.g2 = cplx(p.J - p.Gamma, p.Dz - p.Lambda) / rt2;

    q.R1 = std::sqrt((q.h1 - q.h3) * (q.h1 - q.h3) + 4 * std::norm(q.g1));
    q.R2 = std::sqrt((q.h2 - q.h4) * (q.h2 - q.h4) + 4 * std::norm(q.g2));

    const double stretched = p.Jz / 2 + p.K + p.K1;
    const double split = p.B1 / 2 + p.B2 + p.K2 / 2;
    q.E1 = stretched + split;
    q.E6 = stretched - split;
    q.E2 = 0.5 * (q.h1 + q.h3 + q.R1);
    q.E3 = 0.5 * (q.h1 + q.h3 - q.R1);
    q.E4 = 0.5 * (q.h2 + q.h4 + q.R2);
    q.E5 = 0.5 * (q.h2 + q.h4 - q.R2);
    return q;
}

/// Builds H term by term from Kronecker products of s_i = sigma_i / 2 and S_i.
inline Matrix6c hamiltonian_from_operators(const ModelParams& p) {
    const ComplexMatrix sx = 0.5 * pauli(Axis::x), sy = 0.5 * pauli(Axis::y), sz = 0.5 * pauli(Axis::z);
    const ComplexMatrix Sx = spin1(Axis::x), Sy = spin1(Axis::y), Sz = spin1(Axis::z);
    const ComplexMatrix I2 = identity(2), I3 = identity(3);

    ComplexMatrix h = p.B1 * kron(sz, I3) + p.B2 * kron(I2, Sz);
    h += p.J * (kron(sx, Sx) + kron(sy, Sy));
    h += p.Jz * kron(sz, Sz);
    h += p.K * kron(I2, Sz * Sz);
    h += p.K1 * kron(I2, Sx * Sx + Sy * Sy);
    h += p.K2 * kron(sz, Sz * Sz);
    h += p.Dz * (kron(sx, Sy) - kron(sy, Sx));
    h += p.Gamma * (kron(sx, Sx * Sz + Sz * Sx) + kron(sy, Sy * Sz + Sz * Sy));
    h += p.Lambda * (kron(sx, Sy * Sz + Sz * Sy) - kron(sy, Sx * Sz + Sz * Sx));
    return h;
}

/// Assembles the sparse block form directly from block_quantities.
inline Matrix6c hamiltonian_from_blocks(const ModelParams& p) {
    const BlockQuantities q = block_quantities(p);
    Matrix6c h = Matrix6c::Zero();
    h(0, 0) = q.E1;
    h(5, 5) = q.E6;
    h(1, 1) = q.h1;
    h(2, 2) = q.h2;
    h(3, 3) = q.h3;
    h(4, 4) = q.h4;
    h(1, 3) = q.g1;
    h(3, 1) = std::conj(q.g1);
    h(2, 4) = q.g2;
    h(4, 2) = std::conj(q.g2);
    return h;
}

/// Total z spin s_z (x) I3 + I2 (x) S_z.
inline Matrix6c total_sz() {
    return kron(0.5 * pauli(Axis::z), identity(3)) + kron(identity(2), spin1(Axis::z));
}

/// max|[H, total S_z]|; zero for axially symmetric H.
template <typename Derived>
double check_axial_symmetry(const Eigen::MatrixBase<Derived>& h) {
    const Matrix6c sz = total_sz();
    const Matrix6c hm = h;
    return max_abs(hm * sz - sz * hm);
}

}  // namespace qqcorr
