#pragma once
// Exact-diagonalization oracle on small periodic rings (L <= 12).  Dense
// full-spectrum diagonalization only: slow but unarguable, used to validate
// the thermodynamic-limit modules.
//
// Basis: computational, bit b_j = 0 meaning sigma^z_j = +1.

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "spinchain/xstate.hpp"
#include "spinchain/xy_model.hpp"

namespace spinchain {

struct XXZParams;  // defined in xxz_model.hpp

// H = sum_j [cxx X_j X_{j+1} + cyy Y_j Y_{j+1} + czz Z_j Z_{j+1}] + fz sum_j Z_j
// on a periodic ring.  X/Y/Z are Pauli matrices.
inline Eigen::MatrixXd build_ring_hamiltonian(int L, double cxx, double cyy,
                                              double czz, double fz) {
    if (L < 2 || L > 12) throw std::invalid_argument("build_ring_hamiltonian: need 2 <= L <= 12");
    const int dim = 1 << L;
    Eigen::MatrixXd H = Eigen::MatrixXd::Zero(dim, dim);
    for (int s = 0; s < dim; ++s) {
        double diag = 0.0;
        for (int j = 0; j < L; ++j) {
            int k = (j + 1) % L;
            int zj = 1 - 2 * ((s >> j) & 1);
            int zk = 1 - 2 * ((s >> k) & 1);
            diag += czz * zj * zk + fz * zj;
            int t = s ^ (1 << j) ^ (1 << k);
            // X X + Y Y flips anti-aligned pairs; X X - Y Y flips aligned ones.
            H(t, s) += (zj * zk < 0) ? (cxx + cyy) : (cxx - cyy);
        }
        H(s, s) += diag;
    }
    return H;
}

// XXZ chain: H = sum_j [ J(X_j X_{j+1} + Y_j Y_{j+1} + Delta Z_j Z_{j+1}) - (h/2) Z_j ].
inline Eigen::MatrixXd build_hamiltonian_xxz(int L, double j_coupling, double delta,
                                             double h_field) {
    return build_ring_hamiltonian(L, j_coupling, j_coupling, j_coupling * delta,
                                  -0.5 * h_field);
}

// XY chain in the convention whose thermal correlators match the
// thermodynamic-limit quadrature formulas (transverse_magnetization, G_k):
//   H = -(lambda/4) sum_j [(1+gamma) X_j X_{j+1} + (1-gamma) Y_j Y_{j+1}] + (1/2) sum_j Z_j.
inline Eigen::MatrixXd build_hamiltonian_xy(int L, double lambda, double gamma) {
    return build_ring_hamiltonian(L, -0.25 * lambda * (1.0 + gamma),
                                  -0.25 * lambda * (1.0 - gamma), 0.0, 0.5);
}

class ThermalRing {
  public:
    ThermalRing(int L, const Eigen::MatrixXd& H) : L_(L) {
        if ((1 << L) != H.rows() || H.rows() != H.cols())
            throw std::invalid_argument("ThermalRing: Hamiltonian dimension mismatch");
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H);
        energies_ = es.eigenvalues();
        vectors_ = es.eigenvectors();
    }

    int length() const { return L_; }
    const Eigen::VectorXd& energies() const { return energies_; }

    double free_energy_per_site(double beta) const {
        double e0 = energies_.minCoeff();
        double z = 0.0;
        for (int n = 0; n < energies_.size(); ++n)
            z += std::exp(-beta * (energies_[n] - e0));
        return (e0 - std::log(z) / beta) / L_;
    }

    // Thermal internal energy per site via the spectrum (one of the two
    // computation paths checked against -d(ln Z)/d(beta)).
    double internal_energy_per_site(double beta) const {
        double e0 = energies_.minCoeff();
        double z = 0.0, u = 0.0;
        for (int n = 0; n < energies_.size(); ++n) {
            double w = std::exp(-beta * (energies_[n] - e0));
            z += w;
            u += w * energies_[n];
        }
        return u / z / L_;
    }

    // Two-site reduced density matrix of exp(-beta H)/Z in the local basis
    // |b_i b_j> with b=0 meaning spin up.
    Eigen::Matrix4d pair_rdm(int i, int j, double beta) const {
        const int dim = 1 << L_;
        if (i == j || i < 0 || j < 0 || i >= L_ || j >= L_)
            throw std::invalid_argument("pair_rdm: bad site indices");
        // Full-state index for (rest configuration r, local pair a).
        std::vector<int> local(dim), rest(dim);
        for (int s = 0; s < dim; ++s) {
            int bi = (s >> i) & 1, bj = (s >> j) & 1;
            local[s] = 2 * bi + bj;
            int r = 0, bit = 0;
            for (int q = 0; q < L_; ++q) {
                if (q == i || q == j) continue;
                r |= ((s >> q) & 1) << bit;
                ++bit;
            }
            rest[s] = r;
        }
        const int nrest = dim / 4;
        std::vector<int> state_of(static_cast<std::size_t>(nrest) * 4);
        for (int s = 0; s < dim; ++s)
            state_of[static_cast<std::size_t>(rest[s]) * 4 + local[s]] = s;

        double e0 = energies_.minCoeff();
        double z = 0.0;
        for (int n = 0; n < dim; ++n) z += std::exp(-beta * (energies_[n] - e0));
        Eigen::Matrix4d rho = Eigen::Matrix4d::Zero();
        for (int n = 0; n < dim; ++n) {
            double p = std::exp(-beta * (energies_[n] - e0)) / z;
            if (p < 1e-16) continue;
            const auto& v = vectors_.col(n);
            for (int r = 0; r < nrest; ++r) {
                const int* base = &state_of[static_cast<std::size_t>(r) * 4];
                for (int a = 0; a < 4; ++a) {
                    double va = v[base[a]];
                    if (va == 0.0) continue;
                    for (int c = 0; c < 4; ++c) rho(a, c) += p * va * v[base[c]];
                }
            }
        }
        return rho;
    }

    // Projects the pair RDM onto X form, asserting that the off-X elements
    // vanish by symmetry (anything beyond tolerance signals a Hamiltonian bug).
    XState thermal_pair_state(int i, int j, double beta, double leak_tol = 1e-10) const {
        Eigen::Matrix4d rho = pair_rdm(i, j, beta);
        double leak = std::max({std::abs(rho(0, 1)), std::abs(rho(0, 2)),
                                std::abs(rho(1, 3)), std::abs(rho(2, 3))});
        if (leak > leak_tol)
            throw std::runtime_error("thermal_pair_state: off-X leakage " + std::to_string(leak));
        XState s;
        s.rho11 = rho(0, 0);
        s.rho22 = 0.5 * (rho(1, 1) + rho(2, 2));
        s.rho44 = rho(3, 3);
        s.rho23 = 0.5 * (rho(1, 2) + rho(2, 1));
        s.rho14 = 0.5 * (rho(0, 3) + rho(3, 0));
        return s;
    }

    PairObservables pair_observables(int i, int j, double beta) const {
        Eigen::Matrix4d rho = pair_rdm(i, j, beta);
        PairObservables o;
        o.k = std::abs(j - i);
        o.sz = rho(0, 0) - rho(3, 3);  // site-averaged <sigma^z>
        o.szsz = rho(0, 0) - rho(1, 1) - rho(2, 2) + rho(3, 3);
        o.sxsx = rho(0, 3) + rho(3, 0) + rho(1, 2) + rho(2, 1);
        o.sysy = rho(1, 2) + rho(2, 1) - rho(0, 3) - rho(3, 0);
        return o;
    }

  private:
    int L_;
    Eigen::VectorXd energies_;
    Eigen::MatrixXd vectors_;
};

}  // namespace spinchain
