#pragma once
// Two-qubit X-form density matrices in the basis |00>, |01>, |10>, |11>.
// The only nonzero entries sit on the diagonal and the anti-diagonal, with
// rho33 = rho22 and real coherences rho23 (inner) and rho14 (outer).

#include <array>
#include <cmath>
#include <optional>
#include <string>

namespace spinchain {

// p*log2(p) with the removable singularity 0*log(0) = 0.
inline double xlog2(double p) { return p > 0.0 ? p * std::log2(p) : 0.0; }

// Binary Shannon entropy in bits.
inline double binary_entropy(double p) { return -xlog2(p) - xlog2(1.0 - p); }

struct XState {
    double rho11 = 0.0;
    double rho22 = 0.0;  // equals rho33
    double rho44 = 0.0;
    double rho23 = 0.0;
    double rho14 = 0.0;

    double rho33() const { return rho22; }

    // Closed-form spectrum: the outer 2x2 block mixes |00>,|11>, the inner
    // block mixes |01>,|10>.
    std::array<double, 4> eigenvalues() const {
        double rad = std::sqrt((rho11 - rho44) * (rho11 - rho44) + 4.0 * rho14 * rho14);
        return {0.5 * (rho11 + rho44 + rad), 0.5 * (rho11 + rho44 - rad),
                rho22 + std::abs(rho23), rho22 - std::abs(rho23)};
    }

    // Returns an explanation if the matrix is not a valid state; empty
    // optional means valid within tol.
    std::optional<std::string> invalid_reason(double tol = 1e-9) const {
        if (!std::isfinite(rho11) || !std::isfinite(rho22) || !std::isfinite(rho44) ||
            !std::isfinite(rho23) || !std::isfinite(rho14))
            return "non-finite matrix element";
        double tr = rho11 + 2.0 * rho22 + rho44;
        if (std::abs(tr - 1.0) > std::max(tol, 1e-12))
            return "trace differs from one by " + std::to_string(tr - 1.0);
        for (double lam : eigenvalues())
            if (lam < -tol)
                return "negative eigenvalue " + std::to_string(lam);
        if (std::abs(rho23) > rho22 + tol)
            return "|rho23| exceeds rho22 (inner block not positive)";
        if (rho14 * rho14 > rho11 * rho44 + tol)
            return "rho14^2 exceeds rho11*rho44 (outer block not positive)";
        return std::nullopt;
    }

    bool valid(double tol = 1e-9) const { return !invalid_reason(tol); }
};

}  // namespace spinchain
