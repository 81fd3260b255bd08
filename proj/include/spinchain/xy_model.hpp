#pragma once
// Thermodynamic-limit thermal observables of the anisotropic XY chain in a
// transverse field (Ising at |gamma| = 1, XX at gamma = 0).  The transverse
// magnetization and the G_k functions are quadratures over the Bogoliubov
// band; in-plane correlators are Toeplitz determinants of G values.

#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

#include "spinchain/quadrature.hpp"
#include "spinchain/xstate.hpp"

namespace spinchain {

struct XYParams {
    double lambda = 1.0;  // inverse-field coupling strength, >= 0
    double gamma = 1.0;   // anisotropy in [-1, 1]
    double beta = 1.0;    // inverse temperature, > 0

    void validate() const {
        if (!(lambda >= 0.0)) throw std::invalid_argument("XYParams: lambda must be >= 0");
        if (!(beta > 0.0) || !std::isfinite(beta))
            throw std::invalid_argument("XYParams: beta must be finite and positive");
    }
};

// Quasiparticle dispersion; the gap closes at phi = pi when lambda = 1.
inline double dispersion(double phi, const XYParams& p) {
    double a = p.gamma * p.lambda * std::sin(phi);
    double b = 1.0 + p.lambda * std::cos(phi);
    return 0.5 * std::sqrt(a * a + b * b);
}

namespace detail {
// Shared panel layout: tanh(beta*omega) develops a kink where the dispersion
// nearly closes (phi -> pi at lambda ~ 1, large beta), so panel boundaries
// are forced progressively closer to pi.
inline std::vector<double> xy_panels() {
    const double pi = 3.14159265358979323846;
    return {0.0, 0.5 * pi, pi - 1e-2, pi - 1e-4, pi - 1e-6, pi};
}
}  // namespace detail

inline double transverse_magnetization(const XYParams& p) {
    p.validate();
    const double pi = 3.14159265358979323846;
    auto f = [&](double phi) {
        double w = dispersion(phi, p);
        if (w < 1e-300) return -p.beta * (1.0 + p.lambda * std::cos(phi)) / (2.0 * pi);
        return -(1.0 + p.lambda * std::cos(phi)) * std::tanh(p.beta * w) / (2.0 * pi * w);
    };
    return integrate_panels(f, detail::xy_panels(), 1e-11);
}

// G_k, defined for any integer k (negative allowed).
inline double g_function(int k, const XYParams& p) {
    p.validate();
    const double pi = 3.14159265358979323846;
    auto f1 = [&](double phi) {
        double w = dispersion(phi, p);
        double num = std::cos(k * phi) * (1.0 + p.lambda * std::cos(phi));
        if (w < 1e-300) return p.beta * num / (2.0 * pi);
        return std::tanh(p.beta * w) * num / (2.0 * pi * w);
    };
    auto f2 = [&](double phi) {
        double w = dispersion(phi, p);
        double num = std::sin(k * phi) * std::sin(phi);
        if (w < 1e-300) return p.beta * num / (2.0 * pi);
        return std::tanh(p.beta * w) * num / (2.0 * pi * w);
    };
    double a = integrate_panels(f1, detail::xy_panels(), 1e-11);
    double b = integrate_panels(f2, detail::xy_panels(), 1e-11);
    return a - p.gamma * p.lambda * b;
}

struct PairObservables {
    int k = 1;  // neighbor separation
    double sz = 0.0;
    double sxsx = 0.0;
    double sysy = 0.0;
    double szsz = 0.0;
};

// Evaluates correlators for one parameter point, caching G_k values so the
// Toeplitz determinants reuse them.  Not thread-safe: use one instance per
// worker.
class XYThermal {
  public:
    explicit XYThermal(const XYParams& p) : p_(p) { p_.validate(); }

    const XYParams& params() const { return p_; }

    double g(int k) const {
        auto it = gcache_.find(k);
        if (it != gcache_.end()) return it->second;
        double v = g_function(k, p_);
        gcache_.emplace(k, v);
        return v;
    }

    double sz() const {
        if (!sz_cached_) { sz_ = transverse_magnetization(p_); sz_cached_ = true; }
        return sz_;
    }

    // <sigma^x_0 sigma^x_k>: k x k Toeplitz determinant with entries
    // G_{i-j-1}; <sigma^y_0 sigma^y_k> uses G_{i-j+1}.
    double correlator_xx(int k) const { return toeplitz(k, -1); }
    double correlator_yy(int k) const { return toeplitz(k, +1); }

    double correlator_zz(int k) const {
        if (k < 1) throw std::invalid_argument("correlator_zz: k must be >= 1");
        double m = sz();
        return m * m - g(k) * g(-k);
    }

    PairObservables observables(int k) const {
        PairObservables o;
        o.k = k;
        o.sz = sz();
        o.sxsx = correlator_xx(k);
        o.sysy = correlator_yy(k);
        o.szsz = correlator_zz(k);
        return o;
    }

    XState pair_state(int k) const {
        PairObservables o = observables(k);
        XState s;
        s.rho11 = 0.25 * (1.0 + 2.0 * o.sz + o.szsz);
        s.rho22 = 0.25 * (1.0 - o.szsz);
        s.rho44 = 0.25 * (1.0 - 2.0 * o.sz + o.szsz);
        s.rho23 = 0.25 * (o.sxsx + o.sysy);
        s.rho14 = 0.25 * (o.sxsx - o.sysy);
        if (auto why = s.invalid_reason(1e-9))
            throw std::runtime_error("XY pair_state: numerical inconsistency: " + *why);
        return s;
    }

  private:
    double toeplitz(int k, int offset) const {
        if (k < 1) throw std::invalid_argument("correlator: k must be >= 1");
        if (k == 1) return g(offset);
        if (k == 2) return g(offset) * g(offset) - g(offset - 1) * g(offset + 1);
        // Separations beyond k = 2: plain Gaussian elimination.
        std::vector<double> m(static_cast<std::size_t>(k) * k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) m[i * k + j] = g(i - j + offset);
        double det = 1.0;
        for (int col = 0; col < k; ++col) {
            int piv = col;
            for (int r = col + 1; r < k; ++r)
                if (std::abs(m[r * k + col]) > std::abs(m[piv * k + col])) piv = r;
            if (m[piv * k + col] == 0.0) return 0.0;
            if (piv != col) {
                for (int j = 0; j < k; ++j) std::swap(m[piv * k + j], m[col * k + j]);
                det = -det;
            }
            det *= m[col * k + col];
            for (int r = col + 1; r < k; ++r) {
                double fac = m[r * k + col] / m[col * k + col];
                for (int j = col; j < k; ++j) m[r * k + j] -= fac * m[col * k + j];
            }
        }
        return det;
    }

    XYParams p_;
    mutable std::map<int, double> gcache_;
    mutable double sz_ = 0.0;
    mutable bool sz_cached_ = false;
};

}  // namespace spinchain
