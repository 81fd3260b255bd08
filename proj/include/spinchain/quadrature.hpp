#pragma once
// Adaptive Gauss-Kronrod 7/15 quadrature with explicit panel seeding, plus a
// composite Simpson rule used as an independent cross-check in the tests.

#include <cmath>
#include <stdexcept>
#include <vector>

namespace spinchain {

namespace detail {
// Kronrod-15 abscissae on [0,1] side (symmetric) and weights; the embedded
// Gauss-7 rule uses the odd-indexed abscissae.
inline constexpr double kGK15X[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
inline constexpr double kGK15WK[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
inline constexpr double kGK15WG[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

template <class F>
inline void gk15(const F& f, double a, double b, double& kronrod, double& err) {
    double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double fc = f(c);
    double resk = kGK15WK[7] * fc;
    double resg = kGK15WG[3] * fc;
    for (int i = 0; i < 7; ++i) {
        double x = h * kGK15X[i];
        double fsum = f(c - x) + f(c + x);
        resk += kGK15WK[i] * fsum;
        if (i % 2 == 1) resg += kGK15WG[i / 2] * fsum;
    }
    kronrod = resk * h;
    err = std::abs((resk - resg) * h);
}
}  // namespace detail

// Integrates f on [a,b] to absolute accuracy abstol by recursive bisection.
template <class F>
double integrate(const F& f, double a, double b, double abstol = 1e-12,
                 int max_depth = 48) {
    struct Item { double a, b, tol; int depth; };
    std::vector<Item> stack{{a, b, abstol, 0}};
    double total = 0.0;
    while (!stack.empty()) {
        Item it = stack.back();
        stack.pop_back();
        double val, err;
        detail::gk15(f, it.a, it.b, val, err);
        // Subdividing below the roundoff floor of the interval value can only
        // add work, never accuracy.
        if (err <= it.tol || err <= 1e-14 * std::abs(val) || it.depth >= max_depth) {
            if (it.depth >= max_depth && err > 100.0 * it.tol)
                throw std::runtime_error("integrate: refinement limit reached, error " +
                                         std::to_string(err));
            total += val;
            continue;
        }
        double m = 0.5 * (it.a + it.b);
        stack.push_back({it.a, m, 0.5 * it.tol, it.depth + 1});
        stack.push_back({m, it.b, 0.5 * it.tol, it.depth + 1});
    }
    return total;
}

// Same, with forced panel boundaries (for integrands with sharp interior
// features whose locations are known).
template <class F>
double integrate_panels(const F& f, const std::vector<double>& breaks,
                        double abstol = 1e-12) {
    if (breaks.size() < 2) throw std::invalid_argument("integrate_panels: need >= 2 breakpoints");
    double total = 0.0;
    double tol = abstol / static_cast<double>(breaks.size() - 1);
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i)
        total += integrate(f, breaks[i], breaks[i + 1], tol);
    return total;
}

// Composite Simpson rule on n (even) subintervals; deliberately independent
// of the adaptive scheme.
template <class F>
double integrate_simpson(const F& f, double a, double b, int n = 4096) {
    if (n % 2) ++n;
    double h = (b - a) / n;
    double s = f(a) + f(b);
    for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
}

}  // namespace spinchain
