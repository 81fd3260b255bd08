#pragma once
// Critical-point estimation from finite-temperature sweeps: derivative
// extrema (first-order and infinite/second-order transitions), sudden-change
// branch switches of the discord minimizer, and regrowth / sudden-death
// scans in temperature.
//
// Models enter through a uniform "evaluate one tuning point" functional, so
// the XXZ, XY, and ED backends are interchangeable.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "spinchain/discord.hpp"
#include "spinchain/parallel.hpp"
#include "spinchain/xstate.hpp"

namespace spinchain {

enum class Quantity { TQD, EoF, Sxx, Szz, Sz, Entropy, SpecificHeat, Susceptibility };

inline const char* to_string(Quantity q) {
    switch (q) {
        case Quantity::TQD: return "TQD";
        case Quantity::EoF: return "EoF";
        case Quantity::Sxx: return "Sxx";
        case Quantity::Szz: return "Szz";
        case Quantity::Sz: return "Sz";
        case Quantity::Entropy: return "Entropy";
        case Quantity::SpecificHeat: return "SpecificHeat";
        default: return "Susceptibility";
    }
}

inline bool parse_quantity(const std::string& s, Quantity& out) {
    for (Quantity q : {Quantity::TQD, Quantity::EoF, Quantity::Sxx, Quantity::Szz, Quantity::Sz,
                       Quantity::Entropy, Quantity::SpecificHeat, Quantity::Susceptibility})
        if (s == to_string(q)) { out = q; return true; }
    return false;
}

// Everything a model can report at one tuning value.  The thermodynamic
// fields stay NaN unless the backend fills them.
struct ModelPoint {
    XState state;
    double sz = std::numeric_limits<double>::quiet_NaN();
    double sxsx = std::numeric_limits<double>::quiet_NaN();
    double szsz = std::numeric_limits<double>::quiet_NaN();
    double entropy = std::numeric_limits<double>::quiet_NaN();
    double specific_heat = std::numeric_limits<double>::quiet_NaN();
    double susceptibility = std::numeric_limits<double>::quiet_NaN();
};

using ModelEval = std::function<ModelPoint(double tuning)>;

struct SweepCurve {
    Quantity tag = Quantity::TQD;
    double kT = 0.0;
    std::vector<double> tuning;
    std::vector<double> values;
    std::vector<Branch> branch;  // populated for TQD curves only

    double step() const {
        if (tuning.size() < 2) throw std::runtime_error("SweepCurve: degenerate grid");
        return tuning[1] - tuning[0];
    }
};

enum class CPMethod { FirstDerivExtremum, SecondDerivExtremum, BranchSwitch, MaxValue };

inline const char* to_string(CPMethod m) {
    switch (m) {
        case CPMethod::FirstDerivExtremum: return "FirstDerivExtremum";
        case CPMethod::SecondDerivExtremum: return "SecondDerivExtremum";
        case CPMethod::BranchSwitch: return "BranchSwitch";
        default: return "MaxValue";
    }
}

struct CPEstimate {
    bool valid = false;  // false = "no estimate" (not an error)
    double location = std::numeric_limits<double>::quiet_NaN();
    double uncertainty = std::numeric_limits<double>::quiet_NaN();
    double kT = 0.0;
    CPMethod method = CPMethod::FirstDerivExtremum;
};

// One model evaluation per grid point, shared by every requested quantity.
inline std::vector<SweepCurve> sweep(const ModelEval& eval, const std::vector<double>& grid,
                                     const std::vector<Quantity>& quantities, double kT,
                                     unsigned threads = 1) {
    if (grid.size() < 2) throw std::invalid_argument("sweep: grid too small");
    for (std::size_t i = 0; i + 1 < grid.size(); ++i)
        if (!(grid[i] < grid[i + 1])) throw std::invalid_argument("sweep: grid must increase");
    std::vector<ModelPoint> pts(grid.size());
    std::vector<CorrelationReport> reports(grid.size());
    bool needs_state = false;
    for (Quantity q : quantities)
        if (q == Quantity::TQD || q == Quantity::EoF) needs_state = true;
    parallel_for(grid.size(), threads, [&](std::size_t i) {
        pts[i] = eval(grid[i]);
        if (needs_state) reports[i] = correlation_report(pts[i].state);
    });
    std::vector<SweepCurve> out;
    for (Quantity q : quantities) {
        SweepCurve c;
        c.tag = q;
        c.kT = kT;
        c.tuning = grid;
        c.values.resize(grid.size());
        if (q == Quantity::TQD) c.branch.resize(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const ModelPoint& m = pts[i];
            switch (q) {
                case Quantity::TQD:
                    c.values[i] = reports[i].discord;
                    c.branch[i] = reports[i].minimizer_branch;
                    break;
                case Quantity::EoF: c.values[i] = reports[i].eof; break;
                case Quantity::Sxx: c.values[i] = m.sxsx; break;
                case Quantity::Szz: c.values[i] = m.szsz; break;
                case Quantity::Sz: c.values[i] = m.sz; break;
                case Quantity::Entropy: c.values[i] = m.entropy; break;
                case Quantity::SpecificHeat: c.values[i] = m.specific_heat; break;
                case Quantity::Susceptibility: c.values[i] = m.susceptibility; break;
            }
        }
        out.push_back(std::move(c));
    }
    return out;
}

// Central differences on the uniform grid; endpoints one-sided.
inline SweepCurve numerical_derivative(const SweepCurve& curve, int order) {
    std::size_t n = curve.values.size();
    if (n < 5) throw std::invalid_argument("numerical_derivative: need at least 5 points");
    if (order != 1 && order != 2) throw std::invalid_argument("numerical_derivative: order must be 1 or 2");
    double h = curve.step();
    SweepCurve d = curve;
    d.branch.clear();
    const std::vector<double>& v = curve.values;
    if (order == 1) {
        for (std::size_t i = 1; i + 1 < n; ++i) d.values[i] = (v[i + 1] - v[i - 1]) / (2.0 * h);
        d.values[0] = (v[1] - v[0]) / h;
        d.values[n - 1] = (v[n - 1] - v[n - 2]) / h;
    } else {
        for (std::size_t i = 1; i + 1 < n; ++i)
            d.values[i] = (v[i + 1] - 2.0 * v[i] + v[i - 1]) / (h * h);
        d.values[0] = (v[2] - 2.0 * v[1] + v[0]) / (h * h);
        d.values[n - 1] = (v[n - 1] - 2.0 * v[n - 2] + v[n - 3]) / (h * h);
    }
    return d;
}

// Sudden changes: every adjacent-pair change of the minimizer branch, located
// at the interval midpoint.
inline std::vector<CPEstimate> detect_branch_switch(const SweepCurve& curve) {
    if (curve.branch.size() != curve.tuning.size())
        throw std::invalid_argument("detect_branch_switch: curve carries no branch sequence");
    std::vector<CPEstimate> out;
    for (std::size_t i = 0; i + 1 < curve.branch.size(); ++i) {
        if (curve.branch[i] == curve.branch[i + 1]) continue;
        CPEstimate e;
        e.valid = true;
        e.location = 0.5 * (curve.tuning[i] + curve.tuning[i + 1]);
        e.uncertainty = 0.5 * curve.step();
        e.kT = curve.kT;
        e.method = CPMethod::BranchSwitch;
        out.push_back(e);
    }
    return out;
}

// Dominant local extremum of |d^order(curve)| among interior extrema inside
// [window_lo, window_hi].  Returns an invalid estimate when none exists.
inline CPEstimate estimate_cp(const SweepCurve& curve, int order,
                              double window_lo = -std::numeric_limits<double>::infinity(),
                              double window_hi = std::numeric_limits<double>::infinity()) {
    SweepCurve d = numerical_derivative(curve, order);
    CPEstimate best;
    best.kT = curve.kT;
    best.method = order == 1 ? CPMethod::FirstDerivExtremum : CPMethod::SecondDerivExtremum;
    double best_mag = 0.0;
    // Noise floor: finite-difference jitter on a featureless curve produces
    // spurious "extrema" whose prominence is ~1e-9 of the derivative scale.
    double dmax = 0.0, vmax = 0.0;
    for (double v : d.values) dmax = std::max(dmax, std::abs(v));
    for (double v : curve.values) vmax = std::max(vmax, std::abs(v));
    // Relative floor for real features plus an absolute floor at the
    // finite-difference jitter scale of the underlying curve (the derivative
    // of a featureless curve is jitter through and through).
    const double h = curve.step();
    const double noise = 1e-9 * dmax + 1e-12 * vmax / (order == 1 ? h : h * h);
    for (std::size_t i = 1; i + 1 < d.values.size(); ++i) {
        if (d.tuning[i] < window_lo || d.tuning[i] > window_hi) continue;
        double a = std::abs(d.values[i]);
        double l = std::abs(d.values[i - 1]), r = std::abs(d.values[i + 1]);
        if (a < l - noise || a < r - noise) continue;            // not a local max
        if (a <= l + noise && a <= r + noise) continue;          // flat within noise
        if (!best.valid || a > best_mag) {
            best.valid = true;
            best.location = d.tuning[i];
            best.uncertainty = 0.5 * curve.step();
            best_mag = a;
        }
    }
    return best;
}

// Location of the curve maximum inside the window (the "global maximum of
// TQD and EoF" critical-point signature).
inline CPEstimate estimate_max(const SweepCurve& curve,
                               double window_lo = -std::numeric_limits<double>::infinity(),
                               double window_hi = std::numeric_limits<double>::infinity()) {
    CPEstimate best;
    best.kT = curve.kT;
    best.method = CPMethod::MaxValue;
    double best_v = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i + 1 < curve.values.size(); ++i) {
        if (curve.tuning[i] < window_lo || curve.tuning[i] > window_hi) continue;
        bool local_max = curve.values[i] >= curve.values[i - 1] && curve.values[i] >= curve.values[i + 1] &&
                         (curve.values[i] > curve.values[i - 1] || curve.values[i] > curve.values[i + 1]);
        if (local_max && curve.values[i] > best_v) {
            best_v = curve.values[i];
            best.valid = true;
            best.location = curve.tuning[i];
            best.uncertainty = 0.5 * curve.step();
        }
    }
    return best;
}

struct CPTableRow {
    double kT = 0.0;
    std::string estimator;  // quantity name, or "<name>-extrapolation"
    CPEstimate estimate;
};

inline std::vector<double> uniform_grid(double lo, double hi, double step) {
    std::vector<double> g;
    int n = static_cast<int>(std::round((hi - lo) / step));
    for (int i = 0; i <= n; ++i) g.push_back(lo + i * step);
    return g;
}

// Runs one sweep per temperature for each estimator quantity, locates the CP
// with the requested derivative order, optionally refines on a 10x finer
// local grid, and appends a 2-point linear T->0 extrapolation of the two
// coldest valid estimates (reported separately, never substituted).
inline std::vector<CPTableRow> cp_vs_temperature(
    const std::function<ModelEval(double kT)>& model_at, const std::vector<Quantity>& estimators,
    const std::vector<double>& kTs, double grid_lo, double grid_hi, double grid_step, int order,
    bool refine = true, unsigned threads = 1) {
    std::vector<CPTableRow> rows;
    std::vector<double> grid = uniform_grid(grid_lo, grid_hi, grid_step);
    for (Quantity q : estimators) {
        std::vector<std::pair<double, CPEstimate>> found;
        for (double kT : kTs) {
            ModelEval eval = model_at(kT);
            std::vector<SweepCurve> curves = sweep(eval, grid, {q}, kT, threads);
            CPEstimate est = estimate_cp(curves[0], order, grid_lo, grid_hi);
            if (est.valid && refine) {
                double lo = std::max(grid_lo, est.location - 2.0 * grid_step);
                double hi = std::min(grid_hi, est.location + 2.0 * grid_step);
                std::vector<double> fine = uniform_grid(lo, hi, grid_step / 10.0);
                std::vector<SweepCurve> fc = sweep(eval, fine, {q}, kT, threads);
                CPEstimate r = estimate_cp(fc[0], order, lo, hi);
                if (r.valid) { r.kT = kT; est = r; }
            }
            rows.push_back({kT, to_string(q), est});
            if (est.valid) found.emplace_back(kT, est);
        }
        if (found.size() >= 2) {
            // Two coldest temperatures, linearly extrapolated to kT = 0.
            std::sort(found.begin(), found.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            const auto& [t1, e1] = found[0];
            const auto& [t2, e2] = found[1];
            CPEstimate ex = e1;
            ex.kT = 0.0;
            ex.location = e1.location + (e1.location - e2.location) / (t2 - t1) * t1;
            ex.uncertainty = std::max(e1.uncertainty, e2.uncertainty);
            rows.push_back({0.0, std::string(to_string(q)) + "-extrapolation", ex});
        }
    }
    return rows;
}

struct RegrowthReport {
    bool regrowth = false;
    double regrowth_kT = std::numeric_limits<double>::quiet_NaN();  // local minimum before re-increase
    bool sudden_death = false;
    double death_kT = std::numeric_limits<double>::quiet_NaN();  // first T with EoF = 0 staying 0
    double tqd_at_death = std::numeric_limits<double>::quiet_NaN();
};

// kTs must increase; tqd/eof are the corresponding curves in temperature.
inline RegrowthReport regrowth_scan(const std::vector<double>& kTs, const std::vector<double>& tqd,
                                    const std::vector<double>& eof_values) {
    if (kTs.size() < 50) throw std::invalid_argument("regrowth_scan: need >= 50 temperature points");
    if (tqd.size() != kTs.size() || eof_values.size() != kTs.size())
        throw std::invalid_argument("regrowth_scan: size mismatch");
    RegrowthReport r;
    for (std::size_t i = 1; i + 1 < tqd.size(); ++i) {
        if (!(tqd[i] < tqd[i - 1])) continue;
        double later_max = *std::max_element(tqd.begin() + i + 1, tqd.end());
        if (later_max > tqd[i] + 1e-9) {
            r.regrowth = true;
            r.regrowth_kT = kTs[i];
            break;
        }
    }
    for (std::size_t i = 0; i < eof_values.size(); ++i) {
        if (eof_values[i] > 1e-15) continue;
        bool stays = true;
        for (std::size_t j = i; j < eof_values.size(); ++j)
            if (eof_values[j] > 1e-15) { stays = false; break; }
        if (stays) {
            r.sudden_death = true;
            r.death_kT = kTs[i];
            r.tqd_at_death = tqd[i];
            break;
        }
    }
    return r;
}

}  // namespace spinchain
