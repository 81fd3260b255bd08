#include <doctest.h>

#include <cmath>
#include <sstream>
#include <vector>

#include "spinchain/cp_detector.hpp"

namespace sc = spinchain;

namespace {

sc::SweepCurve curve_from(const std::vector<double>& grid, double (*f)(double)) {
    sc::SweepCurve c;
    c.tuning = grid;
    for (double x : grid) c.values.push_back(f(x));
    return c;
}

}  // namespace

TEST_CASE("numerical derivative of linear and quadratic data") {
    std::vector<double> grid = sc::uniform_grid(0.0, 2.0, 0.1);
    sc::SweepCurve lin = curve_from(grid, [](double x) { return 3.0 * x + 2.0; });
    sc::SweepCurve d1 = sc::numerical_derivative(lin, 1);
    for (std::size_t i = 0; i < d1.values.size(); ++i)
        CHECK(d1.values[i] == doctest::Approx(3.0).epsilon(1e-10));
    sc::SweepCurve quad = curve_from(grid, [](double x) { return x * x; });
    sc::SweepCurve d2 = sc::numerical_derivative(quad, 2);
    for (std::size_t i = 0; i < d2.values.size(); ++i)
        CHECK(d2.values[i] == doctest::Approx(2.0).epsilon(1e-9));
    CHECK_THROWS_AS((void)sc::numerical_derivative(lin, 3), std::invalid_argument);
}

TEST_CASE("derivative extremum locates a smoothed step") {
    std::vector<double> grid = sc::uniform_grid(0.0, 2.0, 0.01);
    sc::SweepCurve c = curve_from(grid, [](double x) { return std::tanh((x - 1.0) / 0.05); });
    sc::CPEstimate e = sc::estimate_cp(c, 1);
    REQUIRE(e.valid);
    CHECK(e.method == sc::CPMethod::FirstDerivExtremum);
    CHECK(std::abs(e.location - 1.0) <= 0.01);
    CHECK(e.uncertainty == doctest::Approx(0.005));
    // Rescaling the observable must not move the estimate.
    sc::SweepCurve scaled = c;
    for (double& v : scaled.values) v *= 7.0;
    CHECK(sc::estimate_cp(scaled, 1).location == e.location);
    // A window that excludes the step produces no estimate.
    CHECK(!sc::estimate_cp(c, 1, 1.5, 2.0).valid);
}

TEST_CASE("featureless curves produce no estimate") {
    std::vector<double> grid = sc::uniform_grid(0.0, 1.0, 0.05);
    sc::SweepCurve lin = curve_from(grid, [](double x) { return 2.0 * x; });
    CHECK(!sc::estimate_cp(lin, 1).valid);
    CHECK(!sc::estimate_cp(lin, 2).valid);
    CHECK(!sc::estimate_max(lin).valid);
}

TEST_CASE("estimate_max finds the interior peak") {
    std::vector<double> grid = sc::uniform_grid(0.0, 2.0, 0.05);
    sc::SweepCurve c = curve_from(grid, [](double x) { return -(x - 0.75) * (x - 0.75); });
    sc::CPEstimate e = sc::estimate_max(c);
    REQUIRE(e.valid);
    CHECK(std::abs(e.location - 0.75) <= 0.05);
}

TEST_CASE("branch switches are reported at interval midpoints") {
    sc::SweepCurve c;
    c.tuning = sc::uniform_grid(0.0, 1.0, 0.1);
    c.values.assign(c.tuning.size(), 0.0);
    c.branch.assign(c.tuning.size(), sc::Branch::Branch1);
    for (std::size_t i = 6; i < c.branch.size(); ++i) c.branch[i] = sc::Branch::Branch3;
    std::vector<sc::CPEstimate> sw = sc::detect_branch_switch(c);
    REQUIRE(sw.size() == 1);
    CHECK(sw[0].location == doctest::Approx(0.55));
    CHECK(sw[0].method == sc::CPMethod::BranchSwitch);
    c.branch.clear();
    CHECK_THROWS_AS((void)sc::detect_branch_switch(c), std::invalid_argument);
}

TEST_CASE("sweep output is independent of the thread count") {
    sc::ModelEval eval = [](double x) {
        sc::ModelPoint m;
        double a = 0.3 + 0.1 * std::sin(x);
        m.state = sc::XState{a, 0.5 * (1.0 - 2.0 * a), a, 0.05, 0.0};
        m.sz = x;
        return m;
    };
    std::vector<double> grid = sc::uniform_grid(0.0, 1.0, 0.05);
    auto a = sc::sweep(eval, grid, {sc::Quantity::TQD, sc::Quantity::Sz}, 1.0, 1);
    auto b = sc::sweep(eval, grid, {sc::Quantity::TQD, sc::Quantity::Sz}, 1.0, 8);
    for (std::size_t q = 0; q < a.size(); ++q)
        for (std::size_t i = 0; i < grid.size(); ++i) {
            CHECK(a[q].values[i] == b[q].values[i]);  // bitwise
            if (!a[q].branch.empty()) CHECK(a[q].branch[i] == b[q].branch[i]);
        }
}

TEST_CASE("regrowth and sudden-death detection on synthetic curves") {
    std::vector<double> kT, tqd, eof_v;
    for (int i = 0; i < 100; ++i) {
        double t = 0.05 + 0.05 * i;
        kT.push_back(t);
        // dips at t ~ 1 then regrows before decaying
        tqd.push_back(std::exp(-t) + 0.4 * std::exp(-(t - 2.0) * (t - 2.0)));
        eof_v.push_back(t < 2.0 ? 0.3 * (2.0 - t) : 0.0);
    }
    sc::RegrowthReport r = sc::regrowth_scan(kT, tqd, eof_v);
    CHECK(r.regrowth);
    CHECK(r.regrowth_kT > 0.5);
    CHECK(r.regrowth_kT < 2.0);
    CHECK(r.sudden_death);
    CHECK(r.death_kT == doctest::Approx(2.0).epsilon(0.05));
    CHECK(r.tqd_at_death > 1e-6);

    std::vector<double> mono(kT.size());
    for (std::size_t i = 0; i < kT.size(); ++i) mono[i] = std::exp(-kT[i]);
    sc::RegrowthReport m = sc::regrowth_scan(kT, mono, mono);
    CHECK(!m.regrowth);
    CHECK(!m.sudden_death);

    CHECK_THROWS_AS((void)sc::regrowth_scan({1.0, 2.0}, {0.0, 0.0}, {0.0, 0.0}),
                    std::invalid_argument);
}

TEST_CASE("quantity names round-trip") {
    for (sc::Quantity q : {sc::Quantity::TQD, sc::Quantity::EoF, sc::Quantity::Sxx,
                           sc::Quantity::Szz, sc::Quantity::Sz, sc::Quantity::Entropy,
                           sc::Quantity::SpecificHeat, sc::Quantity::Susceptibility}) {
        sc::Quantity back;
        REQUIRE(sc::parse_quantity(sc::to_string(q), back));
        CHECK(back == q);
    }
    sc::Quantity dummy;
    CHECK(!sc::parse_quantity("NotAQuantity", dummy));
}
