#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "spinpoly/sweep.hpp"

using namespace spinpoly;

TEST_CASE("sweep rows pick the nearest admissible spectrum points") {
    SweepSpec spec;
    spec.ell = {2, 2, 2, 2};
    auto r = sweep_row(spec, 10);
    CHECK(r.k == 10);
    // boundary labels k l - 1 = 19 force even m; the tie 18 vs 20 resolves down
    CHECK(r.m == 18);
    CHECK(r.m_prime == 18);
    CHECK(r.sqrtE == doctest::Approx(1.9));
    CHECK(r.abs_err == doctest::Approx(std::abs(r.exact_6j - r.asymptotic_6j)));
    CHECK(r.envelope > 0);
}

TEST_CASE("short sweep already shows the k^{-5/2} error decay") {
    SweepSpec spec;
    spec.ell = {2, 2, 2, 2};
    spec.k_lo = 10;
    spec.k_hi = 80;
    auto res = run_sweep(spec);
    CHECK(res.rows.size() == 71);
    CHECK(res.fitted_points > 40);
    CHECK(res.slope < -2.2);
    CHECK(res.slope > -2.8);
    CHECK(res.uniformity < 10.0);
    for (std::size_t i = 0; i < res.rows.size(); ++i)
        CHECK(res.rows[i].k == spec.k_lo + static_cast<long>(i));
}

TEST_CASE("sweeps are deterministic and worker-count independent") {
    SweepSpec spec;
    spec.ell = {2, 2, 2, 2};
    spec.target_E = 4.5;
    spec.target_Ep = 3.5;
    spec.k_lo = 12;
    spec.k_hi = 40;
    auto a = run_sweep(spec);
    spec.workers = 4;
    auto b = run_sweep(spec);
    REQUIRE(a.rows.size() == b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        CHECK(a.rows[i].exact_6j == b.rows[i].exact_6j);
        CHECK(a.rows[i].asymptotic_6j == b.rows[i].asymptotic_6j);
    }
    CHECK(a.slope == b.slope);
}

TEST_CASE("CSV shape") {
    CHECK(sweep_csv_header() ==
          "k,m,m_prime,sqrtE,sqrtEp,exact_6j,asymptotic_6j,abs_err,envelope");
    SweepSpec spec;
    spec.ell = {2, 2, 2, 2};
    auto row = sweep_csv_row(sweep_row(spec, 15));
    CHECK(std::count(row.begin(), row.end(), ',') == 8);
    CHECK(row.substr(0, 3) == "15,");
}
