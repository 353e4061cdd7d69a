#pragma once

#include <array>
#include <string>
#include <vector>

#include "spinpoly/sixj.hpp"

namespace spinpoly {

struct SweepRow {
    long k = 0;
    long m = 0;
    long m_prime = 0;
    double sqrtE = 0;
    double sqrtEp = 0;
    double exact_6j = 0;
    double asymptotic_6j = 0;
    double abs_err = 0;
    double envelope = 0;
    double cosine = 0;  // diagnostic, not a CSV column
};

struct SweepSpec {
    std::array<long, 4> ell{};
    long k_lo = 10;
    long k_hi = 200;
    double target_E = 4.0;
    double target_Ep = 4.0;
    int workers = 1;
};

struct SweepResult {
    std::vector<SweepRow> rows;     // ordered by k
    double slope = 0;               // log-log fit of abs_err vs k
    double uniformity = 0;          // max over rows of k^{5/2}|err| / median of same
    std::size_t fitted_points = 0;  // rows entering the slope fit
};

// One sample of the Roberts comparison at level k: exact 6j at the spectrum
// points nearest the targets (with the Bohr-Sommerfeld parities) against the
// asymptotic formula at the same points.
SweepRow sweep_row(const SweepSpec& spec, long k);

// Full sweep plus the fitted error decay rate. Rows with |cos| < cos_cutoff
// are excluded from the fit (the formula's leading term vanishes there).
SweepResult run_sweep(const SweepSpec& spec, double cos_cutoff = 0.05);

std::string sweep_csv_header();
std::string sweep_csv_row(const SweepRow& r);

}  // namespace spinpoly
