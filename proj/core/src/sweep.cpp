#include "spinpoly/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <future>
#include <stdexcept>

namespace spinpoly {

namespace {

// Eq. (29) parity for the internal edge separating {1,2} from {3,4}:
// phi(a) + phi(1) + phi(2) must be even.
int forced_parity(long k, long ell_i, long ell_j) {
    long s = (k * ell_i - 1) + (k * ell_j - 1);
    return static_cast<int>(((s % 2) + 2) % 2);
}

}  // namespace

SweepRow sweep_row(const SweepSpec& spec, long k) {
    const auto& l = spec.ell;
    long m = nearest_admissible_label(k, std::sqrt(spec.target_E),
                                      forced_parity(k, l[0], l[1]));
    long mp = nearest_admissible_label(k, std::sqrt(spec.target_Ep),
                                       forced_parity(k, l[1], l[2]));

    SweepRow row;
    row.k = k;
    row.m = m;
    row.m_prime = mp;
    row.sqrtE = (m + 1.0) / k;
    row.sqrtEp = (mp + 1.0) / k;

    SixJLabels lbl{k * l[0] - 1, k * l[1] - 1, m, k * l[2] - 1, k * l[3] - 1, mp};
    row.exact_6j = racah_6j(lbl).to_double();

    std::array<double, 4> ell_real{static_cast<double>(l[0]), static_cast<double>(l[1]),
                                   static_cast<double>(l[2]), static_cast<double>(l[3])};
    RobertsValue rv = roberts_asymptotic(k, row.sqrtE * row.sqrtE, row.sqrtEp * row.sqrtEp,
                                         ell_real);
    row.asymptotic_6j = rv.sixj_scale;
    row.envelope = rv.envelope;
    row.cosine = rv.cosine;
    row.abs_err = std::fabs(row.exact_6j - row.asymptotic_6j);
    return row;
}

SweepResult run_sweep(const SweepSpec& spec, double cos_cutoff) {
    if (spec.k_lo < 1 || spec.k_hi < spec.k_lo)
        throw std::invalid_argument("bad k range");

    std::vector<long> ks;
    for (long k = spec.k_lo; k <= spec.k_hi; ++k) ks.push_back(k);

    SweepResult out;
    out.rows.resize(ks.size());
    int workers = std::max(1, spec.workers);
    if (workers == 1) {
        for (std::size_t i = 0; i < ks.size(); ++i) out.rows[i] = sweep_row(spec, ks[i]);
    } else {
        std::atomic<std::size_t> next{0};
        auto work = [&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= ks.size()) return;
                out.rows[i] = sweep_row(spec, ks[i]);
            }
        };
        std::vector<std::future<void>> pool;
        for (int w = 0; w < workers; ++w) pool.push_back(std::async(std::launch::async, work));
        for (auto& f : pool) f.get();
    }

    // least squares on log-log, skipping near-zero cosines
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t n = 0;
    std::vector<double> scaled;
    for (const auto& r : out.rows) {
        scaled.push_back(std::pow(static_cast<double>(r.k), 2.5) * r.abs_err);
        if (std::fabs(r.cosine) < cos_cutoff || r.abs_err <= 0) continue;
        double x = std::log(static_cast<double>(r.k));
        double y = std::log(r.abs_err);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++n;
    }
    out.fitted_points = n;
    if (n >= 2) out.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);

    std::sort(scaled.begin(), scaled.end());
    if (!scaled.empty()) {
        double median = scaled[scaled.size() / 2];
        if (median > 0) out.uniformity = scaled.back() / median;
    }
    return out;
}

std::string sweep_csv_header() {
    return "k,m,m_prime,sqrtE,sqrtEp,exact_6j,asymptotic_6j,abs_err,envelope";
}

std::string sweep_csv_row(const SweepRow& r) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%ld,%ld,%ld,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g", r.k, r.m,
                  r.m_prime, r.sqrtE, r.sqrtEp, r.exact_6j, r.asymptotic_6j, r.abs_err,
                  r.envelope);
    return buf;
}

}  // namespace spinpoly
