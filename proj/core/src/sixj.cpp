#include "spinpoly/sixj.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <deque>
#include <mutex>

#include "spinpoly/tetra.hpp"

namespace spinpoly {

const Int& factorial(long n) {
    // deque keeps references stable while the cache grows; the atomic
    // watermark lets readers proceed without the growth lock
    static std::deque<Int> cache{1, 1};
    static std::atomic<std::size_t> ready{2};
    static std::mutex grow;
    if (n < 0) throw std::domain_error("factorial of a negative integer");
    auto idx = static_cast<std::size_t>(n);
    if (idx < ready.load(std::memory_order_acquire)) return cache[idx];
    std::lock_guard lock(grow);
    while (cache.size() <= idx) {
        cache.push_back(cache.back() * Int(cache.size()));
        ready.store(cache.size(), std::memory_order_release);
    }
    return cache[idx];
}

bool SixJLabels::admissible() const {
    return clebsch_gordan_ok(m1, m2, m) && clebsch_gordan_ok(m3, m4, m) &&
           clebsch_gordan_ok(m1, mp, m4) && clebsch_gordan_ok(m2, mp, m3);
}

namespace {

// Delta(a,b,c)^2 in m-units (arguments are doubled spins).
Rational delta_sq(long a, long b, long c) {
    return Rational(factorial((a + b - c) / 2) * factorial((a - b + c) / 2) *
                    factorial((-a + b + c) / 2)) /
           Rational(factorial((a + b + c) / 2 + 1));
}

}  // namespace

SqrtRational racah_6j(const SixJLabels& l) {
    if (!l.admissible()) return SqrtRational{};

    const long t1 = (l.m1 + l.m2 + l.m) / 2;
    const long t2 = (l.m1 + l.mp + l.m4) / 2;
    const long t3 = (l.m3 + l.m2 + l.mp) / 2;
    const long t4 = (l.m3 + l.m4 + l.m) / 2;
    const long q1 = (l.m1 + l.m2 + l.m3 + l.m4) / 2;
    const long q2 = (l.m2 + l.m + l.m4 + l.mp) / 2;
    const long q3 = (l.m + l.m1 + l.mp + l.m3) / 2;

    const long z_lo = std::max({t1, t2, t3, t4});
    const long z_hi = std::min({q1, q2, q3});

    Rational sum = 0;
    for (long z = z_lo; z <= z_hi; ++z) {
        Rational term = Rational(factorial(z + 1)) /
                        Rational(factorial(z - t1) * factorial(z - t2) * factorial(z - t3) *
                                 factorial(z - t4) * factorial(q1 - z) * factorial(q2 - z) *
                                 factorial(q3 - z));
        sum += (z % 2 == 0) ? term : -term;
    }

    Rational rad = delta_sq(l.m1, l.m2, l.m) * delta_sq(l.m1, l.mp, l.m4) *
                   delta_sq(l.m3, l.m2, l.mp) * delta_sq(l.m3, l.m4, l.m);
    return SqrtRational(sum, rad);
}

OverlapPrediction overlap_from_6j(long k, const std::array<long, 4>& ell, long m, long mp) {
    SixJLabels lbl{k * ell[0] - 1, k * ell[1] - 1, m, k * ell[2] - 1, k * ell[3] - 1, mp};
    if (!lbl.admissible()) throw std::domain_error("inadmissible 6j labels");
    SqrtRational sixj = racah_6j(lbl);
    long ell_sum = ell[0] + ell[1] + ell[2] + ell[3];
    int renorm = (k * ell_sum / 2) % 2 == 0 ? 1 : -1;
    OverlapPrediction out;
    out.sign = renorm * sixj.sign();
    Rational mag = sixj.coeff();
    if (mag < 0) mag = -mag;
    out.magnitude = SqrtRational(mag, sixj.radicand() * Rational((m + 1) * (mp + 1)));
    return out;
}

RobertsValue roberts_asymptotic(long k, double E, double Ep, const std::array<double, 4>& ell) {
    TetraEdges edges{std::sqrt(E), std::sqrt(Ep), ell[0], ell[1], ell[2], ell[3]};
    double V = volume(edges);
    if (V <= 0) throw DegenerateTetra("Roberts formula needs positive volume");
    double theta = theta_phase(edges);
    double cosine = std::cos(0.5 * k * theta + M_PI / 4.0);
    double common = std::sqrt(2.0 / (3.0 * M_PI)) / std::sqrt(V);
    RobertsValue out;
    out.cosine = cosine;
    out.envelope = common * std::pow(static_cast<double>(k), -1.5);
    out.sixj_scale = out.envelope * cosine;
    out.overlap_scale =
        common * std::pow(static_cast<double>(k), -0.5) * std::pow(E * Ep, 0.25) * cosine;
    return out;
}

bool bs_check(const AdmissibleGraph& g, const std::vector<long>& ell, long k,
              const Coloring& phi) {
    if (static_cast<int>(ell.size()) != g.n_half() ||
        phi.half.size() != ell.size() ||
        phi.internal.size() != g.internal_edges().size())
        throw std::invalid_argument("boundary or coloring size mismatch");
    for (int i = 0; i < g.n_half(); ++i)
        if (phi.half[i] != k * ell[i] - 1)
            throw std::invalid_argument("coloring boundary does not match k*ell - 1");

    // (k/2)(sqrt(E_a) + sum ell_i) + eps_a/2 with sqrt(E_a) = (phi(a)+1)/k:
    // twice that is phi(a) + 1 + k*sum(ell_i) + eps_a, so integrality is a
    // parity condition.
    for (std::size_t a = 0; a < g.internal_edges().size(); ++a) {
        auto I = g.i_subset(static_cast<int>(a));
        long k_ell_sum = 0;
        for (int i : I) k_ell_sum += k * ell[i - 1];
        long eps = static_cast<long>(I.size() + 1) % 2;
        if ((phi.internal[a] + 1 + k_ell_sum + eps) % 2 != 0) return false;
    }
    return true;
}

std::pair<Rational, Rational> eigenvalue_shift(long k, long m) {
    if (k < 1) throw std::domain_error("level k must be positive");
    Rational E = Rational(m + 1) * Rational(m + 1) / (Rational(k) * Rational(k));
    Rational shifted = Rational(m) * Rational(m + 2) / (Rational(k) * Rational(k));
    if (shifted != E - Rational(1) / (Rational(k) * Rational(k)))
        throw std::logic_error("eigenvalue shift identity failed");
    return {E, shifted};
}

long nearest_admissible_label(long k, double target, int parity) {
    if (target <= 0) throw std::domain_error("target must be positive");
    double m_star = k * target - 1.0;
    long base = static_cast<long>(std::llround(m_star));
    long best = -1;
    double best_err = 0;
    for (long m = std::max<long>(parity, base - 3); m <= base + 3; ++m) {
        if (m < 0 || (m % 2 + 2) % 2 != parity) continue;
        double err = std::fabs((m + 1.0) / k - target);
        if (best < 0 || err < best_err - 1e-15 ||
            (std::fabs(err - best_err) <= 1e-15 && m < best)) {
            best = m;
            best_err = err;
        }
    }
    if (best < 0) {
        best = parity;  // smallest label of the right parity
    }
    return best;
}

}  // namespace spinpoly
