#include "spinpoly/coupling.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace spinpoly {

namespace {

using I128 = __int128;

I128 checked_mul(I128 a, I128 b) {
    I128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("coupling: product overflow");
    return r;
}
I128 checked_add(I128 a, I128 b) {
    I128 r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("coupling: sum overflow");
    return r;
}

using Comp = std::unordered_map<PackedIndex, I128>;

void add_to(Comp& m, PackedIndex key, I128 v) {
    if (v == 0) return;
    auto [it, fresh] = m.try_emplace(key, v);
    if (!fresh) {
        it->second = checked_add(it->second, v);
        if (it->second == 0) m.erase(it);
    }
}

long key_at(PackedIndex key, int i) { return (key >> (8 * i)) & 0xff; }
PackedIndex key_with(PackedIndex key, int i, long v) {
    return (key & ~(PackedIndex(0xff) << (8 * i))) | (PackedIndex(v) << (8 * i));
}

/// Coefficients D_t[a][b] of the equivariant images u_t = F_total^t w_0 of
/// the basis of V_m inside V_p (x) V_q, scaled to integers. w_0 is the
/// highest-weight vector killed by E_total.
std::vector<std::vector<std::vector<I128>>> embedding(long m, long p, long q) {
    if (!clebsch_gordan_ok(p, q, m)) throw std::logic_error("embedding: inadmissible triad");
    long j = (p + q - m) / 2;

    // w_0 = sum_k c_k v_k (x) v_{j-k}, E w_0 = 0 gives the two-term recurrence
    std::vector<Rational> c(j + 1, Rational(0));
    long k_lo = std::max(0L, j - q), k_hi = std::min(j, p);
    c[k_lo] = 1;
    for (long k = k_lo; k < k_hi; ++k)
        c[k + 1] = -c[k] * Rational((j - k) * (q + 1 - j + k)) / Rational((k + 1) * (p - k));

    Int scale = 1;
    for (long k = k_lo; k <= k_hi; ++k) scale = boost::multiprecision::lcm(scale, denominator(c[k]));
    std::vector<std::vector<std::vector<I128>>> D(
        m + 1, std::vector<std::vector<I128>>(p + 1, std::vector<I128>(q + 1, 0)));
    for (long k = k_lo; k <= k_hi; ++k) {
        Int v = numerator(c[k] * Rational(scale));
        D[0][k][j - k] = static_cast<long long>(v);  // small by construction
    }
    // F v_a = v_{a+1} (zero at the top) in both factors
    for (long t = 0; t < m; ++t)
        for (long a = 0; a <= p; ++a)
            for (long b = 0; b <= q; ++b) {
                I128 v = D[t][a][b];
                if (v == 0) continue;
                if (a < p) D[t + 1][a + 1][b] = checked_add(D[t + 1][a + 1][b], v);
                if (b < q) D[t + 1][a][b + 1] = checked_add(D[t + 1][a][b + 1], v);
            }
    return D;
}

struct Builder {
    const AdmissibleGraph& g;
    const Coloring& phi;

    long slot_label(const AdmissibleGraph::Slot& s) const {
        return s.half ? phi.half[s.id - 1] : phi.internal[s.id];
    }

    /// u_t components of the subtree hanging off `slot` at vertex v,
    /// as an equivariant image of the basis of V_m, m = slot label.
    std::vector<Comp> subtree(int v, const AdmissibleGraph::Slot& slot) const {
        long m = slot_label(slot);
        if (slot.half) {
            std::vector<Comp> u(m + 1);
            for (long t = 0; t <= m; ++t) u[t][PackedIndex(t) << (8 * (slot.id - 1))] = 1;
            return u;
        }
        const auto& e = g.internal_edges()[slot.id];
        int w = e.tail == v ? e.head : e.tail;
        const AdmissibleGraph::Slot* rest[2];
        int idx = 0;
        for (const auto& s : g.vertices()[w].slots)
            if (s.half || s.id != slot.id) rest[idx++] = &s;
        auto u1 = subtree(w, *rest[0]);
        auto u2 = subtree(w, *rest[1]);
        long p = slot_label(*rest[0]), q = slot_label(*rest[1]);
        auto D = embedding(m, p, q);
        std::vector<Comp> u(m + 1);
        for (long t = 0; t <= m; ++t)
            for (long a = 0; a <= p; ++a)
                for (long b = 0; b <= q; ++b) {
                    I128 d = D[t][a][b];
                    if (d == 0) continue;
                    for (const auto& [k1, v1] : u1[a]) {
                        I128 dv = checked_mul(d, v1);
                        for (const auto& [k2, v2] : u2[b])
                            add_to(u[t], k1 | k2, checked_mul(dv, v2));
                    }
                }
        return u;
    }

    Comp invariant() const {
        const auto& root = g.vertices()[0];
        auto u1 = subtree(0, root.slots[0]);
        auto u2 = subtree(0, root.slots[1]);
        auto u3 = subtree(0, root.slots[2]);
        long a = slot_label(root.slots[0]);
        long b = slot_label(root.slots[1]);
        long c = slot_label(root.slots[2]);
        auto D = embedding(c, a, b);
        Comp out;
        // contract the invariant pairing sum_s (-1)^s v_s (x) v_{c-s} of
        // V_c (x) V_c against the embedding V_c -> V_a (x) V_b
        for (long s = 0; s <= c; ++s)
            for (long alpha = 0; alpha <= a; ++alpha)
                for (long beta = 0; beta <= b; ++beta) {
                    I128 d = D[s][alpha][beta];
                    if (d == 0) continue;
                    if (s % 2) d = -d;
                    for (const auto& [k1, v1] : u1[alpha]) {
                        I128 dv = checked_mul(d, v1);
                        for (const auto& [k2, v2] : u2[beta]) {
                            I128 dvv = checked_mul(dv, v2);
                            for (const auto& [k3, v3] : u3[c - s])
                                add_to(out, k1 | k2 | k3, checked_mul(dvv, v3));
                        }
                    }
                }
        return out;
    }
};

Comp build(const AdmissibleGraph& g, const Coloring& phi) {
    if (g.n_half() > 8) throw std::domain_error("coupling supports at most 8 half-edges");
    for (long l : phi.half)
        if (l < 0 || l > 255) throw std::domain_error("coupling label out of range");
    return Builder{g, phi}.invariant();
}

/// E_i or F_i summed over i: zero iff the vector is invariant.
bool killed_by(const Comp& v, const std::vector<long>& ell, bool raising) {
    Comp out;
    int n = static_cast<int>(ell.size());
    for (const auto& [key, val] : v)
        for (int i = 0; i < n; ++i) {
            long k = key_at(key, i);
            if (raising) {
                if (k == 0) continue;
                add_to(out, key_with(key, i, k - 1), checked_mul(val, I128(k) * (ell[i] + 1 - k)));
            } else {
                if (k == ell[i]) continue;
                add_to(out, key_with(key, i, k + 1), val);
            }
        }
    return out.empty();
}

/// Q_I v with Q_I = sum_{i in I} l_i(l_i+2) + sum_{i<j in I} (2 H_i H_j + 4 E_i F_j + 4 E_j F_i).
Comp apply_casimir(const Comp& v, const std::vector<long>& ell, const std::vector<int>& I) {
    Comp out;
    I128 diag_const = 0;
    for (int i : I) diag_const += I128(ell[i - 1]) * (ell[i - 1] + 2);
    for (const auto& [key, val] : v) {
        I128 hh = 0;
        for (std::size_t x = 0; x < I.size(); ++x)
            for (std::size_t y = x + 1; y < I.size(); ++y) {
                int i = I[x] - 1, j = I[y] - 1;
                hh += I128(ell[i] - 2 * key_at(key, i)) * (ell[j] - 2 * key_at(key, j));
            }
        add_to(out, key, checked_mul(val, checked_add(diag_const, 2 * hh)));
        for (int iu : I)
            for (int ju : I) {
                if (iu == ju) continue;
                int i = iu - 1, j = ju - 1;
                long ki = key_at(key, i), kj = key_at(key, j);
                if (ki == 0 || kj == ell[j]) continue;
                PackedIndex moved = key_with(key_with(key, i, ki - 1), j, kj + 1);
                add_to(out, moved, checked_mul(val, I128(4) * ki * (ell[i] + 1 - ki)));
            }
    }
    return out;
}

}  // namespace

namespace {

/// Embedding tables are tiny and requested millions of times in bulk runs.
const std::vector<std::vector<std::vector<I128>>>& cached_embedding(long m, long p, long q) {
    static std::map<std::tuple<long, long, long>, std::vector<std::vector<std::vector<I128>>>>
        cache;
    static std::mutex mu;
    std::lock_guard lock(mu);
    auto [it, fresh] = cache.try_emplace({m, p, q});
    if (fresh) it->second = embedding(m, p, q);
    return it->second;
}

}  // namespace

PackedIndex pack_index(const std::vector<long>& k) {
    PackedIndex key = 0;
    for (std::size_t i = 0; i < k.size(); ++i) key |= PackedIndex(k[i]) << (8 * i);
    return key;
}

std::unordered_map<PackedIndex, Int> coupled_eigenvector(const AdmissibleGraph& g,
                                                         const Coloring& phi) {
    auto v = build(g, phi);
    std::unordered_map<PackedIndex, Int> out;
    for (const auto& [key, val] : v) {
        bool neg = val < 0;
        unsigned __int128 mag = neg ? -static_cast<unsigned __int128>(val) : val;
        Int big = static_cast<std::uint64_t>(mag >> 64);
        big <<= 64;
        big += static_cast<std::uint64_t>(mag);
        out[key] = neg ? -big : big;
    }
    return out;
}

bool verify_coloring_eigenvector(const AdmissibleGraph& g, const Coloring& phi) {
    auto v = build(g, phi);
    if (v.empty()) return false;
    if (!killed_by(v, phi.half, true) || !killed_by(v, phi.half, false)) return false;
    for (std::size_t a = 0; a < g.internal_edges().size(); ++a) {
        auto qv = apply_casimir(v, phi.half, g.i_subset(static_cast<int>(a)));
        I128 mu = I128(phi.internal[a]) * (phi.internal[a] + 2);
        for (const auto& [key, val] : v) add_to(qv, key, checked_mul(-mu, val));
        if (!qv.empty()) return false;
    }
    return true;
}

struct SpectrumVerifier::Tables {
    int n = 0, W0 = 0, W2 = 0, Wm2 = 0;
    std::vector<std::vector<long>> slice0;
    std::unordered_map<PackedIndex, int> index0, index2, indexm2;
    std::vector<std::vector<long>> hfac, efac;      // per factor i, per slice index
    std::vector<std::vector<int>> ef_target;        // (i*n+j) -> slice0 index or -1
    std::vector<std::vector<int>> e_target;         // i -> weight-2 index or -1
    std::vector<std::vector<int>> f_target;         // i -> weight-(-2) index or -1
};

namespace {

std::vector<std::vector<long>> enumerate_weight_slice(const std::vector<long>& boundary,
                                                      long weight) {
    const int n = static_cast<int>(boundary.size());
    std::vector<std::vector<long>> out;
    std::vector<long> k(n, 0);
    auto rec = [&](auto&& self, int i, long rem) -> void {
        if (i == n) {
            if (rem == 0) out.push_back(k);
            return;
        }
        for (long ki = 0; ki <= boundary[i]; ++ki) {
            k[i] = ki;
            self(self, i + 1, rem - (boundary[i] - 2 * ki));
        }
    };
    rec(rec, 0, weight);
    return out;
}

}  // namespace

SpectrumVerifier::SpectrumVerifier(std::vector<long> boundary)
    : boundary_(std::move(boundary)), t_(std::make_unique<Tables>()) {
    dim_p_ = invariant_dim_mod_p(boundary_);
    auto& t = *t_;
    t.n = static_cast<int>(boundary_.size());
    t.slice0 = enumerate_weight_slice(boundary_, 0);
    auto s2 = enumerate_weight_slice(boundary_, 2);
    auto sm2 = enumerate_weight_slice(boundary_, -2);
    t.W0 = static_cast<int>(t.slice0.size());
    t.W2 = static_cast<int>(s2.size());
    t.Wm2 = static_cast<int>(sm2.size());
    for (int i = 0; i < t.W0; ++i) t.index0[pack_index(t.slice0[i])] = i;
    for (int i = 0; i < t.W2; ++i) t.index2[pack_index(s2[i])] = i;
    for (int i = 0; i < t.Wm2; ++i) t.indexm2[pack_index(sm2[i])] = i;

    t.hfac.assign(t.n, std::vector<long>(t.W0));
    t.efac.assign(t.n, std::vector<long>(t.W0));
    t.e_target.assign(t.n, std::vector<int>(t.W0, -1));
    t.f_target.assign(t.n, std::vector<int>(t.W0, -1));
    t.ef_target.assign(t.n * t.n, std::vector<int>(t.W0, -1));
    for (int idx = 0; idx < t.W0; ++idx) {
        const auto& k = t.slice0[idx];
        PackedIndex key = pack_index(k);
        for (int i = 0; i < t.n; ++i) {
            t.hfac[i][idx] = boundary_[i] - 2 * k[i];
            t.efac[i][idx] = k[i] * (boundary_[i] + 1 - k[i]);
            if (k[i] > 0) t.e_target[i][idx] = t.index2.at(key_with(key, i, k[i] - 1));
            if (k[i] < boundary_[i])
                t.f_target[i][idx] = t.indexm2.at(key_with(key, i, k[i] + 1));
            for (int j = 0; j < t.n; ++j) {
                if (j == i || k[i] == 0 || k[j] == boundary_[j]) continue;
                PackedIndex moved = key_with(key_with(key, i, k[i] - 1), j, k[j] + 1);
                t.ef_target[i * t.n + j][idx] = t.index0.at(moved);
            }
        }
    }
}

SpectrumVerifier::~SpectrumVerifier() = default;

long long SpectrumVerifier::verify_graph(const AdmissibleGraph& g) const {
    const auto& t = *t_;
    if (g.n_half() != t.n) throw std::invalid_argument("graph size mismatch");
    auto colorings = enumerate_colorings(g, boundary_);

    // subtree results are shared between colorings that agree on the labels
    // inside the subtree; the cache key packs the slot with those labels
    const std::size_t n_int = g.internal_edges().size();
    std::map<std::pair<int, int>, std::uint64_t> mask_memo;  // (vertex, slot code) -> edge mask
    auto subtree_mask = [&](auto&& self, int v, const AdmissibleGraph::Slot& s) -> std::uint64_t {
        if (s.half) return 0;
        int code = 2 * s.id + (g.internal_edges()[s.id].tail == v ? 1 : 0);
        auto memo = mask_memo.find({v, code});
        if (memo != mask_memo.end()) return memo->second;
        const auto& e = g.internal_edges()[s.id];
        int w = e.tail == v ? e.head : e.tail;
        std::uint64_t m = std::uint64_t(1) << s.id;
        for (const auto& cs : g.vertices()[w].slots)
            if (cs.half || cs.id != s.id) m |= self(self, w, cs);
        mask_memo[{v, code}] = m;
        return m;
    };

    std::unordered_map<std::uint64_t, std::shared_ptr<const std::vector<Comp>>> cache;
    const Coloring* phi = nullptr;
    auto slot_label = [&](const AdmissibleGraph::Slot& s) {
        return s.half ? phi->half[s.id - 1] : phi->internal[s.id];
    };
    auto subtree = [&](auto&& self, int v,
                       const AdmissibleGraph::Slot& s) -> std::shared_ptr<const std::vector<Comp>> {
        long m = slot_label(s);
        if (s.half) {
            auto u = std::make_shared<std::vector<Comp>>(m + 1);
            for (long tt = 0; tt <= m; ++tt) (*u)[tt][PackedIndex(tt) << (8 * (s.id - 1))] = 1;
            return u;
        }
        std::uint64_t mask = subtree_mask(subtree_mask, v, s);
        std::uint64_t code = 2 * s.id + (g.internal_edges()[s.id].tail == v ? 1 : 0);
        std::uint64_t key = code;
        for (std::size_t e = 0; e < n_int; ++e)
            if (mask & (std::uint64_t(1) << e))
                key |= std::uint64_t(phi->internal[e]) << (8 + 8 * e);
        auto hit = cache.find(key);
        if (hit != cache.end()) return hit->second;

        const auto& e = g.internal_edges()[s.id];
        int w = e.tail == v ? e.head : e.tail;
        const AdmissibleGraph::Slot* rest[2];
        int ri = 0;
        for (const auto& cs : g.vertices()[w].slots)
            if (cs.half || cs.id != s.id) rest[ri++] = &cs;
        auto u1 = self(self, w, *rest[0]);
        auto u2 = self(self, w, *rest[1]);
        long p = slot_label(*rest[0]), q = slot_label(*rest[1]);
        const auto& D = cached_embedding(m, p, q);
        auto u = std::make_shared<std::vector<Comp>>(m + 1);
        for (long tt = 0; tt <= m; ++tt)
            for (long a = 0; a <= p; ++a)
                for (long b = 0; b <= q; ++b) {
                    I128 d = D[tt][a][b];
                    if (d == 0) continue;
                    for (const auto& [k1, v1] : (*u1)[a]) {
                        I128 dv = checked_mul(d, v1);
                        for (const auto& [k2, v2] : (*u2)[b])
                            add_to((*u)[tt], k1 | k2, checked_mul(dv, v2));
                    }
                }
        cache[key] = u;
        return u;
    };

    // dense scratch, cleared via touch lists
    std::vector<I128> dense(t.W0, 0), out(t.W0, 0), acc2(t.W2, 0), accm2(t.Wm2, 0);
    std::vector<int> sup, touched;
    std::vector<std::pair<int, I128>> items;

    for (const auto& col : colorings) {
        phi = &col;
        const auto& root = g.vertices()[0];
        auto u1 = subtree(subtree, 0, root.slots[0]);
        auto u2 = subtree(subtree, 0, root.slots[1]);
        auto u3 = subtree(subtree, 0, root.slots[2]);
        long a = slot_label(root.slots[0]);
        long b = slot_label(root.slots[1]);
        long c = slot_label(root.slots[2]);
        const auto& D = cached_embedding(c, a, b);

        sup.clear();
        for (long s = 0; s <= c; ++s)
            for (long alpha = 0; alpha <= a; ++alpha)
                for (long beta = 0; beta <= b; ++beta) {
                    I128 d = D[s][alpha][beta];
                    if (d == 0) continue;
                    if (s % 2) d = -d;
                    for (const auto& [k1, v1] : (*u1)[alpha]) {
                        I128 dv = checked_mul(d, v1);
                        for (const auto& [k2, v2] : (*u2)[beta]) {
                            I128 dvv = checked_mul(dv, v2);
                            for (const auto& [k3, v3] : (*u3)[c - s]) {
                                int idx = t.index0.at(k1 | k2 | k3);
                                if (dense[idx] == 0) sup.push_back(idx);
                                dense[idx] = checked_add(dense[idx], checked_mul(dvv, v3));
                            }
                        }
                    }
                }
        items.clear();
        for (int idx : sup)
            if (dense[idx] != 0) items.emplace_back(idx, dense[idx]);
        for (int idx : sup) dense[idx] = 0;
        if (items.empty()) return -1;

        bool ok = true;
        // invariance: E_total and F_total must kill the vector
        touched.clear();
        for (const auto& [idx, val] : items)
            for (int i = 0; i < t.n; ++i) {
                int tgt = t.e_target[i][idx];
                if (tgt < 0) continue;
                if (acc2[tgt] == 0) touched.push_back(tgt);
                acc2[tgt] = checked_add(acc2[tgt], checked_mul(val, I128(t.efac[i][idx])));
            }
        for (int tgt : touched) {
            if (acc2[tgt] != 0) ok = false;
            acc2[tgt] = 0;
        }
        touched.clear();
        for (const auto& [idx, val] : items)
            for (int i = 0; i < t.n; ++i) {
                int tgt = t.f_target[i][idx];
                if (tgt < 0) continue;
                if (accm2[tgt] == 0) touched.push_back(tgt);
                accm2[tgt] = checked_add(accm2[tgt], val);
            }
        for (int tgt : touched) {
            if (accm2[tgt] != 0) ok = false;
            accm2[tgt] = 0;
        }
        if (!ok) return -1;

        for (std::size_t edge = 0; edge < n_int && ok; ++edge) {
            auto I = g.i_subset(static_cast<int>(edge));
            I128 diag = 0;
            for (int i : I) diag += I128(boundary_[i - 1]) * (boundary_[i - 1] + 2);
            I128 mu = I128(col.internal[edge]) * (col.internal[edge] + 2);
            touched.clear();
            for (const auto& [idx, val] : items) {
                I128 hsum = 0, hsq = 0;
                for (int iu : I) {
                    long h = t.hfac[iu - 1][idx];
                    hsum += h;
                    hsq += I128(h) * h;
                }
                I128 coeff = diag + hsum * hsum - hsq - mu;
                if (out[idx] == 0 && coeff != 0) touched.push_back(idx);
                out[idx] = checked_add(out[idx], checked_mul(val, coeff));
                for (int iu : I)
                    for (int ju : I) {
                        if (iu == ju) continue;
                        int tgt = t.ef_target[(iu - 1) * t.n + (ju - 1)][idx];
                        if (tgt < 0) continue;
                        if (out[tgt] == 0) touched.push_back(tgt);
                        out[tgt] = checked_add(
                            out[tgt], checked_mul(val, I128(4) * t.efac[iu - 1][idx]));
                    }
            }
            for (int tgt : touched) {
                if (out[tgt] != 0) ok = false;
                out[tgt] = 0;
            }
        }
        if (!ok) return -1;
    }
    return static_cast<long long>(colorings.size());
}

long long invariant_dim_mod_p(const std::vector<long>& boundary) {
    constexpr std::uint64_t P = 2305843009213693951ull;  // 2^61 - 1
    const int n = static_cast<int>(boundary.size());
    long total = std::accumulate(boundary.begin(), boundary.end(), 0L);
    if (total % 2) return 0;

    auto enumerate_slice = [&](long weight) {
        std::vector<std::vector<long>> out;
        std::vector<long> k(n, 0);
        auto rec = [&](auto&& self, int i, long rem) -> void {
            // remaining weight: sum (l_i - 2 k_i) over i.. = rem
            if (i == n) {
                if (rem == 0) out.push_back(k);
                return;
            }
            for (long ki = 0; ki <= boundary[i]; ++ki) {
                k[i] = ki;
                self(self, i + 1, rem - (boundary[i] - 2 * ki));
            }
        };
        rec(rec, 0, weight);
        return out;
    };

    auto w0 = enumerate_slice(0);
    auto w2 = enumerate_slice(2);
    std::unordered_map<PackedIndex, int> w2_index;
    for (std::size_t r = 0; r < w2.size(); ++r) w2_index[pack_index(w2[r])] = static_cast<int>(r);

    // rows: weight-2 slice, columns: weight-0 slice, entries of E_total mod p
    std::vector<std::vector<std::uint64_t>> M(w2.size(),
                                              std::vector<std::uint64_t>(w0.size(), 0));
    for (std::size_t col = 0; col < w0.size(); ++col) {
        const auto& k = w0[col];
        PackedIndex key = pack_index(k);
        for (int i = 0; i < n; ++i) {
            if (k[i] == 0) continue;
            long coeff = k[i] * (boundary[i] + 1 - k[i]);
            int row = w2_index.at(key_with(key, i, k[i] - 1));
            M[row][col] = (M[row][col] + static_cast<std::uint64_t>(coeff)) % P;
        }
    }

    auto mulmod = [&](std::uint64_t a, std::uint64_t b) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % P);
    };
    auto powmod = [&](std::uint64_t a, std::uint64_t e) {
        std::uint64_t r = 1;
        while (e) {
            if (e & 1) r = mulmod(r, a);
            a = mulmod(a, a);
            e >>= 1;
        }
        return r;
    };

    std::size_t rank = 0;
    for (std::size_t col = 0; col < w0.size() && rank < M.size(); ++col) {
        std::size_t piv = rank;
        while (piv < M.size() && M[piv][col] == 0) ++piv;
        if (piv == M.size()) continue;
        std::swap(M[piv], M[rank]);
        std::uint64_t inv = powmod(M[rank][col], P - 2);
        for (std::size_t c = col; c < w0.size(); ++c) M[rank][c] = mulmod(M[rank][c], inv);
        for (std::size_t r = 0; r < M.size(); ++r) {
            if (r == rank || M[r][col] == 0) continue;
            std::uint64_t f = M[r][col];
            for (std::size_t c = col; c < w0.size(); ++c) {
                std::uint64_t sub = mulmod(f, M[rank][c]);
                M[r][c] = (M[r][c] + P - sub) % P;
            }
        }
        ++rank;
    }
    return static_cast<long long>(w0.size() - rank);
}

}  // namespace spinpoly
