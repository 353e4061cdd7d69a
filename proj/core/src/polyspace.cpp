#include "spinpoly/polyspace.hpp"

#include <algorithm>
#include <cmath>

namespace spinpoly {

double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
double triple(const Vec3& a, const Vec3& b, const Vec3& c) { return dot(a, cross(b, c)); }

std::vector<double> Configuration::lengths() const {
    std::vector<double> out;
    out.reserve(vectors.size());
    for (const auto& v : vectors) out.push_back(norm(v));
    return out;
}

Vec3 Configuration::total() const {
    Vec3 t;
    for (const auto& v : vectors) t = t + v;
    return t;
}

void Configuration::check_closure() const {
    double scale = 0;
    for (const auto& v : vectors) scale += norm(v);
    if (norm(total()) > 1e-9 * scale) throw DomainError("configuration does not close up");
}

namespace {

// Far-side momentum of each slot at vertex v: x_h for a half-edge, and
// the sum of the x_i beyond the internal edge (away from v) otherwise.
Vec3 slot_momentum(const AdmissibleGraph& g, const Configuration& c, int v,
                   const AdmissibleGraph::Slot& s) {
    if (s.half) return c.vectors[s.id - 1];
    bool v_is_head = g.internal_edges()[s.id].head == v;
    auto members = g.i_subset(s.id, /*reversed=*/!v_is_head);
    Vec3 m;
    for (int i : members) m = m + c.vectors[i - 1];
    return m;
}

Vec3 rotate_about(const Vec3& v, const Vec3& axis_unit, double angle) {
    // Rodrigues rotation.
    double c = std::cos(angle), s = std::sin(angle);
    Vec3 k = axis_unit;
    return v * c + cross(k, v) * s + k * (dot(k, v) * (1.0 - c));
}

}  // namespace

std::vector<double> lambda_map(const AdmissibleGraph& g, const Configuration& c) {
    std::vector<double> out;
    out.reserve(g.internal_edges().size());
    for (std::size_t a = 0; a < g.internal_edges().size(); ++a) {
        Vec3 m;
        for (int i : g.i_subset(static_cast<int>(a))) m = m + c.vectors[i - 1];
        out.push_back(norm(m));
    }
    return out;
}

Membership polytope_membership(const AdmissibleGraph& g, const std::vector<double>& ell,
                               const std::vector<double>& d) {
    auto length_of = [&](const AdmissibleGraph::Slot& s) {
        return s.half ? ell.at(s.id - 1) : d.at(s.id);
    };
    bool boundary = false;
    for (const auto& v : g.vertices()) {
        double a = length_of(v.slots[0]);
        double b = length_of(v.slots[1]);
        double c = length_of(v.slots[2]);
        if (a < 0 || b < 0 || c < 0) return Membership::Outside;
        double lhs[3] = {a, b, c};
        double rhs[3] = {b + c, a + c, a + b};
        for (int i = 0; i < 3; ++i) {
            if (lhs[i] > rhs[i]) return Membership::Outside;
            if (lhs[i] == rhs[i]) boundary = true;
        }
    }
    return boundary ? Membership::Boundary : Membership::Interior;
}

namespace {

// Split a planar target vector T into u + w with |u| = p, |w| = q.
// u is on the positive-cross side of T.
std::pair<Vec3, Vec3> split_triangle(const Vec3& T, double p, double q) {
    double r = norm(T);
    if (r < 1e-300) {
        // antipodal pair; p == q up to the membership check
        Vec3 u{p, 0, 0};
        return {u, -u};
    }
    double cosb = std::clamp((p * p + r * r - q * q) / (2.0 * p * r), -1.0, 1.0);
    double sinb = std::sqrt(std::max(0.0, 1.0 - cosb * cosb));
    Vec3 that = T * (1.0 / r);
    Vec3 perp = cross(Vec3{0, 0, 1}, that);  // in-plane normal
    Vec3 u = (that * cosb + perp * sinb) * p;
    return {u, T - u};
}

}  // namespace

Configuration realize(const AdmissibleGraph& g, const std::vector<double>& ell,
                      const std::vector<double>& d) {
    if (polytope_membership(g, ell, d) == Membership::Outside)
        throw DomainError("internal values lie outside the polytope");

    auto length_of = [&](const AdmissibleGraph::Slot& s) {
        return s.half ? ell.at(s.id - 1) : d.at(s.id);
    };

    Configuration c;
    c.vectors.assign(g.n_half(), Vec3{});

    // Lay the chain of triangles flat: each vertex of the graph is one
    // triangle; recursion passes the shared internal-edge vector down.
    auto place = [&](auto&& self, int v, int from_edge, const Vec3& m_in) -> void {
        const auto& vert = g.vertices()[v];
        std::vector<const AdmissibleGraph::Slot*> rest;
        for (const auto& s : vert.slots)
            if (s.half || s.id != from_edge) rest.push_back(&s);

        Vec3 sum_target;  // the two remaining momenta must sum to this
        if (from_edge < 0) {
            // root: all three momenta sum to zero; fix the first leg
            const auto& s0 = *rest[0];
            Vec3 m0{length_of(s0), 0, 0};
            if (s0.half) c.vectors[s0.id - 1] = m0;
            sum_target = -m0;
            if (!s0.half) {
                int w = g.internal_edges()[s0.id].tail == v ? g.internal_edges()[s0.id].head
                                                            : g.internal_edges()[s0.id].tail;
                self(self, w, s0.id, m0);
            }
            rest.erase(rest.begin());
        } else {
            sum_target = m_in;
        }

        auto [u, w] = split_triangle(sum_target, length_of(*rest[0]), length_of(*rest[1]));
        Vec3 ms[2] = {u, w};
        for (int i = 0; i < 2; ++i) {
            const auto& s = *rest[i];
            if (s.half) {
                c.vectors[s.id - 1] = ms[i];
            } else {
                int next = g.internal_edges()[s.id].tail == v ? g.internal_edges()[s.id].head
                                                              : g.internal_edges()[s.id].tail;
                self(self, next, s.id, ms[i]);
            }
        }
    };
    place(place, 0, -1, Vec3{});
    c.check_closure();
    return c;
}

Configuration bend(const Configuration& c, const std::vector<int>& I, double angle) {
    Vec3 axis;
    for (int i : I) axis = axis + c.vectors[i - 1];
    double a = norm(axis);
    if (a < 1e-12) throw AxisVanishes("bending axis vanishes");
    Vec3 unit = axis * (1.0 / a);
    Configuration out = c;
    for (int i : I) out.vectors[i - 1] = rotate_about(c.vectors[i - 1], unit, angle);
    return out;
}

bool moduli_equal(const Configuration& c1, const Configuration& c2) {
    std::size_t n = c1.vectors.size();
    if (n != c2.vectors.size()) return false;
    double scale = 0;
    for (const auto& v : c1.vectors) scale = std::max(scale, norm(v));
    double tol = 1e-8 * std::max(1.0, scale * scale);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            if (std::fabs(dot(c1.vectors[i], c1.vectors[j]) - dot(c2.vectors[i], c2.vectors[j])) > tol)
                return false;

    // Gram plus one orientation sign is a complete SO(3) invariant.
    double best = 0;
    std::size_t bi = 0, bj = 0, bk = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                double t = std::fabs(triple(c1.vectors[i], c1.vectors[j], c1.vectors[k]));
                if (t > best) {
                    best = t;
                    bi = i;
                    bj = j;
                    bk = k;
                }
            }
    double vol_tol = 1e-8 * std::max(1.0, scale * scale * scale);
    if (best <= vol_tol) return true;  // planar: no orientation to compare
    double t1 = triple(c1.vectors[bi], c1.vectors[bj], c1.vectors[bk]);
    double t2 = triple(c2.vectors[bi], c2.vectors[bj], c2.vectors[bk]);
    return t1 * t2 > 0;
}

double theta_angle(const AdmissibleGraph& g, const Configuration& c, int a) {
    const auto& edge = g.internal_edges().at(a);
    Vec3 axis;
    for (int i : g.i_subset(a)) axis = axis + c.vectors[i - 1];
    double len = norm(axis);
    if (len < 1e-12) throw DegenerateFace("lambda vanishes at the edge");
    Vec3 unit = axis * (1.0 / len);

    auto face_normal = [&](int v) {
        Vec3 m[2];
        int idx = 0;
        for (const auto& s : g.vertices()[v].slots) {
            if (!s.half && s.id == a) continue;
            m[idx++] = slot_momentum(g, c, v, s);
        }
        Vec3 nrm = cross(m[0], m[1]);
        if (norm(nrm) < 1e-12 * std::max(1.0, norm(m[0]) * norm(m[1])))
            throw DegenerateFace("triangulation face is degenerate");
        return nrm;
    };
    Vec3 n_tail = face_normal(edge.tail);
    Vec3 n_head = face_normal(edge.head);
    double s = dot(cross(n_head, n_tail), unit);
    double cs = dot(n_head, n_tail);
    double theta = std::atan2(s, cs);
    if (theta < 0) theta += 2.0 * M_PI;
    return theta;
}

double gamma_action(const AdmissibleGraph& g, const std::vector<double>& ell,
                    const Configuration& c, int a) {
    Vec3 m;
    double sum = 0;
    for (int i : g.i_subset(a)) {
        m = m + c.vectors[i - 1];
        sum += ell.at(i - 1);
    }
    double lambda = norm(m);
    if (lambda <= 0) throw DomainError("gamma undefined where lambda vanishes");
    return 0.5 * (lambda + sum);
}

double evaluate(const Observable& f, const Configuration& c) {
    switch (f.kind) {
        case Observable::HalfLambda: {
            Vec3 m;
            for (int i : f.graph->i_subset(f.edge)) m = m + c.vectors[i - 1];
            return 0.5 * norm(m);
        }
        case Observable::Theta:
            return theta_angle(*f.graph, c, f.edge);
    }
    throw std::logic_error("unknown observable");
}

double poisson_bracket_fd(const Configuration& c, const Observable& f, const Observable& g,
                          double h) {
    if (f.kind != Observable::HalfLambda)
        throw DomainError("only (1/2)lambda observables generate closed-form flows");
    auto I = f.graph->i_subset(f.edge);
    // Flow of (1/2)lambda_a at time t rotates I(a) by t.
    double gp = evaluate(g, bend(c, I, h));
    double gm = evaluate(g, bend(c, I, -h));
    double diff = gp - gm;
    if (g.kind == Observable::Theta) diff -= 2.0 * M_PI * std::round(diff / (2.0 * M_PI));
    return diff / (2.0 * h);
}

}  // namespace spinpoly
