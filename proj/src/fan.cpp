#include "kassoc/fan.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <sstream>

#include "kassoc/tropical.hpp"

namespace kassoc {

namespace {

int wrap(int a, int n) { return (a - 1 + n) % n + 1; }

std::vector<int> to_ints(const GVector& g) { return g.coords; }

Vector to_vector(const std::vector<int>& x) {
    Vector v;
    for (int c : x) v.emplace_back(c);
    return v;
}

}  // namespace

bool is_triangulation(const EdgeSet& T) {
    int n = T.n;
    if (n < 3) return false;
    for (int a = 1; a <= n; ++a)
        if (!T.contains(make_edge(a, wrap(a + 1, n)))) return false;
    return T.size() == static_cast<std::size_t>(2 * n - 3) && is_k_free(T, 1);
}

EdgeSet normalize_triangulation(const EdgeSet& T) {
    std::vector<Edge> es = T.edges;
    for (int a = 1; a <= T.n; ++a) es.push_back(make_edge(a, wrap(a + 1, T.n)));
    EdgeSet out(T.n, es);
    if (!is_triangulation(out)) throw Error("not a triangulation of the n-gon");
    return out;
}

std::vector<Edge> diagonals(const EdgeSet& T) {
    std::vector<Edge> out;
    for (const Edge& e : T.edges)
        if (cyclic_length(e, T.n) >= 2) out.push_back(e);
    return out;
}

int crossing_sign(const EdgeSet& T, const Edge& delta, const Edge& e) {
    int n = T.n;
    if (!T.contains(delta) || cyclic_length(delta, n) < 2) throw Error("crossing_sign: delta is not a diagonal of T");
    int p = delta.i, q = delta.j, r = 0, s = 0;
    for (int x = 1; x <= n; ++x) {
        if (x == p || x == q) continue;
        if (T.contains(make_edge(p, x)) && T.contains(make_edge(q, x))) (p < x && x < q ? r : s) = x;
    }
    if (r == 0 || s == 0) throw Error("crossing_sign: T is not a triangulation around delta");
    // Sides a and b cut the polygon into the vertex arcs {a..b-1} and the rest.
    auto in = [&](int x) { return e.i <= x && x < e.j; };
    if (in(p) == in(r) && in(q) == in(s) && in(p) != in(q)) return 1;
    if (in(r) == in(q) && in(s) == in(p) && in(r) != in(p)) return -1;
    return 0;
}

GVector g_vector(const EdgeSet& T, const Edge& e) {
    GVector g;
    g.diagonals = diagonals(T);
    for (const Edge& d : g.diagonals) g.coords.push_back(crossing_sign(T, d, e));
    return g;
}

std::vector<Edge> projection_coordinates(const EdgeSet& T) {
    std::vector<Edge> out;
    for (const Edge& e : T.edges) out.push_back(make_edge(wrap(e.i + 1, T.n), wrap(e.j + 1, T.n)));
    return out;
}

Vector project_linear(const WeightVector& u, const EdgeSet& Tin) {
    EdgeSet T = normalize_triangulation(Tin);
    int n = T.n;
    WeightVector v = to_v(u);
    std::vector<Edge> coords = projection_coordinates(T);
    std::vector<Edge> diags = diagonals(T);
    std::vector<WeightVector> basis;
    for (const Edge& d : diags) basis.push_back(separation_vector(WeightVector::unit(n, Basis::W, d)));
    for (auto& l : lineality_basis(n)) basis.push_back(l);
    Matrix A = zeros(coords.size(), basis.size());
    Vector b(coords.size());
    for (std::size_t r = 0; r < coords.size(); ++r) {
        for (std::size_t c = 0; c < basis.size(); ++c) A[r][c] = basis[c].at(coords[r]);
        b[r] = v.at(coords[r]);
    }
    auto x = solve_unique(A, b);
    if (!x) throw InternalError("projection: images of W_delta and L_n do not form a basis");
    return Vector(x->begin(), x->begin() + static_cast<long>(diags.size()));
}

Vector project(const WeightVector& v, const EdgeSet& T) {
    if (v.n < 4) throw Error("project needs n >= 4");
    if (!in_pv_plus(v, 1)) throw Error("project: vector is not in PV+_1(n)");
    return project_linear(v, T);
}

FanDescription build_fan(const EdgeSet& Tin) {
    EdgeSet T = normalize_triangulation(Tin);
    int n = T.n;
    if (n < 4) throw Error("build_fan needs n >= 4");
    FanDescription F;
    F.dim = n - 3;
    std::map<std::vector<int>, int> index_of;
    std::map<Edge, int> ray_of_edge;
    for (const Edge& e : relevant_edges(n, 1)) {
        std::vector<int> g = to_ints(g_vector(T, e));
        auto [it, inserted] = index_of.emplace(g, static_cast<int>(F.rays.size()));
        if (inserted) {
            F.rays.push_back(g);
            F.ray_labels.push_back(e);
        }
        ray_of_edge[e] = it->second;
    }
    for (const EdgeSet& S : enumerate_k_triangulations(n, 1)) {
        std::vector<int> cone;
        for (const Edge& d : diagonals(S)) cone.push_back(ray_of_edge.at(d));
        std::sort(cone.begin(), cone.end());
        F.cones.push_back(cone);
        F.cone_triangulations.push_back(S);
    }
    return F;
}

Rational rhs_b(const Edge& e, int n) { return Rational((e.j - e.i) * (n + e.i - e.j)); }

FanReport validate_fan(const FanDescription& F, const EdgeSet& Tin) {
    EdgeSet T = normalize_triangulation(Tin);
    int n = T.n;
    FanReport rep;
    std::size_t d = static_cast<std::size_t>(F.dim);
    for (std::size_t a = 0; a < F.cones.size(); ++a)
        for (std::size_t b = a + 1; b < F.cones.size(); ++b) {
            const auto& A = F.cones[a];
            const auto& B = F.cones[b];
            std::vector<int> common;
            std::set_intersection(A.begin(), A.end(), B.begin(), B.end(), std::back_inserter(common));
            if (common.size() + 1 != d) continue;
            std::vector<int> only_a, only_b;
            std::set_difference(A.begin(), A.end(), B.begin(), B.end(), std::back_inserter(only_a));
            std::set_difference(B.begin(), B.end(), A.begin(), A.end(), std::back_inserter(only_b));
            std::vector<int> involved = common;
            involved.push_back(only_a[0]);
            involved.push_back(only_b[0]);
            Matrix M = zeros(d, involved.size());
            for (std::size_t c = 0; c < involved.size(); ++c)
                for (std::size_t r = 0; r < d; ++r) M[r][c] = F.rays[involved[c]][r];
            auto ns = nullspace(M, involved.size());
            if (ns.size() != 1) throw Error("not a circuit: dependence space of dimension " + std::to_string(ns.size()));
            Vector w = ns[0];
            std::size_t ia = involved.size() - 2, ib = involved.size() - 1;
            if (w[ia] == 0 || w[ib] == 0) throw Error("not a circuit: exchanged rays outside the support");
            if (w[ia] < 0)
                for (auto& q : w) q = -q;
            if (w[ib] <= 0) rep.exchange_signs_ok = false;
            FlipCircuit fc;
            fc.cone_a = static_cast<int>(a);
            fc.cone_b = static_cast<int>(b);
            fc.removed = F.ray_labels[only_a[0]];
            fc.added = F.ray_labels[only_b[0]];
            fc.rhs_sum = 0;
            for (std::size_t c = 0; c < involved.size(); ++c) {
                const Edge& lab = F.ray_labels[involved[c]];
                fc.coefficients.push_back({lab, w[c]});
                fc.rhs_sum += w[c] * rhs_b(lab, n);
            }
            if (fc.rhs_sum <= 0) rep.rhs_positive = false;
            rep.circuits.push_back(std::move(fc));
        }
    return rep;
}

PolytopeH associahedron_polytope(const EdgeSet& Tin) {
    EdgeSet T = normalize_triangulation(Tin);
    int n = T.n;
    PolytopeH P;
    P.dim = n - 3;
    std::map<Edge, std::size_t> row_of;
    for (const Edge& e : relevant_edges(n, 1)) {
        row_of[e] = P.labels.size();
        P.labels.push_back(e);
        P.normals.push_back(to_ints(g_vector(T, e)));
        P.rhs.push_back(rhs_b(e, n));
    }
    for (const EdgeSet& S : enumerate_k_triangulations(n, 1)) {
        std::vector<Edge> ds = diagonals(S);
        Matrix A;
        Vector b;
        for (const Edge& d : ds) {
            A.push_back(to_vector(P.normals[row_of.at(d)]));
            b.push_back(P.rhs[row_of.at(d)]);
        }
        auto x = solve_unique(A, b);
        if (!x) throw InternalError("polytope: tight system of a triangulation is singular");
        for (std::size_t r = 0; r < P.labels.size(); ++r) {
            if (S.contains(P.labels[r])) continue;
            if (dot(to_vector(P.normals[r]), *x) >= P.rhs[r])
                throw InternalError("polytope: vertex of " + std::to_string(P.vertices.size()) +
                                    " violates facet " + to_string(P.labels[r]));
        }
        P.vertices.push_back(*x);
        P.vertex_triangulations.push_back(S);
    }
    for (const Edge& d : diagonals(T)) {
        Edge partner = make_edge(wrap(d.i + 1, n), wrap(d.j + 1, n));
        const auto& a = P.normals[row_of.at(d)];
        const auto& b = P.normals[row_of.at(partner)];
        bool opposite = true;
        for (std::size_t t = 0; t < a.size(); ++t)
            if (a[t] != -b[t]) opposite = false;
        if (!opposite) throw InternalError("polytope: facets " + to_string(d) + " and " + to_string(partner) + " not parallel");
        P.parallel_pairs.push_back({d, partner});
    }
    return P;
}

std::string to_off(const PolytopeH& P) {
    if (P.dim != 3) throw Error("OFF output is only produced for three-dimensional polytopes");
    std::ostringstream os;
    os << "OFF\n" << P.vertices.size() << " " << P.labels.size() << " 0\n";
    std::vector<std::array<double, 3>> pts;
    for (const auto& x : P.vertices) {
        pts.push_back({x[0].get_d(), x[1].get_d(), x[2].get_d()});
        os << pts.back()[0] << " " << pts.back()[1] << " " << pts.back()[2] << "\n";
    }
    for (std::size_t f = 0; f < P.labels.size(); ++f) {
        std::vector<int> ids;
        for (std::size_t v = 0; v < P.vertices.size(); ++v)
            if (P.vertex_triangulations[v].contains(P.labels[f])) ids.push_back(static_cast<int>(v));
        // Order the facet's vertices by angle around their centroid.
        std::array<double, 3> c{0, 0, 0};
        for (int v : ids)
            for (int t = 0; t < 3; ++t) c[t] += pts[v][t] / ids.size();
        std::array<double, 3> nrm{double(P.normals[f][0]), double(P.normals[f][1]), double(P.normals[f][2])};
        std::array<double, 3> u{pts[ids[0]][0] - c[0], pts[ids[0]][1] - c[1], pts[ids[0]][2] - c[2]};
        std::array<double, 3> w{nrm[1] * u[2] - nrm[2] * u[1], nrm[2] * u[0] - nrm[0] * u[2], nrm[0] * u[1] - nrm[1] * u[0]};
        auto angle = [&](int v) {
            double x = 0, y = 0;
            for (int t = 0; t < 3; ++t) {
                x += (pts[v][t] - c[t]) * u[t];
                y += (pts[v][t] - c[t]) * w[t];
            }
            return std::atan2(y, x);
        };
        std::sort(ids.begin(), ids.end(), [&](int a, int b) { return angle(a) < angle(b); });
        os << ids.size();
        for (int v : ids) os << " " << v;
        os << "\n";
    }
    return os.str();
}

}  // namespace kassoc
