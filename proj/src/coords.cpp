#include "kassoc/coords.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace kassoc {

std::string to_string(Basis b) { return b == Basis::V ? "v" : "w"; }

WeightVector::WeightVector(int n_, Basis b) : n(n_), basis(b), x(num_edges(n_), Rational(0)) {
    if (n_ < 2) throw Error("weight vectors need n >= 2");
}

WeightVector WeightVector::unit(int n, Basis basis, const Edge& e, const Rational& value) {
    WeightVector u(n, basis);
    u.at(e) = value;
    return u;
}

bool WeightVector::is_zero() const {
    return std::all_of(x.begin(), x.end(), [](const Rational& q) { return q == 0; });
}

namespace {

void require_compatible(const WeightVector& a, const WeightVector& b) {
    if (a.n != b.n || a.basis != b.basis) throw Error("weight vectors differ in n or basis");
}

int wrap(int a, int n) { return (a - 1 + n) % n + 1; }

Rational v_entry(const WeightVector& v, int a, int b) {
    a = wrap(a, v.n);
    b = wrap(b, v.n);
    if (a == b) return 0;
    return v.at(make_edge(a, b));
}

}  // namespace

WeightVector operator+(const WeightVector& a, const WeightVector& b) {
    require_compatible(a, b);
    WeightVector c = a;
    for (std::size_t t = 0; t < c.x.size(); ++t) c.x[t] += b.x[t];
    return c;
}

WeightVector operator-(const WeightVector& a, const WeightVector& b) {
    require_compatible(a, b);
    WeightVector c = a;
    for (std::size_t t = 0; t < c.x.size(); ++t) c.x[t] -= b.x[t];
    return c;
}

WeightVector operator-(const WeightVector& a) {
    WeightVector c = a;
    for (auto& q : c.x) q = -q;
    return c;
}

WeightVector operator*(const Rational& s, const WeightVector& a) {
    WeightVector c = a;
    for (auto& q : c.x) q *= s;
    return c;
}

WeightVector separation_vector(const WeightVector& w) {
    if (w.basis != Basis::W) throw Error("separation_vector expects a W-basis vector");
    int n = w.n;
    WeightVector v(n, Basis::V);
    std::vector<Edge> es = all_edges(n);
    for (const Edge& s : es) {
        // Sides a and b separate vertices {a..b-1} from the rest.
        auto in_arc = [&](int x) { return s.i <= x && x < s.j; };
        Rational sum = 0;
        for (const Edge& e : es) {
            const Rational& q = w.at(e);
            if (q != 0 && in_arc(e.i) != in_arc(e.j)) sum += q;
        }
        v.at(s) = sum;
    }
    return v;
}

WeightVector inverse_separation(const WeightVector& v) {
    if (v.basis != Basis::V) throw Error("inverse_separation expects a V-basis vector");
    int n = v.n;
    WeightVector w(n, Basis::W);
    for (const Edge& e : all_edges(n)) {
        int a = e.i, b = e.j;
        Rational s = v_entry(v, a, b) + v_entry(v, a + 1, b + 1) - v_entry(v, a, b + 1) - v_entry(v, a + 1, b);
        w.at(e) = s / 2;
    }
    return w;
}

WeightVector to_v(const WeightVector& u) { return u.basis == Basis::V ? u : separation_vector(u); }
WeightVector to_w(const WeightVector& u) { return u.basis == Basis::W ? u : inverse_separation(u); }

Rational matching_weight(const WeightVector& v, const std::vector<Edge>& pairs) {
    Rational s = 0;
    for (const Edge& e : pairs) s += v.at(e);
    return s;
}

bool is_fp_positive(const WeightVector& u) {
    WeightVector v = to_v(u);
    WeightVector w = inverse_separation(v);
    bool by_sep = true;
    for (const Edge& e : all_edges(v.n))
        if (cyclic_length(e, v.n) >= 2 && w.at(e) < 0) by_sep = false;
    bool by_four = true;
    for (const auto& q : subsets(v.n, 4)) {
        int p = q[0], r = q[1], s = q[2], t = q[3];
        Rational cross = v.at({p, s}) + v.at({r, t});
        if (cross < v.at({p, r}) + v.at({s, t}) || cross < v.at({p, t}) + v.at({r, s})) {
            by_four = false;
            break;
        }
    }
    if (by_sep != by_four) throw InternalError("four-point and separation characterizations disagree");
    return by_sep;
}

std::string to_string(const FormLabel& l) {
    switch (l.kind) {
        case FormLabel::Kind::Long: return "long(" + to_string(l.edge) + ")";
        case FormLabel::Kind::Short: return "short(" + to_string(l.edge) + ")";
        case FormLabel::Kind::Cycle: return "cycle(" + l.cycle + ")";
    }
    return "";
}

Rational LinearForm::evaluate(const WeightVector& u) const {
    if (u.n != n) throw Error("linear form and vector differ in n");
    const WeightVector conv = basis == Basis::W ? to_w(u) : to_v(u);
    Rational s = 0;
    for (std::size_t t = 0; t < coeffs.size(); ++t)
        if (coeffs[t] != 0) s += coeffs[t] * conv.x[t];
    return s;
}

std::vector<WeightVector> lineality_basis(int n) {
    std::vector<WeightVector> out;
    for (int a = 1; a <= n; ++a) {
        WeightVector s(n, Basis::V);
        for (int b = 1; b <= n; ++b)
            if (b != a) s.at(make_edge(a, b)) = 1;
        out.push_back(std::move(s));
    }
    return out;
}

namespace {

void require_simplicial_regime(int n, int k) {
    if (k < 1) throw Error("k must be >= 1");
    if (n < 2 * k + 3)
        throw Error("single/non-simplicial regime (n < 2k+3): use cycle_inequalities or the prevariety tools");
}

// Start vertex s of the short arc s, s+1, ..., s+l of e.
int short_arc_start(const Edge& e, int n) { return (e.j - e.i <= n - e.j + e.i) ? e.i : e.j; }

}  // namespace

ConeDescription grobner_cone(int n, int k) {
    require_simplicial_regime(n, k);
    ConeDescription c;
    c.n = n;
    c.k = k;
    c.lineality = lineality_basis(n);
    for (const Edge& e : all_edges(n)) {
        int l = cyclic_length(e, n);
        if (l < 2) continue;
        LinearForm f{n, Basis::W, std::vector<Rational>(num_edges(n), Rational(0)), {}};
        f.label.edge = e;
        if (l >= k + 1) {
            f.label.kind = FormLabel::Kind::Long;
            f.coeffs[edge_index(e, n)] = 1;
        } else {
            f.label.kind = FormLabel::Kind::Short;
            int s = short_arc_start(e, n);
            // Arcs [s-d, s+l+d'] with total length at most k+1.
            for (int back = 0; l + back <= k + 1; ++back)
                for (int fwd = 0; l + back + fwd <= k + 1; ++fwd) {
                    Edge g = make_edge(wrap(s - back, n), wrap(s + l + fwd, n));
                    f.coeffs[edge_index(g, n)] += 1;
                }
        }
        c.facets.push_back(std::move(f));

        if (l >= k + 2) {
            c.rays.push_back({e, WeightVector::unit(n, Basis::W, e)});
        } else {
            int s = short_arc_start(e, n);
            Edge inner = make_edge(wrap(s + 1, n), wrap(s + l, n));
            c.rays.push_back({e, WeightVector::unit(n, Basis::V, inner, -1)});
        }
    }
    return c;
}

std::vector<LinearForm> violated_facets(const WeightVector& v, int k) {
    ConeDescription c = grobner_cone(v.n, k);
    WeightVector w = to_w(v);
    std::vector<LinearForm> out;
    for (auto& f : c.facets)
        if (f.evaluate(w) < 0) out.push_back(f);
    return out;
}

bool in_grobner_cone(const WeightVector& v, int k) { return violated_facets(v, k).empty(); }

EdgeSet cone_face_of(const WeightVector& v, int k) {
    ConeDescription c = grobner_cone(v.n, k);
    WeightVector w = to_w(v);
    std::vector<Edge> strict;
    std::string violated;
    for (auto& f : c.facets) {
        Rational val = f.evaluate(w);
        if (val < 0) violated += (violated.empty() ? "" : " ") + to_string(f.label);
        if (val > 0) strict.push_back(f.label.edge);
    }
    if (!violated.empty()) throw Error("vector outside the Groebner cone; violated facets: " + violated);
    return EdgeSet(v.n, std::move(strict));
}

namespace {

bool single_alternating_cycle(const std::vector<Edge>& a, const std::vector<Edge>& b) {
    if (a.empty()) return false;
    std::map<int, int> ma, mb;
    for (const Edge& e : a) ma[e.i] = e.j, ma[e.j] = e.i;
    for (const Edge& e : b) mb[e.i] = e.j, mb[e.j] = e.i;
    int start = a[0].i, cur = start, steps = 0;
    do {
        cur = mb.at(ma.at(cur));
        steps += 2;
    } while (cur != start);
    return steps == 2 * static_cast<int>(a.size());
}

std::string cycle_name(const std::vector<Edge>& plus, const std::vector<Edge>& minus) {
    std::string s;
    auto name = [](const Edge& e) { return std::to_string(e.i) + (e.i >= 10 || e.j >= 10 ? "." : "") + std::to_string(e.j); };
    for (std::size_t t = 0; t < plus.size(); ++t) s += (t ? "+" : "") + name(plus[t]);
    for (const Edge& e : minus) s += "-" + name(e);
    return s;
}

}  // namespace

std::vector<LinearForm> cycle_inequalities(int n, int k) {
    if (k < 1) throw Error("k must be >= 1");
    if (n < 2 * k + 2) throw Error("cycle inequalities need n >= 2k+2");
    std::vector<LinearForm> out;
    std::set<std::vector<Rational>> seen;
    for (const auto& U : subsets(n, 2 * k + 2)) {
        std::vector<Edge> X = crossing_matching(U);
        int m = static_cast<int>(X.size());
        for (int mask = 0; mask < (1 << m); ++mask) {
            if (__builtin_popcount(mask) < 2) continue;
            std::vector<Edge> S;
            std::vector<int> verts;
            for (int t = 0; t < m; ++t)
                if (mask >> t & 1) {
                    S.push_back(X[t]);
                    verts.push_back(X[t].i);
                    verts.push_back(X[t].j);
                }
            for_each_matching(verts, [&](const std::vector<Edge>& M) {
                for (const Edge& e : M)
                    if (std::find(S.begin(), S.end(), e) != S.end()) return;
                if (!single_alternating_cycle(S, M)) return;
                LinearForm f{n, Basis::V, std::vector<Rational>(num_edges(n), Rational(0)), {}};
                for (const Edge& e : S) f.coeffs[edge_index(e, n)] += 1;
                for (const Edge& e : M) f.coeffs[edge_index(e, n)] -= 1;
                if (!seen.insert(f.coeffs).second) return;
                f.label.kind = FormLabel::Kind::Cycle;
                f.label.cycle = cycle_name(S, M);
                out.push_back(std::move(f));
            });
        }
    }
    return out;
}

bool in_grobner_cone_by_cycles(const WeightVector& v, int k) {
    for (const auto& f : cycle_inequalities(v.n, k))
        if (f.evaluate(v) < 0) return false;
    return true;
}

std::vector<LinearForm> facet_inducing_cycle_forms(int n, int k) {
    if (n != 2 * k + 2) throw Error("facet certification for cycle forms is implemented for n = 2k+2 only");
    std::vector<LinearForm> forms = cycle_inequalities(n, k);
    std::vector<int> U(n);
    for (int t = 0; t < n; ++t) U[t] = t + 1;
    std::vector<Edge> X = crossing_matching(U);
    Rational eps(1, 2 * (k + 1));
    std::vector<LinearForm> out;
    for (const auto& f : forms) {
        // The form is v(X) - v(M); rebuild M from its coefficients.
        std::vector<Edge> M;
        for (const Edge& e : X)
            if (f.coeffs[edge_index(e, n)] == 0) M.push_back(e);
        for (const Edge& e : all_edges(n))
            if (f.coeffs[edge_index(e, n)] < 0) M.push_back(e);
        WeightVector v(n, Basis::V);
        for (const Edge& e : X) v.at(e) = 1;
        for (const Edge& e : M) v.at(e) = 1 + eps;
        bool alone = f.evaluate(v) < 0;
        for (const auto& g : forms)
            if (&g != &f && g.evaluate(v) < 0) alone = false;
        if (alone) out.push_back(f);
    }
    return out;
}

WeightVector random_positive_w(int n, const std::vector<Edge>& support, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> dist(1, 1L << 20);
    WeightVector w(n, Basis::W);
    for (const Edge& e : support) w.at(e) = Rational(dist(rng));
    return w;
}

}  // namespace kassoc
