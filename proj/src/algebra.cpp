#include "kassoc/algebra.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

namespace kassoc {

AntisymmetricMatrix::AntisymmetricMatrix(int n_) : n(n_), upper(num_edges(n_), Rational(0)) {
    if (n_ < 1) throw Error("matrix size must be positive");
}

Rational AntisymmetricMatrix::get(int i, int j) const {
    if (i == j) return 0;
    if (i < j) return upper[edge_index({i, j}, n)];
    return -upper[edge_index({j, i}, n)];
}

void AntisymmetricMatrix::set(int i, int j, const Rational& q) {
    if (i == j) throw Error("diagonal of an antisymmetric matrix is zero");
    if (i < j)
        upper[edge_index({i, j}, n)] = q;
    else
        upper[edge_index({j, i}, n)] = -q;
}

Matrix AntisymmetricMatrix::dense() const {
    Matrix m = zeros(n, n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) m[i - 1][j - 1] = get(i, j);
    return m;
}

namespace {

struct PfaffianMemo {
    const AntisymmetricMatrix& a;
    const std::vector<int>& verts;  // sorted, positions index the mask
    std::unordered_map<std::uint64_t, Rational> memo;

    Rational eval(std::uint64_t mask) {
        if (mask == 0) return 1;
        if (auto it = memo.find(mask); it != memo.end()) return it->second;
        int first = __builtin_ctzll(mask);
        std::uint64_t rest = mask & ~(std::uint64_t{1} << first);
        Rational total = 0;
        int sign = 1;
        for (std::uint64_t r = rest; r; r &= r - 1) {
            int t = __builtin_ctzll(r);
            const Rational q = a.get(verts[first], verts[t]);
            if (q != 0) {
                Rational sub = eval(rest & ~(std::uint64_t{1} << t));
                if (sign > 0)
                    total += q * sub;
                else
                    total -= q * sub;
            }
            sign = -sign;
        }
        memo.emplace(mask, total);
        return total;
    }
};

}  // namespace

Rational sub_pfaffian(const AntisymmetricMatrix& a, const std::vector<int>& U) {
    std::vector<int> verts = U;
    std::sort(verts.begin(), verts.end());
    if (verts.size() % 2 != 0) throw Error("Pfaffian of an odd-size matrix is undefined");
    if (verts.size() > 64) throw Error("Pfaffian size too large");
    PfaffianMemo pm{a, verts, {}};
    std::uint64_t mask = verts.size() == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << verts.size()) - 1);
    return pm.eval(mask);
}

Rational pfaffian(const AntisymmetricMatrix& a) {
    std::vector<int> all(a.n);
    for (int t = 0; t < a.n; ++t) all[t] = t + 1;
    return sub_pfaffian(a, all);
}

Rational pfaffian_by_matchings(const AntisymmetricMatrix& a) {
    if (a.n % 2 != 0) throw Error("Pfaffian of an odd-size matrix is undefined");
    std::vector<int> all(a.n);
    for (int t = 0; t < a.n; ++t) all[t] = t + 1;
    Rational total = 0;
    for_each_matching(all, [&](const std::vector<Edge>& m) {
        Rational term = crossing_count(m) % 2 == 0 ? 1 : -1;
        for (const Edge& e : m) term *= a.get(e.i, e.j);
        total += term;
    });
    return total;
}

void SparsePolynomial::add(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

Rational SparsePolynomial::evaluate_at_ones() const {
    Rational s = 0;
    for (const auto& [m, c] : terms) s += c;
    return s;
}

std::string SparsePolynomial::to_string() const {
    if (terms.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms) {
        std::string cs = kassoc::to_string(c);
        if (!first) s += cs[0] == '-' ? " - " : " + ";
        else if (cs[0] == '-') s += "-";
        if (cs[0] == '-') cs = cs.substr(1);
        first = false;
        if (cs != "1" || m.empty()) s += cs + (m.empty() ? "" : "*");
        for (std::size_t t = 0; t < m.size(); ++t)
            s += (t ? "*" : "") + std::string("x") + std::to_string(m[t].i) + "_" + std::to_string(m[t].j);
    }
    return s;
}

Monomial monomial_product(const Monomial& a, const Monomial& b) {
    Monomial m = a;
    m.insert(m.end(), b.begin(), b.end());
    std::sort(m.begin(), m.end());
    return m;
}

namespace {

Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
    Monomial out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Monomial monomial_quotient(const Monomial& a, const Monomial& b) {
    Monomial out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    if (out.size() + b.size() != a.size()) throw InternalError("monomial does not divide");
    return out;
}

}  // namespace

SparsePolynomial operator-(const SparsePolynomial& a, const SparsePolynomial& b) {
    SparsePolynomial out = a;
    for (const auto& [m, c] : b.terms) out.add(m, -c);
    return out;
}

SparsePolynomial multiply(const SparsePolynomial& p, const Monomial& m, const Rational& c) {
    SparsePolynomial out;
    for (const auto& [t, d] : p.terms) out.add(monomial_product(t, m), c * d);
    return out;
}

Rational monomial_weight(const WeightVector& v, const Monomial& m) {
    Rational s = 0;
    for (const Edge& e : m) s += v.at(e);
    return s;
}

SparsePolynomial initial_form(const SparsePolynomial& p, const WeightVector& u) {
    WeightVector v = to_v(u);
    SparsePolynomial out;
    if (p.terms.empty()) return out;
    Rational best;
    bool have = false;
    for (const auto& [m, c] : p.terms) {
        Rational w = monomial_weight(v, m);
        if (!have || w > best) {
            best = w;
            have = true;
        }
    }
    for (const auto& [m, c] : p.terms)
        if (monomial_weight(v, m) == best) out.add(m, c);
    return out;
}

SparsePolynomial pfaffian_polynomial(const std::vector<int>& U) {
    SparsePolynomial p;
    for_each_matching(U, [&](const std::vector<Edge>& m) { p.add(m, crossing_count(m) % 2 == 0 ? 1 : -1); });
    return p;
}

SparsePolynomial pfaffian_initial_form(const WeightVector& v, const std::vector<int>& U) {
    return initial_form(pfaffian_polynomial(U), v);
}

bool s_polynomial_leading_check(const WeightVector& u, const std::vector<int>& U1, const std::vector<int>& U2,
                                int k) {
    if (static_cast<int>(U1.size()) != 2 * k + 2 || static_cast<int>(U2.size()) != 2 * k + 2)
        throw Error("s_polynomial_leading_check needs |U1| = |U2| = 2k+2");
    std::vector<int> a = U1, b = U2;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a == b) return true;
    WeightVector v = to_v(u);
    SparsePolynomial f = pfaffian_polynomial(a), g = pfaffian_polynomial(b);
    SparsePolynomial inf = initial_form(f, v), ing = initial_form(g, v);
    if (inf.terms.size() != 1 || ing.terms.size() != 1) throw Error("not generic: tie in a Pfaffian leading term");
    const auto& [F0, cf] = *inf.terms.begin();
    const auto& [G0, cg] = *ing.terms.begin();
    Monomial l = monomial_lcm(F0, G0);
    SparsePolynomial S = multiply(f, monomial_quotient(l, F0), 1 / cf) - multiply(g, monomial_quotient(l, G0), 1 / cg);
    if (S.is_zero()) return true;
    SparsePolynomial ins = initial_form(S, v);
    if (ins.terms.size() != 1) throw Error("not generic: tie in the S-polynomial leading term");
    Monomial lead = ins.terms.begin()->first;
    lead.erase(std::unique(lead.begin(), lead.end()), lead.end());
    return has_crossing_of_size(lead, k + 1);
}

UgbCertificate ugb_counterexample() {
    UgbCertificate cert;
    const int n = 9;
    cert.weights = {{{1, 2}, 2}, {{3, 4}, 2}, {{5, 6}, 2}, {{4, 7}, 2}, {{8, 9}, 2},
                    {{5, 8}, 1}, {{6, 9}, 1}, {{1, 7}, 10}, {{2, 8}, 10}, {{3, 9}, 10}};
    WeightVector v(n, Basis::V);
    for (const auto& [e, q] : cert.weights) v.at(e) = q;

    SparsePolynomial f = pfaffian_polynomial({1, 2, 3, 4, 5, 6});
    SparsePolynomial g = pfaffian_polynomial({4, 5, 6, 7, 8, 9});
    SparsePolynomial inf = initial_form(f, v), ing = initial_form(g, v);
    if (inf.terms.size() != 1 || ing.terms.size() != 1) throw InternalError("ugb: Pfaffian leading terms not unique");
    cert.in_f = inf.terms.begin()->first;
    cert.in_g = ing.terms.begin()->first;
    if (cert.in_f != Monomial{{1, 2}, {3, 4}, {5, 6}} || cert.in_g != Monomial{{4, 7}, {5, 6}, {8, 9}})
        throw InternalError("ugb: unexpected Pfaffian leading terms");

    SparsePolynomial h = multiply(g, {{1, 2}, {3, 4}}, 1) - multiply(f, {{4, 7}, {8, 9}}, 1);
    SparsePolynomial inh = initial_form(h, v);
    if (inh.terms.size() != 1) throw InternalError("ugb: leading term of h not unique");
    cert.in_h = inh.terms.begin()->first;
    cert.coefficient_in_h = inh.terms.begin()->second;
    cert.weight_in_h = monomial_weight(v, cert.in_h);
    if (cert.in_h != Monomial{{1, 2}, {3, 4}, {4, 7}, {5, 8}, {6, 9}} || cert.weight_in_h != 8)
        throw InternalError("ugb: unexpected leading term of h");

    for (const auto& W : subsets(n, 6)) {
        ++cert.subsets_scanned;
        SparsePolynomial p = initial_form(pfaffian_polynomial(W), v);
        for (const auto& [m, c] : p.terms)
            if (std::includes(cert.in_h.begin(), cert.in_h.end(), m.begin(), m.end())) {
                ++cert.dividing_subsets;
                break;
            }
    }
    if (cert.dividing_subsets != 0) throw InternalError("ugb: some Pfaffian leading monomial divides in(h)");
    return cert;
}

AntisymmetricMatrix parametrize(const std::vector<Vector>& a, const std::vector<Vector>& b) {
    if (a.size() != b.size() || a.empty()) throw Error("parametrize needs k vectors a_l and k vectors b_l, k >= 1");
    std::size_t n = a[0].size();
    for (std::size_t l = 0; l < a.size(); ++l)
        if (a[l].size() != n || b[l].size() != n) throw Error("parametrize: vector length mismatch");
    AntisymmetricMatrix m(static_cast<int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Rational s = 0;
            for (std::size_t l = 0; l < a.size(); ++l) s += a[l][i] * b[l][j] - a[l][j] * b[l][i];
            m.set(static_cast<int>(i + 1), static_cast<int>(j + 1), s);
        }
    return m;
}

Matrix hyperconnectivity_matrix(const PointConfiguration& p) {
    int n = static_cast<int>(p.points.size());
    int d = p.dim;
    for (const auto& x : p.points)
        if (static_cast<int>(x.size()) != d) throw Error("points must share the configuration dimension");
    Matrix h = zeros(num_edges(n), static_cast<std::size_t>(n * d));
    for (const Edge& e : all_edges(n)) {
        auto& row = h[edge_index(e, n)];
        for (int t = 0; t < d; ++t) {
            row[(e.i - 1) * d + t] = p.points[e.j - 1][t];
            row[(e.j - 1) * d + t] = -p.points[e.i - 1][t];
        }
    }
    return h;
}

MatroidRankReport matroid_rank(const EdgeSet& S, int k, int trials, std::mt19937_64& rng) {
    if (trials < 1) throw Error("trials must be >= 1");
    if (k < 1) throw Error("k must be >= 1");
    int n = S.n, d = 2 * k;
    std::size_t ceiling = S.size();
    if (n >= d) ceiling = std::min<std::size_t>(ceiling, static_cast<std::size_t>(2 * n * k - (2 * k + 1) * k));
    std::uniform_int_distribution<long> dist(-(1L << 20), 1L << 20);
    MatroidRankReport rep;
    for (int t = 0; t < trials; ++t) {
        PointConfiguration p{d, std::vector<Vector>(n, Vector(d))};
        for (auto& x : p.points)
            for (auto& c : x) c = Rational(dist(rng));
        Matrix h = hyperconnectivity_matrix(p);
        Matrix rows;
        for (const Edge& e : S.edges) rows.push_back(h[edge_index(e, n)]);
        rep.rank = std::max(rep.rank, rank(rows));
        rep.trials_run = t + 1;
        if (rep.rank == ceiling) break;
    }
    return rep;
}

bool in_band(const Edge& e, int k) { return e.i <= 2 * k; }

AntisymmetricMatrix complete_band(const std::map<Edge, Rational>& known, int n, int k) {
    if (k < 1) throw Error("k must be >= 1");
    for (const auto& [e, q] : known)
        if (e.i < 1 || e.j > n || e.i >= e.j || !in_band(e, k)) throw Error("band data outside the band pattern");
    AntisymmetricMatrix m(n);
    for (const Edge& e : all_edges(n)) {
        if (!in_band(e, k)) continue;
        auto it = known.find(e);
        if (it == known.end()) throw Error("band data missing entry " + to_string(e));
        m.set(e.i, e.j, it->second);
    }
    int lead = std::min(2 * k, n);
    std::vector<int> base(lead);
    for (int t = 0; t < lead; ++t) base[t] = t + 1;
    if (lead % 2 == 0 && lead == 2 * k) {
        Rational A = sub_pfaffian(m, base);
        if (A == 0) throw Error("non-generic band data: leading Pfaffian vanishes");
        for (const Edge& e : all_edges(n)) {
            if (in_band(e, k)) continue;
            std::vector<int> U = base;
            U.push_back(e.i);
            U.push_back(e.j);
            m.set(e.i, e.j, 0);
            Rational B = sub_pfaffian(m, U);
            m.set(e.i, e.j, -B / A);
        }
    }
    if (rank(m.dense()) > static_cast<std::size_t>(2 * k)) throw InternalError("band completion has rank > 2k");
    return m;
}

}  // namespace kassoc
