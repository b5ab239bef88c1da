#include "kassoc/tropical.hpp"

#include <algorithm>
#include <numeric>

namespace kassoc {

TropicalScalar tplus(const TropicalScalar& a, const TropicalScalar& b) {
    if (a.bottom) return b;
    if (b.bottom) return a;
    return a.value >= b.value ? a : b;
}

TropicalScalar ttimes(const TropicalScalar& a, const TropicalScalar& b) {
    if (a.bottom || b.bottom) return TropicalScalar::neg_inf();
    return TropicalScalar(a.value + b.value);
}

bool tless(const TropicalScalar& a, const TropicalScalar& b) {
    if (b.bottom) return false;
    if (a.bottom) return true;
    return a.value < b.value;
}

std::string to_string(const TropicalScalar& s) { return s.bottom ? "-inf" : to_string(s.value); }

TropicalScalar parse_tropical(const std::string& s) {
    if (s == "-inf" || s == "-Inf" || s == "-infinity") return TropicalScalar::neg_inf();
    return TropicalScalar(parse_rational(s));
}

TropicalWeights::TropicalWeights(int n_) : n(n_), x(num_edges(n_)) {}

TropicalWeights::TropicalWeights(const WeightVector& u) : n(u.n) {
    WeightVector v = to_v(u);
    x.reserve(v.x.size());
    for (const auto& q : v.x) x.emplace_back(q);
}

TropicalMatrix::TropicalMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<std::size_t>(r * c)) {
    if (r < 0 || c < 0) throw Error("negative matrix dimensions");
}

TropicalScalar matching_weight(const TropicalWeights& v, const std::vector<Edge>& pairs) {
    TropicalScalar s(Rational(0));
    for (const Edge& e : pairs) s = ttimes(s, v.at(e));
    return s;
}

std::vector<WeightedMatching> max_matchings(const TropicalWeights& v, const std::vector<int>& U) {
    std::vector<Matching> all = matchings(U);
    TropicalScalar best;
    std::vector<TropicalScalar> weights;
    weights.reserve(all.size());
    for (const auto& m : all) {
        weights.push_back(matching_weight(v, m.pairs));
        best = tplus(best, weights.back());
    }
    std::vector<WeightedMatching> out;
    for (std::size_t t = 0; t < all.size(); ++t)
        if (weights[t] == best) out.push_back({all[t], parity(all[t]), weights[t]});
    return out;
}

namespace {

void require_prevariety_regime(int n, int k) {
    if (k < 1) throw Error("k must be >= 1");
    if (n < 2 * k + 2) throw Error("prevariety needs n >= 2k+2");
}

}  // namespace

bool in_prevariety(const TropicalWeights& v, int k) {
    require_prevariety_regime(v.n, k);
    for (const auto& U : subsets(v.n, 2 * k + 2))
        if (max_matchings(v, U).size() < 2) return false;
    return true;
}

bool in_pv_plus(const WeightVector& u, int k) {
    int n = u.n;
    require_prevariety_regime(n, k);
    WeightVector v = to_v(u);
    TropicalWeights tv(v);
    if (n == 2 * k + 2) return in_grobner_cone_by_cycles(v, k) && in_prevariety(tv, k);
    if (!in_grobner_cone(v, k)) return false;
    bool route_a = in_prevariety(tv, k);
    WeightVector w = inverse_separation(v);
    std::vector<Edge> support;
    for (const Edge& e : relevant_edges(n, k))
        if (w.at(e) != 0) support.push_back(e);
    bool route_b = is_k_free(EdgeSet(n, support), k);
    if (route_a != route_b)
        throw InternalError("prevariety route and support route disagree on PV+ membership");
    return route_a;
}

bool second_max_is_swap(const WeightVector& u, int k, const std::vector<int>& U) {
    if (static_cast<int>(U.size()) != 2 * k + 2) throw Error("second_max_is_swap needs |U| = 2k+2");
    TropicalWeights tv(u);
    std::vector<WeightedMatching> maxima = max_matchings(tv, U);
    std::vector<Edge> X = crossing_matching(U);
    std::vector<int> ground = matchings(U).front().ground;
    Matching xm{ground, X};
    auto is_max = [&](const Matching& m) {
        return std::any_of(maxima.begin(), maxima.end(), [&](const auto& wm) { return wm.matching == m; });
    };
    if (!is_max(xm)) return false;
    int m = k + 1;
    for (int l = 0; l < m; ++l) {
        const Edge& e = X[l];
        const Edge& f = X[(l + 1) % m];
        for (int variant = 1; variant <= 2; ++variant)
            if (is_max(swap(xm, e, f, variant))) return true;
    }
    return false;
}

bool is_balanced(const TropicalWeights& v, int k) {
    require_prevariety_regime(v.n, k);
    for (const auto& U : subsets(v.n, 2 * k + 2)) {
        int balance = 0;
        for (const auto& wm : max_matchings(v, U)) balance += wm.parity == Parity::Even ? 1 : -1;
        if (balance != 0) return false;
    }
    return true;
}

TropicalDeterminant tropical_determinant(const TropicalMatrix& m) {
    if (m.rows != m.cols) throw Error("tropical determinant needs a square matrix");
    std::vector<int> perm(m.rows);
    std::iota(perm.begin(), perm.end(), 0);
    TropicalScalar best;
    int count = 0;
    do {
        TropicalScalar s(Rational(0));
        for (int r = 0; r < m.rows; ++r) s = ttimes(s, m.at(r, perm[r]));
        if (s.bottom) continue;
        if (best.bottom || s.value > best.value) {
            best = s;
            count = 1;
        } else if (s.value == best.value) {
            ++count;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (best.bottom) return {best, true};
    return {best, count >= 2};
}

int tropical_rank(const TropicalMatrix& m) {
    int top = std::min(m.rows, m.cols);
    for (int r = top; r >= 1; --r)
        for (const auto& rs : subsets(m.rows, r))
            for (const auto& cs : subsets(m.cols, r)) {
                TropicalMatrix minor(r, r);
                for (int a = 0; a < r; ++a)
                    for (int b = 0; b < r; ++b) minor.at(a, b) = m.at(rs[a] - 1, cs[b] - 1);
                if (!tropical_determinant(minor).tie) return r;
            }
    return 0;
}

TropicalWeights sym_construction(const TropicalMatrix& m, const std::optional<Rational>& K) {
    int n1 = m.rows, n2 = m.cols, n = n1 + n2;
    if (n1 < 1 || n2 < 1) throw Error("sym_construction needs a non-empty matrix");
    if (K) {
        for (const auto& e : m.entries)
            if (e.bottom) throw Error("sym_construction with finite K needs finite entries");
    }
    TropicalWeights v(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            TropicalScalar& out = v.at({i, j});
            if (i <= n1 && j > n1) {
                out = m.at(i - 1, j - n1 - 1);
            } else if (!K) {
                out = TropicalScalar::neg_inf();
            } else if (j <= n1) {
                out = TropicalScalar(m.at(i - 1, 0).value + m.at(j - 1, 0).value - *K);
            } else {
                out = TropicalScalar(m.at(0, i - n1 - 1).value + m.at(0, j - n1 - 1).value - *K);
            }
        }
    return v;
}

namespace {

bool block_edges_avoided(const TropicalMatrix& m, int k, const Rational& K) {
    int n1 = m.rows, n2 = m.cols;
    if (n1 < k + 1 || n2 < k + 1) return true;
    TropicalWeights v = sym_construction(m, K);
    for (const auto& A : subsets(n1, k + 1))
        for (const auto& B : subsets(n2, k + 1)) {
            std::vector<int> U = A;
            for (int b : B) U.push_back(b + n1);
            for (const auto& wm : max_matchings(v, U))
                for (const Edge& e : wm.matching.pairs)
                    if ((e.j <= n1) || (e.i > n1)) return false;
        }
    return true;
}

}  // namespace

Rational choose_K(const TropicalMatrix& m, int k) {
    if (k < 1) throw Error("k must be >= 1");
    Rational mx = 0;
    for (const auto& e : m.entries) {
        if (e.bottom) throw Error("choose_K needs a finite matrix");
        mx = std::max(mx, Rational(abs(e.value)));
    }
    Rational K = 1 + 4 * (k + 1) * (1 + mx);
    for (int attempt = 0; attempt < 64; ++attempt) {
        if (block_edges_avoided(m, k, K)) return K;
        K *= 2;
    }
    throw InternalError("choose_K: no sufficiently large K found");
}

TropicalMatrix random_low_rank(int rows, int cols, int k, std::mt19937_64& rng, long magnitude) {
    std::uniform_int_distribution<long> dist(-magnitude, magnitude);
    std::vector<std::vector<long>> a(rows, std::vector<long>(k)), b(k, std::vector<long>(cols));
    for (auto& r : a)
        for (auto& x : r) x = dist(rng);
    for (auto& r : b)
        for (auto& x : r) x = dist(rng);
    TropicalMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            long best = a[r][0] + b[0][c];
            for (int l = 1; l < k; ++l) best = std::max(best, a[r][l] + b[l][c]);
            m.at(r, c) = TropicalScalar(Rational(best));
        }
    return m;
}

}  // namespace kassoc
