#include "kassoc/combinatorics.hpp"

#include <algorithm>

#include "kassoc/rational.hpp"

namespace kassoc {

Edge make_edge(int a, int b) {
    if (a == b) throw Error("edge endpoints must differ: " + std::to_string(a));
    return a < b ? Edge{a, b} : Edge{b, a};
}

std::string to_string(const Edge& e) { return std::to_string(e.i) + "," + std::to_string(e.j); }

int cyclic_length(const Edge& e, int n) { return std::min(e.j - e.i, n - e.j + e.i); }

bool is_relevant(const Edge& e, int n, int k) { return cyclic_length(e, n) > k; }

int num_edges(int n) { return n * (n - 1) / 2; }

int edge_index(const Edge& e, int n) {
    // Edges {a,*} with a < i come first: (n-1) + (n-2) + ... + (n-i+1).
    int before = (e.i - 1) * n - (e.i - 1) * e.i / 2;
    return before + (e.j - e.i - 1);
}

Edge edge_at(int index, int n) {
    for (int i = 1; i < n; ++i) {
        if (index < n - i) return Edge{i, i + 1 + index};
        index -= n - i;
    }
    throw Error("edge index out of range");
}

std::vector<Edge> all_edges(int n) {
    std::vector<Edge> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) out.push_back({i, j});
    return out;
}

std::vector<Edge> relevant_edges(int n, int k) {
    std::vector<Edge> out;
    for (const Edge& e : all_edges(n))
        if (is_relevant(e, n, k)) out.push_back(e);
    return out;
}

std::vector<Edge> irrelevant_edges(int n, int k) {
    std::vector<Edge> out;
    for (const Edge& e : all_edges(n))
        if (!is_relevant(e, n, k)) out.push_back(e);
    return out;
}

EdgeSet::EdgeSet(int n_, std::vector<Edge> es) : n(n_), edges(std::move(es)) {
    if (n < 2) throw Error("edge set needs n >= 2");
    for (const Edge& e : edges)
        if (e.i < 1 || e.j > n || e.i >= e.j)
            throw Error("invalid edge {" + to_string(e) + "} for n=" + std::to_string(n));
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

bool EdgeSet::contains(const Edge& e) const { return std::binary_search(edges.begin(), edges.end(), e); }

bool crosses(const Edge& e, const Edge& f) {
    return (e.i < f.i && f.i < e.j && e.j < f.j) || (f.i < e.i && e.i < f.j && f.j < e.j);
}

namespace {

struct CliqueSearch {
    const std::vector<Edge>& g;
    int target;  // stop as soon as a clique of this size is found; 0 = no target
    int best = 0;

    bool grow(std::vector<int>& cand, int size) {
        if (size > best) best = size;
        if (target > 0 && best >= target) return true;
        for (std::size_t t = 0; t < cand.size(); ++t) {
            if (size + static_cast<int>(cand.size() - t) <= best) return false;
            std::vector<int> next;
            for (std::size_t u = t + 1; u < cand.size(); ++u)
                if (crosses(g[cand[t]], g[cand[u]])) next.push_back(cand[u]);
            if (grow(next, size + 1)) return true;
        }
        return false;
    }
};

void collect_crossings(const std::vector<Edge>& g, std::vector<int>& cand, std::vector<Edge>& cur, int s,
                       std::vector<std::vector<Edge>>& out) {
    if (static_cast<int>(cur.size()) == s) {
        out.push_back(cur);
        return;
    }
    for (std::size_t t = 0; t < cand.size(); ++t) {
        std::vector<int> next;
        for (std::size_t u = t + 1; u < cand.size(); ++u)
            if (crosses(g[cand[t]], g[cand[u]])) next.push_back(cand[u]);
        cur.push_back(g[cand[t]]);
        collect_crossings(g, next, cur, s, out);
        cur.pop_back();
    }
}

}  // namespace

int max_crossing_size(const std::vector<Edge>& g) {
    CliqueSearch cs{g, 0};
    std::vector<int> cand(g.size());
    for (std::size_t t = 0; t < g.size(); ++t) cand[t] = static_cast<int>(t);
    cs.grow(cand, 0);
    return cs.best;
}

int max_crossing_size(const EdgeSet& g) { return max_crossing_size(g.edges); }

bool has_crossing_of_size(const std::vector<Edge>& g, int s) {
    if (s <= 0) return true;
    if (static_cast<int>(g.size()) < s) return false;
    CliqueSearch cs{g, s};
    std::vector<int> cand(g.size());
    for (std::size_t t = 0; t < g.size(); ++t) cand[t] = static_cast<int>(t);
    return cs.grow(cand, 0);
}

bool is_k_free(const EdgeSet& g, int k) {
    if (k < 1) throw Error("k must be >= 1");
    return !has_crossing_of_size(g.edges, k + 1);
}

std::vector<std::vector<Edge>> crossings_of_size(const std::vector<Edge>& g, int s) {
    std::vector<Edge> sorted = g;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> cand(sorted.size());
    for (std::size_t t = 0; t < sorted.size(); ++t) cand[t] = static_cast<int>(t);
    std::vector<std::vector<Edge>> out;
    std::vector<Edge> cur;
    collect_crossings(sorted, cand, cur, s, out);
    return out;
}

std::string to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

int crossing_count(const std::vector<Edge>& pairs) {
    int c = 0;
    for (std::size_t a = 0; a < pairs.size(); ++a)
        for (std::size_t b = a + 1; b < pairs.size(); ++b)
            if (crosses(pairs[a], pairs[b])) ++c;
    return c;
}

Parity parity(const Matching& m) { return crossing_count(m.pairs) % 2 == 0 ? Parity::Even : Parity::Odd; }

namespace {

void matching_rec(std::vector<int>& rest, std::vector<Edge>& cur,
                  const std::function<void(const std::vector<Edge>&)>& fn) {
    if (rest.empty()) {
        fn(cur);
        return;
    }
    int a = rest[0];
    for (std::size_t t = 1; t < rest.size(); ++t) {
        int b = rest[t];
        std::vector<int> next;
        next.reserve(rest.size() - 2);
        for (std::size_t u = 1; u < rest.size(); ++u)
            if (u != t) next.push_back(rest[u]);
        cur.push_back({a, b});
        matching_rec(next, cur, fn);
        cur.pop_back();
    }
}

std::vector<int> sorted_ground(const std::vector<int>& U) {
    std::vector<int> g = U;
    std::sort(g.begin(), g.end());
    if (std::adjacent_find(g.begin(), g.end()) != g.end()) throw Error("repeated vertex in ground set");
    if (g.size() % 2 != 0) throw Error("odd ground set");
    return g;
}

}  // namespace

void for_each_matching(const std::vector<int>& U, const std::function<void(const std::vector<Edge>&)>& fn) {
    std::vector<int> g = sorted_ground(U);
    std::vector<Edge> cur;
    matching_rec(g, cur, fn);
}

std::vector<Matching> matchings(const std::vector<int>& U) {
    std::vector<int> g = sorted_ground(U);
    std::vector<Matching> out;
    for_each_matching(g, [&](const std::vector<Edge>& p) { out.push_back({g, p}); });
    return out;
}

long long double_factorial_count(int size) {
    long long c = 1;
    for (int t = size - 1; t > 1; t -= 2) c *= t;
    return c;
}

Matching swap(const Matching& m, const Edge& e, const Edge& f, int variant) {
    if (variant != 1 && variant != 2) throw Error("swap variant must be 1 or 2");
    auto has = [&](const Edge& x) { return std::find(m.pairs.begin(), m.pairs.end(), x) != m.pairs.end(); };
    if (!has(e) || !has(f)) throw Error("swap: edge not in matching");
    if (e == f) throw Error("swap: edges must be distinct");
    std::vector<int> pts{e.i, e.j, f.i, f.j};
    std::sort(pts.begin(), pts.end());
    int p = pts[0], q = pts[1], r = pts[2], s = pts[3];
    std::vector<std::vector<Edge>> options{{{p, q}, {r, s}}, {{p, r}, {q, s}}, {{p, s}, {q, r}}};
    std::vector<Edge> current{std::min(e, f), std::max(e, f)};
    std::vector<std::vector<Edge>> others;
    for (auto& o : options)
        if (o != current) others.push_back(o);
    Matching out = m;
    out.pairs.clear();
    for (const Edge& x : m.pairs)
        if (x != e && x != f) out.pairs.push_back(x);
    for (const Edge& x : others[variant - 1]) out.pairs.push_back(x);
    std::sort(out.pairs.begin(), out.pairs.end());
    return out;
}

std::vector<Edge> crossing_matching(const std::vector<int>& U) {
    std::vector<int> g = sorted_ground(U);
    std::size_t m = g.size() / 2;
    std::vector<Edge> out;
    for (std::size_t t = 0; t < m; ++t) out.push_back({g[t], g[t + m]});
    return out;
}

std::size_t k_triangulation_size(int n, int k) { return static_cast<std::size_t>(k * (2 * n - 2 * k - 1)); }

namespace {

struct TriangulationSearch {
    int n, k;
    std::vector<Edge> relevant;
    std::vector<Edge> chosen;
    std::size_t target;
    std::vector<Edge> base;
    const std::function<void(const EdgeSet&)>& fn;

    bool addable(const Edge& e) const {
        std::vector<Edge> crossing;
        for (const Edge& f : chosen)
            if (crosses(e, f)) crossing.push_back(f);
        return !has_crossing_of_size(crossing, k);
    }

    void run(std::size_t t) {
        if (chosen.size() + (relevant.size() - t) < target) return;
        if (t == relevant.size()) {
            if (chosen.size() != target) return;
            std::vector<Edge> all = base;
            all.insert(all.end(), chosen.begin(), chosen.end());
            fn(EdgeSet(n, std::move(all)));
            return;
        }
        const Edge& e = relevant[t];
        if (addable(e)) {
            chosen.push_back(e);
            run(t + 1);
            chosen.pop_back();
        }
        run(t + 1);
    }
};

}  // namespace

void for_each_k_triangulation(int n, int k, const std::function<void(const EdgeSet&)>& fn) {
    if (k < 1) throw Error("k must be >= 1");
    if (n < 2 * k + 1) throw Error("k-triangulations need n >= 2k+1");
    TriangulationSearch s{n, k, relevant_edges(n, k), {}, 0, irrelevant_edges(n, k), fn};
    s.target = k_triangulation_size(n, k) - s.base.size();
    s.run(0);
}

std::vector<EdgeSet> enumerate_k_triangulations(int n, int k) {
    std::vector<EdgeSet> out;
    for_each_k_triangulation(n, k, [&](const EdgeSet& t) { out.push_back(t); });
    return out;
}

namespace {

bool shares_vertex(const Edge& a, const Edge& b) { return a.i == b.i || a.i == b.j || a.j == b.i || a.j == b.j; }

int other_vertex(const Edge& a, const Edge& shared_with) {
    if (a.i != shared_with.i && a.i != shared_with.j) return a.i;
    return a.j;
}

struct AccordionBuilder {
    const EdgeSet& T;
    int k;
    int n;

    // Positions relative to a rotation origin.
    int pos(int v, int origin) const { return ((v - origin) % n + n) % n; }
    int vert(int p, int origin) const { return (p + origin - 1) % n + 1; }

    std::vector<Edge> build(const Edge& E, const Edge& F) {
        if (E == F) return {E};
        if (shares_vertex(E, F)) return {E, F};
        // Rotate so F sits on the closed arc [e1, e2] of E.
        int origin = E.i;
        auto inside = [&](int o) {
            int a = pos(E.i, o), b = pos(E.j, o);
            if (a > b) std::swap(a, b);
            int x = pos(F.i, o), y = pos(F.j, o);
            return a <= x && x <= b && a <= y && y <= b && a == 0;
        };
        if (!inside(E.i)) origin = E.j;
        if (!inside(origin)) throw InternalError("internal: contradicts Lemma accordion");
        int e1 = 0, e2 = pos(origin == E.i ? E.j : E.i, origin);
        int f1 = pos(F.i, origin), f2 = pos(F.j, origin);
        if (f1 > f2) std::swap(f1, f2);

        Edge shortcut = make_edge(vert(e1, origin), vert(f2, origin));
        if (T.contains(shortcut)) return {E, shortcut, F};

        std::vector<Edge> crossing;
        for (const Edge& g : T.edges)
            if (crosses(g, shortcut)) crossing.push_back(g);
        bool found = false;
        Edge best{};
        for (const auto& K : crossings_of_size(crossing, k)) {
            const Edge* pick = nullptr;
            int pick_pos = n;
            for (const Edge& g : K) {
                int a = pos(g.i, origin), b = pos(g.j, origin);
                int in = (e1 < a && a < f2) ? a : b;
                if (in < pick_pos) {
                    pick_pos = in;
                    pick = &g;
                }
            }
            int in = pick_pos;
            int out = pos(pick->i, origin) == in ? pos(pick->j, origin) : pos(pick->i, origin);
            if (!(e1 < in && in <= f1 && f2 < out && out <= e2)) continue;
            if (!found || *pick < best) best = *pick;
            found = true;
        }
        if (!found) throw InternalError("internal: contradicts Lemma accordion");
        std::vector<Edge> left = build(E, best);
        std::vector<Edge> right = build(best, F);
        left.insert(left.end(), right.begin() + 1, right.end());
        return left;
    }
};

}  // namespace

bool is_accordion(const std::vector<Edge>& seq) {
    if (seq.empty()) return false;
    for (std::size_t t = 0; t + 1 < seq.size(); ++t)
        if (!shares_vertex(seq[t], seq[t + 1]) || seq[t] == seq[t + 1]) return false;
    for (std::size_t t = 1; t + 1 < seq.size(); ++t) {
        int a = other_vertex(seq[t - 1], seq[t]);
        int b = other_vertex(seq[t + 1], seq[t]);
        if (a == b || !crosses(make_edge(a, b), seq[t])) return false;
    }
    return true;
}

std::vector<Edge> accordion(const EdgeSet& T, int k, const Edge& E, const Edge& F) {
    if (!T.contains(E) || !T.contains(F)) throw Error("accordion: E and F must belong to T");
    if (crosses(E, F)) throw Error("accordion: E and F cross");
    AccordionBuilder b{T, k, T.n};
    std::vector<Edge> seq = b.build(E, F);
    if (!is_accordion(seq) || seq.front() != E || seq.back() != F)
        throw InternalError("internal: contradicts Lemma accordion");
    for (const Edge& g : seq)
        if (!T.contains(g)) throw InternalError("internal: contradicts Lemma accordion");
    return seq;
}

std::vector<std::vector<int>> subsets(int n, int size) {
    std::vector<std::vector<int>> out;
    if (size < 0 || size > n) return out;
    std::vector<int> cur(size);
    for (int t = 0; t < size; ++t) cur[t] = t + 1;
    while (true) {
        out.push_back(cur);
        int t = size - 1;
        while (t >= 0 && cur[t] == n - size + t + 1) --t;
        if (t < 0) break;
        ++cur[t];
        for (int u = t + 1; u < size; ++u) cur[u] = cur[u - 1] + 1;
    }
    return out;
}

}  // namespace kassoc
