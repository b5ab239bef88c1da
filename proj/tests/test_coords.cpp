#include <doctest.h>

#include <algorithm>
#include <random>

#include "kassoc/coords.hpp"
#include "kassoc/linalg.hpp"

using namespace kassoc;

namespace {

WeightVector random_rational(int n, Basis b, std::mt19937_64& rng, int range = 40) {
    WeightVector u(n, b);
    std::uniform_int_distribution<int> num(-range, range), den(1, 7);
    for (auto& q : u.x) {
        q = Rational(num(rng), den(rng));
        q.canonicalize();
    }
    return u;
}

// Independent evaluation of the separation sum straight from its cyclic condition.
Rational separation_oracle(const WeightVector& w, const Edge& ab) {
    int n = w.n, a = ab.i, b = ab.j;
    Rational s = 0;
    for (const Edge& e : all_edges(n)) {
        // e separates sides a and b iff exactly one endpoint lies in the vertex arc a..b-1.
        bool i_in = a <= e.i && e.i < b;
        bool j_in = a <= e.j && e.j < b;
        if (i_in != j_in) s += w.at(e);
    }
    return s;
}

bool four_point_brute(const WeightVector& v) {
    int n = v.n;
    for (const auto& U : subsets(n, 4)) {
        int a = U[0], b = U[1], c = U[2], d = U[3];
        Rational x = v.at({a, c}) + v.at({b, d});
        if (x < v.at({a, b}) + v.at({c, d})) return false;
        if (x < v.at({a, d}) + v.at({b, c})) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("separation vector example") {
    WeightVector w = WeightVector::unit(4, Basis::W, {1, 3});
    WeightVector v = separation_vector(w);
    std::vector<Rational> expect = {1, 1, 0, 0, 1, 1};
    CHECK(v.x == expect);
    CHECK(separation_vector(WeightVector(5, Basis::W)).is_zero());
}

TEST_CASE("separation vector matches the direct sum") {
    std::mt19937_64 rng(3);
    for (int n = 4; n <= 9; ++n) {
        WeightVector w = random_rational(n, Basis::W, rng);
        WeightVector v = separation_vector(w);
        for (const Edge& e : all_edges(n)) CHECK(v.at(e) == separation_oracle(w, e));
    }
}

TEST_CASE("consecutive weights land in the lineality space") {
    int n = 7;
    WeightVector w(n, Basis::W);
    for (int a = 1; a <= n; ++a) w.at(make_edge(a, a % n + 1)) = a * 3 - 2;
    WeightVector v = separation_vector(w);
    auto L = lineality_basis(n);
    CHECK(L.size() == static_cast<std::size_t>(n));
    Matrix m;
    for (const auto& l : L) m.push_back(l.x);
    std::size_t r = rank(m);
    CHECK(r == static_cast<std::size_t>(n));
    m.push_back(v.x);
    CHECK(rank(m) == r);
}

TEST_CASE("round trip") {
    std::mt19937_64 rng(5);
    for (int n = 3; n <= 10; ++n)
        for (int t = 0; t < 100; ++t) {
            WeightVector w = random_rational(n, Basis::W, rng);
            CHECK(inverse_separation(separation_vector(w)) == w);
            WeightVector v = random_rational(n, Basis::V, rng);
            CHECK(separation_vector(inverse_separation(v)) == v);
        }
}

TEST_CASE("inverse separation of a negative V unit") {
    int n = 8;
    int i = 2, j = 6;
    WeightVector v = WeightVector::unit(n, Basis::V, {i + 1, j}, -1);
    WeightVector w = inverse_separation(v);
    CHECK(w.at({i + 1, j}) == Rational(-1, 2));
    CHECK(w.at({i, j - 1}) == Rational(-1, 2));
    CHECK(w.at({i + 1, j - 1}) == Rational(1, 2));
    CHECK(w.at({i, j}) == Rational(1, 2));
    int nonzero = std::count_if(w.x.begin(), w.x.end(), [](const Rational& q) { return q != 0; });
    CHECK(nonzero == 4);
    CHECK(inverse_separation(WeightVector(n, Basis::V)).is_zero());
}

TEST_CASE("fp-positivity") {
    std::mt19937_64 rng(7);
    for (int n = 4; n <= 8; ++n) {
        WeightVector w = random_positive_w(n, all_edges(n), rng);
        CHECK(is_fp_positive(separation_vector(w)));
    }
    CHECK_FALSE(is_fp_positive(-separation_vector(WeightVector::unit(5, Basis::W, {1, 3}))));
    CHECK(is_fp_positive(WeightVector(6, Basis::V)));
}

TEST_CASE("fp-positivity agrees with the four-point brute force") {
    std::mt19937_64 rng(9);
    int agree_pos = 0;
    for (int n = 4; n <= 8; ++n)
        for (int t = 0; t < 60; ++t) {
            WeightVector w = random_rational(n, Basis::W, rng);
            // Bias toward the positive side so both answers occur.
            if (t % 2 == 0)
                for (auto& q : w.x) q = abs(q);
            WeightVector v = separation_vector(w);
            bool fast = is_fp_positive(v);
            CHECK(fast == four_point_brute(v));
            agree_pos += fast;
        }
    CHECK(agree_pos > 0);
}

TEST_CASE("fp-positive vectors prefer the crossing matching") {
    std::mt19937_64 rng(13);
    for (int n = 4; n <= 8; ++n)
        for (int t = 0; t < 3; ++t) {
            WeightVector v = separation_vector(random_positive_w(n, all_edges(n), rng));
            for (int size = 2; size <= std::min(n, 8); size += 2)
                for (const auto& U : subsets(n, size)) {
                    Rational cross = matching_weight(v, crossing_matching(U));
                    for (const auto& m : matchings(U)) CHECK(matching_weight(v, m.pairs) <= cross);
                }
        }
}

TEST_CASE("grobner cone counts") {
    ConeDescription c = grobner_cone(7, 2);
    CHECK(c.facets.size() == 14);
    CHECK(c.rays.size() == 14);
    CHECK(c.lineality.size() == 7);
    int longs = 0, shorts = 0;
    for (const auto& f : c.facets) (f.label.kind == FormLabel::Kind::Long ? longs : shorts)++;
    CHECK(longs == 7);
    CHECK(shorts == 7);
    CHECK(grobner_cone(9, 3).facets.size() == 27);
    CHECK_THROWS_WITH_AS(grobner_cone(6, 2), doctest::Contains("single/non-simplicial regime"), Error);
}

TEST_CASE("k=1 cone is FP_n") {
    int n = 7;
    std::mt19937_64 rng(17);
    for (int t = 0; t < 100; ++t) {
        WeightVector v = random_rational(n, Basis::V, rng);
        if (t % 3 == 0) v = separation_vector(random_positive_w(n, all_edges(n), rng)) - v;
        CHECK(in_grobner_cone(v, 1) == is_fp_positive(v));
    }
    for (const auto& f : grobner_cone(n, 1).facets) CHECK(f.label.kind == FormLabel::Kind::Long);
}

TEST_CASE("simplicial ray/facet pairing") {
    for (int k = 1; k <= 3; ++k)
        for (int n = 2 * k + 3; n <= 9; ++n) {
            ConeDescription c = grobner_cone(n, k);
            REQUIRE(c.rays.size() == c.facets.size());
            CHECK(c.facets.size() == static_cast<std::size_t>(n * (n - 1) / 2 - n));
            for (const auto& r : c.rays) {
                int strict = 0;
                Edge which{};
                for (const auto& f : c.facets) {
                    Rational val = f.evaluate(r.ray);
                    CHECK(val >= 0);
                    if (val > 0) {
                        ++strict;
                        which = f.label.edge;
                    }
                }
                CHECK(strict == 1);
                CHECK(which == r.label);
            }
            for (const auto& l : c.lineality)
                for (const auto& f : c.facets) CHECK(f.evaluate(l) == 0);
        }
}

TEST_CASE("membership examples") {
    std::mt19937_64 rng(19);
    WeightVector fp = separation_vector(random_positive_w(8, all_edges(8), rng));
    CHECK(in_grobner_cone(fp, 2));
    CHECK(in_grobner_cone(WeightVector::unit(8, Basis::V, {3, 4}, -1), 2));
    WeightVector bad = -separation_vector(WeightVector::unit(8, Basis::W, {1, 4}));
    CHECK_FALSE(in_grobner_cone(bad, 2));
    auto v = violated_facets(bad, 2);
    REQUIRE(v.size() >= 1);
    bool found = false;
    for (const auto& f : v) found |= f.label.kind == FormLabel::Kind::Long && f.label.edge == Edge{1, 4};
    CHECK(found);
}

TEST_CASE("FP_n lies in every Grobner cone") {
    for (int k = 1; k <= 3; ++k)
        for (int n = 2 * k + 3; n <= 9; ++n)
            for (const Edge& e : all_edges(n)) CHECK(in_grobner_cone(WeightVector::unit(n, Basis::W, e), k));
}

TEST_CASE("cone_face_of") {
    std::mt19937_64 rng(23);
    for (int k = 1; k <= 2; ++k)
        for (int n = 2 * k + 3; n <= 2 * k + 4; ++n) {
            auto tris = enumerate_k_triangulations(n, k);
            for (std::size_t t = 0; t < tris.size(); t += 3) {
                std::vector<Edge> rel;
                for (const Edge& e : tris[t].edges)
                    if (is_relevant(e, n, k)) rel.push_back(e);
                WeightVector v = separation_vector(random_positive_w(n, rel, rng));
                EdgeSet face = cone_face_of(v, k);
                std::vector<Edge> got;
                for (const Edge& e : face.edges)
                    if (is_relevant(e, n, k)) got.push_back(e);
                CHECK(got == rel);
            }
            for (const auto& l : lineality_basis(n)) CHECK(cone_face_of(l, k).size() == 0);
            for (const Edge& e : relevant_edges(n, k)) {
                if (cyclic_length(e, n) < k + 2) continue;
                EdgeSet f = cone_face_of(WeightVector::unit(n, Basis::W, e), k);
                CHECK(f.edges == std::vector<Edge>{e});
            }
        }
    WeightVector bad = -separation_vector(WeightVector::unit(8, Basis::W, {1, 4}));
    CHECK_THROWS_WITH_AS(cone_face_of(bad, 2), doctest::Contains("1,4"), Error);
}

TEST_CASE("cycle inequalities on four points") {
    auto forms = cycle_inequalities(4, 1);
    auto has = [&](std::vector<std::pair<Edge, int>> want) {
        for (const auto& f : forms) {
            std::vector<Rational> c(6, 0);
            for (auto& [e, s] : want) c[edge_index(e, 4)] = s;
            if (f.basis == Basis::V && f.coeffs == c) return true;
        }
        return false;
    };
    CHECK(has({{{1, 3}, 1}, {{2, 4}, 1}, {{1, 2}, -1}, {{3, 4}, -1}}));
    CHECK(has({{{1, 3}, 1}, {{2, 4}, 1}, {{1, 4}, -1}, {{2, 3}, -1}}));
}

TEST_CASE("cycle membership agrees with facet membership") {
    std::mt19937_64 rng(29);
    for (int k = 1; k <= 2; ++k)
        for (int n = 2 * k + 3; n <= 8; ++n) {
            int inside = 0;
            for (int t = 0; t < 200; ++t) {
                WeightVector v = random_rational(n, Basis::V, rng);
                if (t % 2 == 0) v = v + Rational(3) * separation_vector(random_positive_w(n, all_edges(n), rng));
                bool a = in_grobner_cone(v, k);
                CHECK(a == in_grobner_cone_by_cycles(v, k));
                inside += a;
            }
            CHECK(inside > 0);
        }
}

TEST_CASE("facet-inducing cycle forms at n = 2k+2") {
    CHECK(facet_inducing_cycle_forms(4, 1).size() == 2);
    CHECK(facet_inducing_cycle_forms(6, 2).size() == 14);
}
