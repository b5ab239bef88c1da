#include <doctest.h>

#include <algorithm>
#include <random>

#include "kassoc/tropical.hpp"

using namespace kassoc;

namespace {

WeightVector example_positive() {
    WeightVector v(6, Basis::V);
    for (Edge e : std::vector<Edge>{{1, 3}, {2, 3}, {2, 4}, {4, 5}, {5, 6}, {1, 6}}) v.at(e) = 1;
    return v;
}

TropicalMatrix from_ints(const std::vector<std::vector<int>>& rows) {
    TropicalMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) m.at(r, c) = Rational(rows[r][c]);
    return m;
}

std::vector<Edge> relevant_part(const EdgeSet& t, int k) {
    std::vector<Edge> out;
    for (const Edge& e : t.edges)
        if (is_relevant(e, t.n, k)) out.push_back(e);
    return out;
}

// A (k+1)-crossing of relevant edges plus random extra relevant edges.
std::vector<Edge> crossing_support(int n, int k, std::mt19937_64& rng) {
    auto rel = relevant_edges(n, k);
    auto crossings = crossings_of_size(rel, k + 1);
    std::vector<Edge> s = crossings[rng() % crossings.size()];
    for (const Edge& e : rel)
        if (rng() % 4 == 0) s.push_back(e);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

}  // namespace

TEST_CASE("tropical scalar arithmetic") {
    TropicalScalar bot = TropicalScalar::neg_inf();
    TropicalScalar two(Rational(2));
    CHECK(ttimes(bot, two).bottom);
    CHECK(tplus(bot, two) == two);
    CHECK(tless(bot, two));
    CHECK_FALSE(tless(two, bot));
    CHECK(to_string(bot) == "-inf");
    CHECK(parse_tropical("-inf").bottom);
    CHECK(parse_tropical("3/4") == TropicalScalar(Rational(3, 4)));
}

TEST_CASE("max_matchings examples") {
    WeightVector v = separation_vector(WeightVector::unit(4, Basis::W, {1, 3}));
    auto mm = max_matchings(TropicalWeights(v), {1, 2, 3, 4});
    REQUIRE(mm.size() == 2);
    CHECK(mm[0].matching.pairs == std::vector<Edge>{{1, 2}, {3, 4}});
    CHECK(mm[1].matching.pairs == std::vector<Edge>{{1, 3}, {2, 4}});
    CHECK(mm[0].weight == TropicalScalar(Rational(2)));
    CHECK(max_matchings(TropicalWeights(WeightVector(6, Basis::V)), {1, 2, 3, 4, 5, 6}).size() == 15);
    CHECK_THROWS_AS(max_matchings(TropicalWeights(6), {1, 2, 3}), Error);
}

TEST_CASE("example positive vector") {
    WeightVector v = example_positive();
    auto mm = max_matchings(TropicalWeights(v), {1, 2, 3, 4, 5, 6});
    REQUIRE(mm.size() == 2);
    CHECK(mm[0].matching.pairs == std::vector<Edge>{{1, 3}, {2, 4}, {5, 6}});
    CHECK(mm[1].matching.pairs == std::vector<Edge>{{1, 6}, {2, 3}, {4, 5}});
    CHECK(mm[0].weight == TropicalScalar(Rational(3)));
    CHECK(mm[0].parity != mm[1].parity);
    CHECK(in_prevariety(TropicalWeights(v), 2));
    CHECK(is_balanced(TropicalWeights(v), 2));
    CHECK_FALSE(second_max_is_swap(v, 2, {1, 2, 3, 4, 5, 6}));
}

TEST_CASE("prevariety basics") {
    std::mt19937_64 rng(2);
    for (int n = 6; n <= 8; ++n) {
        for (const auto& l : lineality_basis(n)) CHECK(in_prevariety(TropicalWeights(l), 2));
        auto cr = crossings_of_size(relevant_edges(n, 2), 3)[0];
        WeightVector v = separation_vector(random_positive_w(n, cr, rng));
        CHECK_FALSE(in_prevariety(TropicalWeights(v), 2));
    }
    CHECK_THROWS_AS(in_prevariety(TropicalWeights(5), 2), Error);
}

TEST_CASE("PV+ on triangulation supports and crossing supports") {
    std::mt19937_64 rng(4);
    for (int k = 1; k <= 2; ++k)
        for (int n = 2 * k + 3; n <= 2 * k + 4; ++n) {
            auto tris = enumerate_k_triangulations(n, k);
            for (int t = 0; t < 20; ++t) {
                const EdgeSet& T = tris[rng() % tris.size()];
                WeightVector v = separation_vector(random_positive_w(n, relevant_part(T, k), rng));
                CHECK(in_pv_plus(v, k));
                CHECK(is_balanced(TropicalWeights(v), k));
                for (const auto& U : subsets(n, 2 * k + 2)) CHECK(second_max_is_swap(v, k, U));
                WeightVector bad = separation_vector(random_positive_w(n, crossing_support(n, k, rng), rng));
                CHECK_FALSE(in_pv_plus(bad, k));
            }
        }
}

TEST_CASE("PV+ single relevant edge") {
    for (const Edge& e : relevant_edges(7, 2)) CHECK(in_pv_plus(WeightVector::unit(7, Basis::W, e), 2));
}

TEST_CASE("k=1 prevariety on fp-positive vectors is the crossing-free support condition") {
    std::mt19937_64 rng(6);
    for (int n = 5; n <= 7; ++n)
        for (int t = 0; t < 40; ++t) {
            std::vector<Edge> s;
            for (const Edge& e : relevant_edges(n, 1))
                if (rng() % 3 == 0) s.push_back(e);
            WeightVector v = separation_vector(random_positive_w(n, s, rng));
            CHECK(in_prevariety(TropicalWeights(v), 1) == is_k_free(EdgeSet(n, s), 1));
        }
}

TEST_CASE("second_max_is_swap on lineality and the four-point example") {
    for (const auto& l : lineality_basis(7))
        for (const auto& U : subsets(7, 6)) CHECK(second_max_is_swap(l, 2, U));
    WeightVector v = separation_vector(WeightVector::unit(4, Basis::W, {1, 3}));
    CHECK(second_max_is_swap(v, 1, {1, 2, 3, 4}));
    CHECK_THROWS_AS(second_max_is_swap(v, 1, {1, 2}), Error);
}

TEST_CASE("is_balanced detects a unique maximum") {
    WeightVector v = WeightVector::unit(6, Basis::V, {1, 4});
    v.at({2, 5}) = 1;
    v.at({3, 6}) = 1;
    CHECK_FALSE(is_balanced(TropicalWeights(v), 2));
}

TEST_CASE("tropical determinant") {
    auto d = tropical_determinant(from_ints({{0, 0}, {0, 0}}));
    CHECK(d.value == TropicalScalar(Rational(0)));
    CHECK(d.tie);
    TropicalMatrix m(2, 2);
    m.at(0, 0) = Rational(0);
    m.at(1, 1) = Rational(0);
    d = tropical_determinant(m);
    CHECK(d.value == TropicalScalar(Rational(0)));
    CHECK_FALSE(d.tie);
    d = tropical_determinant(from_ints({{0, 1}, {1, 0}}));
    CHECK(d.value == TropicalScalar(Rational(2)));
    CHECK_FALSE(d.tie);
    d = tropical_determinant(TropicalMatrix(3, 3));
    CHECK(d.value.bottom);
    CHECK(d.tie);
    CHECK_THROWS_AS(tropical_determinant(TropicalMatrix(2, 3)), Error);
}

TEST_CASE("tropical rank") {
    CHECK(tropical_rank(from_ints({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}})) == 1);
    TropicalMatrix id(4, 4);
    for (int t = 0; t < 4; ++t) id.at(t, t) = Rational(0);
    CHECK(tropical_rank(id) == 4);
    CHECK(tropical_rank(from_ints({{0, 0}, {0, 0}})) == 1);
}

TEST_CASE("tropical rank properties") {
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<int> d(-9, 9);
    for (int t = 0; t < 30; ++t) {
        int r = 2 + t % 3, c = 2 + (t / 3) % 4;
        TropicalMatrix m(r, c);
        for (auto& e : m.entries) e = Rational(d(rng));
        int rk = tropical_rank(m);
        CHECK(rk <= std::min(r, c));
        TropicalMatrix s = m;
        int row = static_cast<int>(rng() % r);
        Rational shift(d(rng));
        for (int cc = 0; cc < c; ++cc) s.at(row, cc) = ttimes(s.at(row, cc), shift);
        int col = static_cast<int>(rng() % c);
        for (int rr = 0; rr < r; ++rr) s.at(rr, col) = ttimes(s.at(rr, col), Rational(5));
        CHECK(tropical_rank(s) == rk);
        TropicalMatrix low = random_low_rank(r + 1, c + 1, 1, rng);
        CHECK(tropical_rank(low) == 1);
    }
}

TEST_CASE("sym construction") {
    TropicalWeights v = sym_construction(from_ints({{0}}), Rational(5));
    CHECK(v.n == 2);
    CHECK(v.at({1, 2}) == TropicalScalar(Rational(0)));
    v = sym_construction(from_ints({{0, 0}, {0, 0}}), Rational(10));
    REQUIRE(v.n == 4);
    for (Edge e : std::vector<Edge>{{1, 3}, {1, 4}, {2, 3}, {2, 4}}) CHECK(v.at(e) == TropicalScalar(Rational(0)));
    CHECK(v.at({1, 2}) == TropicalScalar(Rational(-10)));
    CHECK(v.at({3, 4}) == TropicalScalar(Rational(-10)));
    v = sym_construction(from_ints({{1, 2, 3}, {4, 5, 6}}), std::nullopt);
    CHECK(v.at({1, 2}).bottom);
    CHECK(v.at({3, 4}).bottom);
    CHECK(v.at({1, 3}) == TropicalScalar(Rational(1)));
    CHECK(v.at({2, 5}) == TropicalScalar(Rational(6)));
    // Off-block entries follow the first column / first row of M.
    v = sym_construction(from_ints({{1, 2}, {4, 7}, {0, 3}}), Rational(20));
    CHECK(v.at({1, 2}) == TropicalScalar(Rational(1 + 4 - 20)));
    CHECK(v.at({4, 5}) == TropicalScalar(Rational(1 + 2 - 20)));
}

TEST_CASE("choose_K") {
    CHECK(choose_K(from_ints({{0, 0}, {0, 0}}), 1) == 9);
    TropicalMatrix m = from_ints({{3, -1, 2}, {0, 4, -2}, {1, 1, 1}});
    Rational base = choose_K(m, 2);
    TropicalMatrix scaled = m;
    for (auto& e : scaled.entries) e = Rational(e.value * 5);
    CHECK(choose_K(scaled, 2) <= 5 * base * 2);
}

TEST_CASE("sym construction detects tropical rank") {
    std::mt19937_64 rng(10);
    std::uniform_int_distribution<int> d(-15, 15);
    for (int t = 0; t < 10; ++t) {
        for (int k = 1; k <= 2; ++k) {
            int r = k + 1 + t % 2, c = k + 1 + (t / 2) % 2;
            if (r + c < 2 * k + 2) continue;
            TropicalMatrix low = random_low_rank(r, c, k, rng);
            REQUIRE(tropical_rank(low) <= k);
            CHECK(in_prevariety(sym_construction(low, choose_K(low, k)), k));
            TropicalMatrix m(r, c);
            for (auto& e : m.entries) e = Rational(d(rng));
            bool low_rank = tropical_rank(m) <= k;
            CHECK(in_prevariety(sym_construction(m, choose_K(m, k)), k) == low_rank);
        }
    }
}

TEST_CASE("all 77 listed rays of PV_2(7) lie in the prevariety") {
    int n = 7, count = 0;
    for (const Edge& e : all_edges(n))
        for (int s : {1, -1}) {
            CHECK(in_prevariety(TropicalWeights(WeightVector::unit(n, Basis::V, e, s)), 2));
            ++count;
        }
    for (const auto& tri : subsets(n, 3)) {
        WeightVector v(n, Basis::V);
        v.at({tri[0], tri[1]}) = 1;
        v.at({tri[0], tri[2]}) = 1;
        v.at({tri[1], tri[2]}) = 1;
        CHECK(in_prevariety(TropicalWeights(v), 2));
        ++count;
    }
    CHECK(count == 77);
}
