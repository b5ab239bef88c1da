#include <doctest.h>

#include <random>

#include "kassoc/json_io.hpp"

using namespace kassoc;

TEST_CASE("malformed JSON reports a location") {
    CHECK_THROWS_WITH_AS(parse_json_text("{\"n\": 4,, }", "x.json"), doctest::Contains("x.json: malformed JSON at byte"),
                         JsonError);
    CHECK_THROWS_WITH_AS(read_json_file("/nonexistent/file.json"), doctest::Contains("cannot open"), JsonError);
}

TEST_CASE("EdgeSet round trip in both index bases") {
    EdgeSet s(7, {{1, 3}, {2, 5}, {4, 7}});
    for (int base : {0, 1}) {
        json j = to_json(s, base);
        CHECK(edgeset_from_json(j, base) == s);
        CHECK(edgeset_from_json(parse_json_text(j.dump()), base) == s);
    }
    CHECK(to_json(s, 0)["edges"][0] == json::array({0, 2}));
    CHECK(to_json(s, 1)["edges"][0] == json::array({1, 3}));
}

TEST_CASE("EdgeSet schema errors") {
    CHECK_THROWS_WITH_AS(edgeset_from_json(parse_json_text(R"({"edges": []})")), doctest::Contains("missing field 'n'"),
                         JsonError);
    CHECK_THROWS_WITH_AS(edgeset_from_json(parse_json_text(R"({"n": 4, "edges": [[1, 5]]})")),
                         doctest::Contains("out of range"), JsonError);
    CHECK_THROWS_AS(edgeset_from_json(parse_json_text(R"({"n": 4, "edges": [[1]]})")), JsonError);
    CHECK_THROWS_AS(edgeset_from_json(parse_json_text(R"({"n": 4, "edges": {}})")), JsonError);
}

TEST_CASE("WeightVector round trip is lossless") {
    std::mt19937_64 rng(1);
    for (int n = 3; n <= 9; ++n) {
        WeightVector v(n, n % 2 ? Basis::V : Basis::W);
        for (auto& q : v.x) {
            q = Rational(static_cast<long>(rng() % 2001) - 1000, static_cast<long>(rng() % 97) + 1);
            q.canonicalize();
        }
        for (int base : {0, 1}) CHECK(weightvector_from_json(parse_json_text(to_json(v, base).dump()), base) == v);
    }
}

TEST_CASE("WeightVector parsing") {
    WeightVector v = weightvector_from_json(parse_json_text(R"({"n": 5, "basis": "w", "entries": {"1,3": "5/2", "2,4": 3, "1,2": "-1/3"}})"));
    CHECK(v.basis == Basis::W);
    CHECK(v.at({1, 3}) == Rational(5, 2));
    CHECK(v.at({2, 4}) == 3);
    CHECK(v.at({1, 2}) == Rational(-1, 3));
    CHECK(v.at({3, 5}) == 0);
    CHECK_THROWS_WITH_AS(weightvector_from_json(parse_json_text(R"({"n": 5, "basis": "x", "entries": {}})")),
                         doctest::Contains("basis"), JsonError);
    CHECK_THROWS_WITH_AS(weightvector_from_json(parse_json_text(R"({"n": 5, "basis": "v", "entries": {"1,3": "a/b"}})")),
                         doctest::Contains("1,3"), JsonError);
    CHECK_THROWS_AS(weightvector_from_json(parse_json_text(R"({"n": 5, "basis": "v", "entries": {"13": "1"}})")),
                    JsonError);
    CHECK_THROWS_AS(weightvector_from_json(parse_json_text(R"({"n": 5, "basis": "v", "entries": {"1,6": "1"}})")),
                    JsonError);
}

TEST_CASE("tropical weights accept -inf only in the v basis") {
    TropicalWeights t =
        tropical_weights_from_json(parse_json_text(R"({"n": 4, "basis": "v", "entries": {"1,2": "-inf", "3,4": "2"}})"));
    CHECK(t.at({1, 2}).bottom);
    CHECK(t.at({3, 4}) == TropicalScalar(Rational(2)));
    CHECK(t.at({1, 3}) == TropicalScalar(Rational(0)));
    CHECK(tropical_weights_from_json(to_json(t)).x == t.x);
    CHECK_THROWS_AS(
        tropical_weights_from_json(parse_json_text(R"({"n": 4, "basis": "w", "entries": {"1,2": "-inf"}})")),
        JsonError);
}

TEST_CASE("TropicalMatrix round trip") {
    json j = parse_json_text(R"({"rows": 2, "cols": 3, "entries": [["0", "-inf", "1/2"], [4, "-3", "7/9"]]})");
    TropicalMatrix m = tropical_matrix_from_json(j);
    CHECK(m.at(0, 1).bottom);
    CHECK(m.at(0, 2) == TropicalScalar(Rational(1, 2)));
    CHECK(m.at(1, 0) == TropicalScalar(Rational(4)));
    TropicalMatrix back = tropical_matrix_from_json(to_json(m));
    CHECK(back.entries == m.entries);
    CHECK_THROWS_AS(tropical_matrix_from_json(parse_json_text(R"({"rows": 2, "cols": 2, "entries": [["0", "1"]]})")),
                    JsonError);
}

TEST_CASE("AntisymmetricMatrix round trip") {
    AntisymmetricMatrix a(5);
    for (std::size_t t = 0; t < a.upper.size(); ++t) {
        a.upper[t] = Rational(static_cast<long>(t) - 4, 3);
        a.upper[t].canonicalize();
    }
    for (int base : {0, 1}) CHECK(antisymmetric_from_json(parse_json_text(to_json(a, base).dump()), base) == a);
}

TEST_CASE("report serializers") {
    json c = to_json(grobner_cone(7, 2));
    CHECK(c["facets"].size() == 14);
    CHECK(c["rays"].size() == 14);
    CHECK(c["lineality"].size() == 7);
    json u = to_json(ugb_counterexample());
    CHECK(u["in_h"] == parse_json_text("[[1,2],[3,4],[4,7],[5,8],[6,9]]"));
    CHECK(u["in_h_weight"] == "8");
    EdgeSet T = normalize_triangulation(EdgeSet(5, {{1, 3}, {1, 4}}));
    json f = to_json(build_fan(T));
    CHECK(f["rays"].size() == 5);
    json p = to_json(associahedron_polytope(T));
    CHECK(p["vertices"].size() == 5);
    json r = to_json(validate_fan(build_fan(T), T));
    CHECK(r["circuits"].size() == 5);
}
