#pragma once

#include <optional>
#include <random>
#include <vector>

#include "kassoc/combinatorics.hpp"
#include "kassoc/coords.hpp"
#include "kassoc/rational.hpp"

namespace kassoc {

// An element of the max-plus semiring: a rational or bottom (-inf).
struct TropicalScalar {
    bool bottom = true;
    Rational value = 0;

    TropicalScalar() = default;
    TropicalScalar(const Rational& q) : bottom(false), value(q) {}  // NOLINT
    static TropicalScalar neg_inf() { return TropicalScalar(); }

    bool operator==(const TropicalScalar& o) const { return bottom == o.bottom && (bottom || value == o.value); }
};

TropicalScalar tplus(const TropicalScalar& a, const TropicalScalar& b);   // max
TropicalScalar ttimes(const TropicalScalar& a, const TropicalScalar& b);  // +
bool tless(const TropicalScalar& a, const TropicalScalar& b);
std::string to_string(const TropicalScalar& s);
TropicalScalar parse_tropical(const std::string& s);

// V-basis weights that may contain bottom entries.
struct TropicalWeights {
    int n = 0;
    std::vector<TropicalScalar> x;  // indexed by edge_index

    TropicalWeights() = default;
    explicit TropicalWeights(int n);
    TropicalWeights(const WeightVector& v);  // NOLINT: converts to V basis

    const TropicalScalar& at(const Edge& e) const { return x[edge_index(e, n)]; }
    TropicalScalar& at(const Edge& e) { return x[edge_index(e, n)]; }
};

struct TropicalMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<TropicalScalar> entries;  // row-major

    TropicalMatrix() = default;
    TropicalMatrix(int rows, int cols);
    const TropicalScalar& at(int r, int c) const { return entries[r * cols + c]; }
    TropicalScalar& at(int r, int c) { return entries[r * cols + c]; }
};

struct WeightedMatching {
    Matching matching;
    Parity parity;
    TropicalScalar weight;
};

TropicalScalar matching_weight(const TropicalWeights& v, const std::vector<Edge>& pairs);
std::vector<WeightedMatching> max_matchings(const TropicalWeights& v, const std::vector<int>& U);

bool in_prevariety(const TropicalWeights& v, int k);
bool in_pv_plus(const WeightVector& v, int k);
bool second_max_is_swap(const WeightVector& v, int k, const std::vector<int>& U);
bool is_balanced(const TropicalWeights& v, int k);

struct TropicalDeterminant {
    TropicalScalar value;
    bool tie = false;
};
TropicalDeterminant tropical_determinant(const TropicalMatrix& m);
int tropical_rank(const TropicalMatrix& m);

// K = nullopt means K = +infinity.
TropicalWeights sym_construction(const TropicalMatrix& m, const std::optional<Rational>& K);
Rational choose_K(const TropicalMatrix& m, int k);

// Max-plus product of random integer n1 x k and k x n2 matrices.
TropicalMatrix random_low_rank(int rows, int cols, int k, std::mt19937_64& rng, long magnitude = 20);

}  // namespace kassoc
