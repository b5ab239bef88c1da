#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "kassoc/combinatorics.hpp"
#include "kassoc/coords.hpp"
#include "kassoc/linalg.hpp"
#include "kassoc/rational.hpp"

namespace kassoc {

struct AntisymmetricMatrix {
    int n = 0;
    std::vector<Rational> upper;  // indexed by edge_index

    AntisymmetricMatrix() = default;
    explicit AntisymmetricMatrix(int n);

    // Signed access for any i != j; zero on the diagonal.
    Rational get(int i, int j) const;
    void set(int i, int j, const Rational& q);
    Matrix dense() const;
    bool operator==(const AntisymmetricMatrix&) const = default;
};

Rational pfaffian(const AntisymmetricMatrix& a);
Rational pfaffian_by_matchings(const AntisymmetricMatrix& a);
// Pfaffian of the principal submatrix on U (any even subset, sorted internally).
Rational sub_pfaffian(const AntisymmetricMatrix& a, const std::vector<int>& U);

using Monomial = std::vector<Edge>;  // sorted multiset of variables x_ij

struct SparsePolynomial {
    std::map<Monomial, Rational> terms;

    void add(const Monomial& m, const Rational& c);
    bool is_zero() const { return terms.empty(); }
    Rational evaluate_at_ones() const;
    std::string to_string() const;
};

Monomial monomial_product(const Monomial& a, const Monomial& b);
SparsePolynomial operator-(const SparsePolynomial& a, const SparsePolynomial& b);
SparsePolynomial multiply(const SparsePolynomial& p, const Monomial& m, const Rational& c);
Rational monomial_weight(const WeightVector& v, const Monomial& m);
// Terms of maximum v-weight.
SparsePolynomial initial_form(const SparsePolynomial& p, const WeightVector& v);

SparsePolynomial pfaffian_polynomial(const std::vector<int>& U);
SparsePolynomial pfaffian_initial_form(const WeightVector& v, const std::vector<int>& U);

bool s_polynomial_leading_check(const WeightVector& v, const std::vector<int>& U1, const std::vector<int>& U2,
                                int k);

struct UgbCertificate {
    int n = 9;
    std::vector<std::pair<Edge, Rational>> weights;
    Monomial in_f, in_g, in_h;
    Rational weight_in_h;
    Rational coefficient_in_h;
    int subsets_scanned = 0;
    int dividing_subsets = 0;
};
UgbCertificate ugb_counterexample();

AntisymmetricMatrix parametrize(const std::vector<Vector>& a, const std::vector<Vector>& b);

struct PointConfiguration {
    int dim = 0;
    std::vector<Vector> points;
};
Matrix hyperconnectivity_matrix(const PointConfiguration& p);

struct MatroidRankReport {
    std::size_t rank = 0;
    int trials_run = 0;
    bool probabilistic = true;  // a lower bound for the generic rank
};
MatroidRankReport matroid_rank(const EdgeSet& S, int k, int trials, std::mt19937_64& rng);

AntisymmetricMatrix complete_band(const std::map<Edge, Rational>& known, int n, int k);
bool in_band(const Edge& e, int k);

}  // namespace kassoc
