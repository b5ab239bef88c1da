#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "kassoc/combinatorics.hpp"
#include "kassoc/rational.hpp"

namespace kassoc {

// V: one coordinate per pair of polygon sides (side a joins vertices a-1 and a).
// W: one coordinate per pair of vertices.
enum class Basis { V, W };
std::string to_string(Basis b);

struct WeightVector {
    int n = 0;
    Basis basis = Basis::V;
    std::vector<Rational> x;  // indexed by edge_index

    WeightVector() = default;
    WeightVector(int n, Basis basis);

    static WeightVector unit(int n, Basis basis, const Edge& e, const Rational& value = 1);

    const Rational& at(const Edge& e) const { return x[edge_index(e, n)]; }
    Rational& at(const Edge& e) { return x[edge_index(e, n)]; }
    bool is_zero() const;
    bool operator==(const WeightVector&) const = default;
};

WeightVector operator+(const WeightVector& a, const WeightVector& b);
WeightVector operator-(const WeightVector& a, const WeightVector& b);
WeightVector operator-(const WeightVector& a);
WeightVector operator*(const Rational& c, const WeightVector& a);

WeightVector separation_vector(const WeightVector& w);
WeightVector inverse_separation(const WeightVector& v);
WeightVector to_v(const WeightVector& u);
WeightVector to_w(const WeightVector& u);

// Sum of v over the pairs of a matching.
Rational matching_weight(const WeightVector& v, const std::vector<Edge>& pairs);

bool is_fp_positive(const WeightVector& v);

struct FormLabel {
    enum class Kind { Long, Short, Cycle };
    Kind kind = Kind::Long;
    Edge edge{};
    std::string cycle;  // e.g. "13+24-12-34" for cycle forms
};
std::string to_string(const FormLabel& l);

struct LinearForm {
    int n = 0;
    Basis basis = Basis::W;
    std::vector<Rational> coeffs;  // indexed by edge_index
    FormLabel label;

    Rational evaluate(const WeightVector& u) const;
};

struct LabeledRay {
    Edge label;
    WeightVector ray;  // basis as stored: W units for long labels, V units otherwise
};

struct ConeDescription {
    int n = 0;
    int k = 0;
    std::vector<WeightVector> lineality;
    std::vector<LabeledRay> rays;
    std::vector<LinearForm> facets;
};

// Vertex-star indicators in the V basis; a basis of L_n.
std::vector<WeightVector> lineality_basis(int n);

ConeDescription grobner_cone(int n, int k);
bool in_grobner_cone(const WeightVector& v, int k);
std::vector<LinearForm> violated_facets(const WeightVector& v, int k);
EdgeSet cone_face_of(const WeightVector& v, int k);

std::vector<LinearForm> cycle_inequalities(int n, int k);
bool in_grobner_cone_by_cycles(const WeightVector& v, int k);
// For n = 2k+2: the cycle forms that induce facets, each certified by a
// point violating it alone.
std::vector<LinearForm> facet_inducing_cycle_forms(int n, int k);

// Integer weights uniform in [1, 2^20] on the given edges, W basis.
WeightVector random_positive_w(int n, const std::vector<Edge>& support, std::mt19937_64& rng);

}  // namespace kassoc
