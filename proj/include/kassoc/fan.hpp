#pragma once

#include <string>
#include <vector>

#include "kassoc/combinatorics.hpp"
#include "kassoc/coords.hpp"
#include "kassoc/linalg.hpp"

namespace kassoc {

// Adds the boundary edges and checks that T triangulates the n-gon.
EdgeSet normalize_triangulation(const EdgeSet& T);
bool is_triangulation(const EdgeSet& T);
// Edges of cyclic length >= 2, lexicographic.
std::vector<Edge> diagonals(const EdgeSet& T);

// Sign of the segment joining sides a and b of the polygon (e = {a,b})
// against the quadrilateral of T around the diagonal delta.
int crossing_sign(const EdgeSet& T, const Edge& delta, const Edge& e);

struct GVector {
    std::vector<Edge> diagonals;
    std::vector<int> coords;
};
GVector g_vector(const EdgeSet& T, const Edge& e);

// Coordinates kept for T: the side pair {a+1, b+1} of each edge {a,b} of T.
std::vector<Edge> projection_coordinates(const EdgeSet& T);
Vector project(const WeightVector& v, const EdgeSet& T);
// Same map without the PV+ membership check.
Vector project_linear(const WeightVector& v, const EdgeSet& T);

struct FanDescription {
    int dim = 0;
    std::vector<std::vector<int>> rays;
    std::vector<Edge> ray_labels;
    std::vector<std::vector<int>> cones;  // sorted ray indices
    std::vector<EdgeSet> cone_triangulations;
};
FanDescription build_fan(const EdgeSet& T);

Rational rhs_b(const Edge& e, int n);

struct FlipCircuit {
    int cone_a = 0;
    int cone_b = 0;
    Edge removed{};
    Edge added{};
    std::vector<std::pair<Edge, Rational>> coefficients;  // over the n-2 involved rays
    Rational rhs_sum;
};

struct FanReport {
    std::vector<FlipCircuit> circuits;
    bool exchange_signs_ok = true;
    bool rhs_positive = true;
};
FanReport validate_fan(const FanDescription& F, const EdgeSet& T);

struct PolytopeH {
    int dim = 0;
    std::vector<Edge> labels;
    std::vector<std::vector<int>> normals;
    std::vector<Rational> rhs;
    std::vector<Vector> vertices;
    std::vector<EdgeSet> vertex_triangulations;
    std::vector<std::pair<Edge, Edge>> parallel_pairs;
};
PolytopeH associahedron_polytope(const EdgeSet& T);
// OFF text for three-dimensional polytopes (n = 6).
std::string to_off(const PolytopeH& P);

}  // namespace kassoc
