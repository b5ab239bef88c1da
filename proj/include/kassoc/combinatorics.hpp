#pragma once

#include <compare>
#include <functional>
#include <string>
#include <vector>

namespace kassoc {

// Vertices are 1..n on a circle; an edge is stored with i < j.
struct Edge {
    int i = 0;
    int j = 0;
    auto operator<=>(const Edge&) const = default;
};

Edge make_edge(int a, int b);
std::string to_string(const Edge& e);

int cyclic_length(const Edge& e, int n);
bool is_relevant(const Edge& e, int n, int k);

int num_edges(int n);
// Lexicographic position of e among all C(n,2) edges.
int edge_index(const Edge& e, int n);
Edge edge_at(int index, int n);
std::vector<Edge> all_edges(int n);
std::vector<Edge> relevant_edges(int n, int k);
std::vector<Edge> irrelevant_edges(int n, int k);

struct EdgeSet {
    int n = 0;
    std::vector<Edge> edges;  // sorted, no duplicates

    EdgeSet() = default;
    EdgeSet(int n, std::vector<Edge> edges);

    bool contains(const Edge& e) const;
    std::size_t size() const { return edges.size(); }
    bool operator==(const EdgeSet&) const = default;
};

bool crosses(const Edge& e, const Edge& f);
int max_crossing_size(const std::vector<Edge>& g);
int max_crossing_size(const EdgeSet& g);
// True iff g contains s pairwise crossing edges.
bool has_crossing_of_size(const std::vector<Edge>& g, int s);
bool is_k_free(const EdgeSet& g, int k);
// All s-subsets of g that pairwise cross, each sorted, in lexicographic order.
std::vector<std::vector<Edge>> crossings_of_size(const std::vector<Edge>& g, int s);

enum class Parity { Even, Odd };
std::string to_string(Parity p);

struct Matching {
    std::vector<int> ground;  // sorted
    std::vector<Edge> pairs;  // sorted
    bool operator==(const Matching&) const = default;
};

int crossing_count(const std::vector<Edge>& pairs);
Parity parity(const Matching& m);

// Every perfect matching of U, lexicographic in the sorted pair list.
void for_each_matching(const std::vector<int>& U, const std::function<void(const std::vector<Edge>&)>& fn);
std::vector<Matching> matchings(const std::vector<int>& U);
long long double_factorial_count(int size);

// Replaces e, f by one of the two other matchings of their endpoints
// (variant 1 or 2, in lexicographic order of the resulting pair lists).
Matching swap(const Matching& m, const Edge& e, const Edge& f, int variant);

// The unique crossing perfect matching {u_i, u_{i+m}} of U, |U| = 2m.
std::vector<Edge> crossing_matching(const std::vector<int>& U);

std::size_t k_triangulation_size(int n, int k);
void for_each_k_triangulation(int n, int k, const std::function<void(const EdgeSet&)>& fn);
std::vector<EdgeSet> enumerate_k_triangulations(int n, int k);

// Accordion from E to F inside the k-triangulation T.
std::vector<Edge> accordion(const EdgeSet& T, int k, const Edge& E, const Edge& F);
bool is_accordion(const std::vector<Edge>& seq);

// All subsets of {1..n} of the given size, lexicographic.
std::vector<std::vector<int>> subsets(int n, int size);

}  // namespace kassoc
