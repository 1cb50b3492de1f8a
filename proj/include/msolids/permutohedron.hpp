#pragma once

#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "msolids/bigint.hpp"

namespace msolids::perm {

// Vertices of the n-permutohedron are the (n+1)! permutations of {1..n+1},
// always listed in lexicographic order. A vertex index is the lex rank.
using Vector = std::vector<int>;

// Explicit vertex/edge/facet objects are only materialized up to this n.
constexpr int kMaxExplicitN = 8;

std::vector<Vector> vertices(int n);

// Undirected skeleton edges (i, j) with i < j, sorted. Two vertices are
// adjacent iff they differ by swapping the positions of two consecutive
// values k, k+1.
std::vector<std::pair<int, int>> skeleton(int n);

// One facet per proper nonempty subset S of coordinate positions {0..n}:
// the vertices whose positions in S hold the top |S| values. Facets are
// ordered by ascending subset bitmask.
struct Facet {
    std::vector<int> subset;      // positions, ascending
    std::vector<int> vertex_ids;  // lex ranks, ascending
};
std::vector<Facet> facets(int n);

// Stirling number of the second kind, S(m, k).
BigInt stirling2(long m, long k);

// Number of k-dimensional faces of the n-permutohedron:
// (n - k + 1)! * S(n+1, n+1-k).
BigInt face_count(long n, long k);

// Cayley graph of S_{n+1} with adjacent transpositions s_1..s_n as
// generators: directed edge g -> g*s_i for every node g. Right
// multiplication by s_i swaps positions i-1, i of the one-line form.
struct CayleyGraph {
    int n = 0;
    long node_count = 0;
    struct Edge {
        int from;
        int to;
        int generator;  // i in 1..n
    };
    std::vector<Edge> edges;  // ordered by (from, generator)
};
CayleyGraph cayley_graph(int n);

// Bijection phi from skeleton vertices to Cayley nodes under which the two
// undirected edge sets coincide, verified edge by edge. The skeleton swaps
// consecutive values (left multiplication) while the Cayley graph multiplies
// on the right, so inversion is the natural candidate.
std::optional<std::vector<int>> skeleton_matches_cayley(int n);

// DOT export: nodes named by one-line strings ("2134"), deterministic
// lexicographic emission, edges labeled with the generator index.
void write_cayley_dot(std::ostream& os, const CayleyGraph& g);

}  // namespace msolids::perm
