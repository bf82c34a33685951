#pragma once

#include <string>
#include <vector>

namespace hlag {

// An edge is a strictly increasing tuple of 1-based vertices.
using Edge = std::vector<int>;

// r-uniform hypergraph on vertex set {1..n}. Edges are kept colex-sorted and
// duplicate-free; construct through make_graph so the invariants hold.
struct UniformHypergraph {
    int r = 0;
    int n = 0;
    std::vector<Edge> edges;

    bool has_edge(const Edge& e) const;
    std::size_t m() const { return edges.size(); }
};

// Anchor-excluding neighborhoods: arity r-1 for a vertex link, r-2 for a pair
// link. Sets never contain the anchor vertices.
struct Link {
    int arity = 0;
    std::vector<std::vector<int>> sets;
};

bool operator==(const UniformHypergraph& a, const UniformHypergraph& b);

// Validates and canonicalizes (sorts colex, rejects duplicates / bad tuples).
UniformHypergraph make_graph(int r, int n, std::vector<Edge> edges);

// Complete r-graph on {1..t}.
UniformHypergraph complete_graph(int t, int r);

// Strict colex order: A < B iff max(A Δ B) lies in B. Equivalently the
// reversed tuples compare lexicographically. Throws on arity mismatch.
bool colex_less(const Edge& a, const Edge& b);

// Rank of an r-set in the colex enumeration of all r-sets of positive
// integers, 0-based: sum of C(a_i - 1, i) over positions.
long long colex_rank(const Edge& e);

// The m colex-smallest r-sets, on the minimal vertex set containing them.
UniformHypergraph colex_first_m(int r, long long m);

UniformHypergraph complement(const UniformHypergraph& g);

Link link(const UniformHypergraph& g, int i);
Link pair_link(const UniformHypergraph& g, int i, int j);

// E_i restricted to sets missing j that do not extend to an edge through j:
// sets A with A+{i} an edge, A+{j} not; sets containing i or j are excluded.
Link diff_link(const UniformHypergraph& g, int i, int j);

bool is_left_compressed(const UniformHypergraph& g);

// Repeatedly replaces the colex-largest edge that admits a coordinatewise
// smaller non-edge by the colex-smallest such non-edge. Edge count is
// preserved and the result is left-compressed.
UniformHypergraph left_compress(const UniformHypergraph& g);

// Largest t with some t-subset inducing all C(t,r) edges. Edgeless graphs
// report min(n, r-1): every (r-1)-set is vacuously complete.
int max_clique_order(const UniformHypergraph& g);

bool contains_complete_subgraph(const UniformHypergraph& g, int t);

// Maximal classes of vertices whose links agree outside the pair.
std::vector<std::vector<int>> equivalent_classes(const UniformHypergraph& g);

std::vector<Edge> all_r_subsets(int n, int r);

}  // namespace hlag
