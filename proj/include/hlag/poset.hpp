#pragma once

#include <array>
#include <vector>

#include "hlag/hypergraph.hpp"

namespace hlag {

using Triple = std::array<int, 3>;

// Coordinatewise dominance order on strictly increasing triples over [l].
struct TriplePoset {
    int l = 0;
    std::vector<Triple> elements;
};

// Triple set closed under coordinatewise increase within [l]; the complement
// side of a left-compressed graph. Triples kept colex-sorted.
struct UpClosedSet {
    int l = 0;
    std::vector<Triple> triples;
};

TriplePoset make_triple_poset(int l);

// a dominates b coordinatewise with strictly larger sum.
bool is_ancestor(const Triple& a, const Triple& b);

// Dominance with coordinate sum exactly one larger.
bool is_direct_ancestor(const Triple& a, const Triple& b);

// Triples obtained from t by raising one coordinate by 1, staying strictly
// increasing and within [l].
std::vector<Triple> direct_ancestors(const Triple& t, int l);

bool is_up_closed(const UpClosedSet& h);

bool colex_less_triple(const Triple& a, const Triple& b);

// The five-triple start every candidate complement must contain, l >= 7.
UpClosedSet forced_seed(int l);

// All up-closed triple sets of the target size containing the seed, grown one
// triple at a time (each addition has all its direct ancestors present).
// Output sorted by colex-sorted canonical form; deterministic.
std::vector<UpClosedSet> enumerate_up_closed(int l, int target_size);

// The candidate graphs on [l]: complements of the enumerated sets, plus the
// single hand-rooted case at l = 6.
std::vector<UniformHypergraph> enumerate_candidates(int l);

}  // namespace hlag
