#include "hlag/poset.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hlag {

bool colex_less_triple(const Triple& a, const Triple& b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

TriplePoset make_triple_poset(int l) {
    if (l < 3) throw std::invalid_argument("make_triple_poset: l < 3");
    TriplePoset p;
    p.l = l;
    for (int a = 1; a <= l; ++a)
        for (int b = a + 1; b <= l; ++b)
            for (int c = b + 1; c <= l; ++c) p.elements.push_back({a, b, c});
    std::sort(p.elements.begin(), p.elements.end(), colex_less_triple);
    return p;
}

bool is_ancestor(const Triple& a, const Triple& b) {
    return a[0] >= b[0] && a[1] >= b[1] && a[2] >= b[2] &&
           a[0] + a[1] + a[2] > b[0] + b[1] + b[2];
}

bool is_direct_ancestor(const Triple& a, const Triple& b) {
    return a[0] >= b[0] && a[1] >= b[1] && a[2] >= b[2] &&
           a[0] + a[1] + a[2] == b[0] + b[1] + b[2] + 1;
}

std::vector<Triple> direct_ancestors(const Triple& t, int l) {
    std::vector<Triple> out;
    for (int k = 0; k < 3; ++k) {
        Triple u = t;
        u[k] += 1;
        if (u[k] > l) continue;
        if (k < 2 && u[k] >= u[k + 1]) continue;
        out.push_back(u);
    }
    return out;
}

bool is_up_closed(const UpClosedSet& h) {
    std::set<Triple> members(h.triples.begin(), h.triples.end());
    for (const Triple& t : h.triples)
        for (const Triple& u : direct_ancestors(t, h.l))
            if (!members.count(u)) return false;
    return true;
}

UpClosedSet forced_seed(int l) {
    if (l < 7) throw std::invalid_argument("forced_seed: needs l >= 7");
    UpClosedSet h;
    h.l = l;
    h.triples = {{l - 2, l - 1, l},
                 {l - 3, l - 1, l},
                 {l - 3, l - 2, l},
                 {l - 3, l - 2, l - 1},
                 {l - 4, l - 1, l}};
    std::sort(h.triples.begin(), h.triples.end(), colex_less_triple);
    return h;
}

std::vector<UpClosedSet> enumerate_up_closed(int l, int target_size) {
    if (l < 7) throw std::invalid_argument("enumerate_up_closed: needs l >= 7");
    if (target_size < 5) throw std::invalid_argument("enumerate_up_closed: target_size < 5");

    std::vector<Triple> all;
    for (const Triple& t : make_triple_poset(l).elements) all.push_back(t);

    using Canon = std::vector<Triple>;  // colex-sorted member list
    std::set<Canon> frontier{forced_seed(l).triples};
    for (int size = 5; size < target_size; ++size) {
        std::set<Canon> next;
        for (const Canon& h : frontier) {
            std::set<Triple> members(h.begin(), h.end());
            for (const Triple& t : all) {
                if (members.count(t)) continue;
                bool ok = true;
                for (const Triple& u : direct_ancestors(t, l)) {
                    if (!members.count(u)) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) continue;
                Canon grown = h;
                grown.insert(
                    std::upper_bound(grown.begin(), grown.end(), t, colex_less_triple), t);
                next.insert(std::move(grown));
            }
        }
        frontier = std::move(next);
    }

    std::vector<UpClosedSet> out;
    for (const Canon& h : frontier) {
        UpClosedSet s;
        s.l = l;
        s.triples = h;
        out.push_back(std::move(s));
    }
    // deterministic order: compare canonical lists element by element in colex
    std::sort(out.begin(), out.end(), [](const UpClosedSet& a, const UpClosedSet& b) {
        return std::lexicographical_compare(a.triples.begin(), a.triples.end(),
                                            b.triples.begin(), b.triples.end(),
                                            colex_less_triple);
    });
    return out;
}

std::vector<UniformHypergraph> enumerate_candidates(int l) {
    if (l < 6) throw std::invalid_argument("enumerate_candidates: needs l >= 6");
    std::vector<UniformHypergraph> out;
    if (l == 6) {
        // the seed formula needs l - 4 distinct from the top entries; at l = 6
        // the unique complement is the up-closure of 345
        std::vector<Edge> removed = {{3, 4, 5}, {3, 4, 6}, {3, 5, 6}, {4, 5, 6}};
        std::vector<Edge> edges;
        for (const Edge& e : all_r_subsets(6, 3)) {
            if (std::find(removed.begin(), removed.end(), e) == removed.end()) edges.push_back(e);
        }
        out.push_back(make_graph(3, 6, std::move(edges)));
        return out;
    }
    for (const UpClosedSet& h : enumerate_up_closed(l, l - 2)) {
        std::set<Edge> drop;
        for (const Triple& t : h.triples) drop.insert(Edge{t[0], t[1], t[2]});
        std::vector<Edge> edges;
        for (const Edge& e : all_r_subsets(l, 3))
            if (!drop.count(e)) edges.push_back(e);
        out.push_back(make_graph(3, l, std::move(edges)));
    }
    return out;
}

}  // namespace hlag
