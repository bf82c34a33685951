#include "hlag/hypergraph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

#include "hlag/rational.hpp"

namespace hlag {

bool colex_less(const Edge& a, const Edge& b) {
    if (a.size() != b.size()) throw std::invalid_argument("colex_less: arity mismatch");
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

bool UniformHypergraph::has_edge(const Edge& e) const {
    return std::binary_search(edges.begin(), edges.end(), e, colex_less);
}

bool operator==(const UniformHypergraph& a, const UniformHypergraph& b) {
    return a.r == b.r && a.n == b.n && a.edges == b.edges;
}

UniformHypergraph make_graph(int r, int n, std::vector<Edge> edges) {
    if (r < 2) throw std::invalid_argument("make_graph: r must be at least 2");
    if (n < 0) throw std::invalid_argument("make_graph: negative n");
    if (!edges.empty() && r > n)
        throw std::invalid_argument("make_graph: r exceeds n on a nonempty graph");
    for (const Edge& e : edges) {
        if (static_cast<int>(e.size()) != r)
            throw std::invalid_argument("make_graph: edge arity mismatch");
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] < 1 || e[k] > n) throw std::invalid_argument("make_graph: vertex out of range");
            if (k > 0 && e[k] <= e[k - 1])
                throw std::invalid_argument("make_graph: edge not strictly increasing");
        }
    }
    std::sort(edges.begin(), edges.end(), colex_less);
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("make_graph: duplicate edge");
    UniformHypergraph g;
    g.r = r;
    g.n = n;
    g.edges = std::move(edges);
    return g;
}

std::vector<Edge> all_r_subsets(int n, int r) {
    std::vector<Edge> out;
    if (r > n || r < 0) return out;
    Edge cur(r);
    std::iota(cur.begin(), cur.end(), 1);
    while (true) {
        out.push_back(cur);
        int i = r - 1;
        while (i >= 0 && cur[i] == n - (r - 1 - i)) --i;
        if (i < 0) break;
        ++cur[i];
        for (int k = i + 1; k < r; ++k) cur[k] = cur[k - 1] + 1;
    }
    return out;
}

UniformHypergraph complete_graph(int t, int r) {
    if (t < r) throw std::invalid_argument("complete_graph: t < r");
    return make_graph(r, t, all_r_subsets(t, r));
}

long long colex_rank(const Edge& e) {
    long long rank = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
        rank += binomial_ll(e[i] - 1, static_cast<int>(i) + 1);
    return rank;
}

UniformHypergraph colex_first_m(int r, long long m) {
    if (m < 0) throw std::invalid_argument("colex_first_m: negative m");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    int n = 0;
    for (long long k = 0; k < m; ++k) {
        // combinadic unranking: pick the largest a with C(a-1, i) <= remainder
        long long rem = k;
        Edge e(r);
        for (int i = r; i >= 1; --i) {
            int a = i;
            while (binomial_ll(a, i) <= rem) ++a;
            e[i - 1] = a;
            rem -= binomial_ll(a - 1, i);
        }
        n = std::max(n, e.back());
        edges.push_back(std::move(e));
    }
    return make_graph(r, n, std::move(edges));
}

UniformHypergraph complement(const UniformHypergraph& g) {
    std::vector<Edge> out;
    for (Edge& e : all_r_subsets(g.n, g.r)) {
        if (!g.has_edge(e)) out.push_back(std::move(e));
    }
    return make_graph(g.r, g.n, std::move(out));
}

namespace {

void check_vertex(const UniformHypergraph& g, int i) {
    if (i < 1 || i > g.n) throw std::invalid_argument("vertex out of range");
}

}  // namespace

Link link(const UniformHypergraph& g, int i) {
    check_vertex(g, i);
    Link out;
    out.arity = g.r - 1;
    for (const Edge& e : g.edges) {
        if (!std::binary_search(e.begin(), e.end(), i)) continue;
        std::vector<int> rest;
        for (int v : e)
            if (v != i) rest.push_back(v);
        out.sets.push_back(std::move(rest));
    }
    std::sort(out.sets.begin(), out.sets.end());
    return out;
}

Link pair_link(const UniformHypergraph& g, int i, int j) {
    check_vertex(g, i);
    check_vertex(g, j);
    if (i == j) throw std::invalid_argument("pair_link: equal vertices");
    Link out;
    out.arity = g.r - 2;
    for (const Edge& e : g.edges) {
        if (!std::binary_search(e.begin(), e.end(), i)) continue;
        if (!std::binary_search(e.begin(), e.end(), j)) continue;
        std::vector<int> rest;
        for (int v : e)
            if (v != i && v != j) rest.push_back(v);
        out.sets.push_back(std::move(rest));
    }
    std::sort(out.sets.begin(), out.sets.end());
    return out;
}

Link diff_link(const UniformHypergraph& g, int i, int j) {
    check_vertex(g, i);
    check_vertex(g, j);
    if (i == j) throw std::invalid_argument("diff_link: equal vertices");
    Link out;
    out.arity = g.r - 1;
    for (const Edge& e : g.edges) {
        if (!std::binary_search(e.begin(), e.end(), i)) continue;
        if (std::binary_search(e.begin(), e.end(), j)) continue;
        std::vector<int> rest;
        for (int v : e)
            if (v != i) rest.push_back(v);
        // A must avoid both anchors; A+{j} replaces i by j
        Edge with_j = rest;
        with_j.insert(std::lower_bound(with_j.begin(), with_j.end(), j), j);
        if (!g.has_edge(with_j)) out.sets.push_back(std::move(rest));
    }
    std::sort(out.sets.begin(), out.sets.end());
    return out;
}

namespace {

// Coordinatewise-dominated tuples are reachable through single-position
// decrements, so checking those suffices.
bool dominated_closed_at(const UniformHypergraph& g, const Edge& e) {
    for (std::size_t p = 0; p < e.size(); ++p) {
        int lo = (p == 0) ? 1 : e[p - 1] + 1;
        for (int v = lo; v < e[p]; ++v) {
            Edge f = e;
            f[p] = v;
            if (!g.has_edge(f)) return false;
        }
    }
    return true;
}

}  // namespace

bool is_left_compressed(const UniformHypergraph& g) {
    for (const Edge& e : g.edges)
        if (!dominated_closed_at(g, e)) return false;
    return true;
}

namespace {

// All strictly increasing tuples coordinatewise <= e, other than e itself.
void dominated_tuples(const Edge& e, std::vector<Edge>& out) {
    Edge cur(e.size());
    std::size_t r = e.size();
    std::function<void(std::size_t)> rec = [&](std::size_t p) {
        if (p == r) {
            if (cur != e) out.push_back(cur);
            return;
        }
        int lo = (p == 0) ? 1 : cur[p - 1] + 1;
        for (int v = lo; v <= e[p]; ++v) {
            cur[p] = v;
            rec(p + 1);
        }
    };
    rec(0);
}

}  // namespace

UniformHypergraph left_compress(const UniformHypergraph& g) {
    std::set<Edge, bool (*)(const Edge&, const Edge&)> cur(colex_less);
    for (const Edge& e : g.edges) cur.insert(e);
    while (true) {
        bool moved = false;
        // scan edges from colex-largest down, looking for a replacement
        for (auto it = cur.rbegin(); it != cur.rend(); ++it) {
            std::vector<Edge> doms;
            dominated_tuples(*it, doms);
            std::sort(doms.begin(), doms.end(), colex_less);
            const Edge* target = nullptr;
            for (const Edge& d : doms) {
                if (!cur.count(d)) {
                    target = &d;
                    break;
                }
            }
            if (target) {
                Edge add = *target;
                cur.erase(std::next(it).base());
                cur.insert(add);
                moved = true;
                break;
            }
        }
        if (!moved) break;
    }
    std::vector<Edge> out(cur.begin(), cur.end());
    return make_graph(g.r, g.n, std::move(out));
}

bool contains_complete_subgraph(const UniformHypergraph& g, int t) {
    if (t < g.r) throw std::invalid_argument("contains_complete_subgraph: t < r");
    if (t > g.n) return false;
    const std::vector<Edge> patterns = all_r_subsets(t, g.r);
    for (const Edge& s : all_r_subsets(g.n, t)) {  // t-subsets, reusing the generator
        bool ok = true;
        for (const Edge& e : patterns) {
            Edge mapped(g.r);
            for (int k = 0; k < g.r; ++k) mapped[k] = s[e[k] - 1];
            if (!g.has_edge(mapped)) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

int max_clique_order(const UniformHypergraph& g) {
    if (g.edges.empty()) return std::min(g.n, g.r - 1);
    for (int t = g.n; t >= g.r; --t)
        if (contains_complete_subgraph(g, t)) return t;
    return std::min(g.n, g.r - 1);
}

namespace {

bool vertices_equivalent(const UniformHypergraph& g, int i, int j) {
    // links must agree on sets avoiding both vertices
    for (const Edge& e : g.edges) {
        bool has_i = std::binary_search(e.begin(), e.end(), i);
        bool has_j = std::binary_search(e.begin(), e.end(), j);
        if (has_i == has_j) continue;
        int present = has_i ? i : j, other = has_i ? j : i;
        if (std::binary_search(e.begin(), e.end(), other)) continue;
        Edge swapped;
        for (int v : e)
            if (v != present) swapped.push_back(v);
        swapped.insert(std::lower_bound(swapped.begin(), swapped.end(), other), other);
        if (!g.has_edge(swapped)) return false;
    }
    return true;
}

}  // namespace

std::vector<std::vector<int>> equivalent_classes(const UniformHypergraph& g) {
    std::vector<std::vector<int>> out;
    for (int i = 1; i <= g.n; ++i) {
        bool placed = false;
        for (auto& c : out) {
            if (vertices_equivalent(g, c.front(), i)) {
                c.push_back(i);
                placed = true;
                break;
            }
        }
        if (!placed) out.push_back({i});
    }
    return out;
}

}  // namespace hlag
