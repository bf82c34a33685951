#include "hlag/grid_bound.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace hlag {

namespace {

// Incremental edge bookkeeping for the prefix walk. Vertices are 0-based;
// tail vertices are p = n-2 and q = n-1.
struct ScanTables {
    int n = 0;
    int P = 0;  // prefix length n-2
    // pairs (a,b), a<b<k, with (a,b,k) an edge: contribute to the prefix value
    std::vector<std::vector<std::pair<int, int>>> prefix_pairs_for;
    // a<k with (a,k,p) an edge: contribute to the p-link value
    std::vector<std::vector<int>> a_for;
    // a<k with (a,k,q) an edge: contribute to the q-link value
    std::vector<std::vector<int>> b_for;
    // k with (k,p,q) an edge
    std::vector<char> c_for;

    explicit ScanTables(const UniformHypergraph& g) : n(g.n), P(g.n - 2) {
        prefix_pairs_for.resize(P);
        a_for.resize(P);
        b_for.resize(P);
        c_for.assign(P, 0);
        int p = n - 2, q = n - 1;
        for (const Edge& e : g.edges) {
            int a = e[0] - 1, b = e[1] - 1, c = e[2] - 1;
            if (c < P) {
                prefix_pairs_for[c].push_back({a, b});
            } else if (c == p) {
                if (b < P) a_for[b].push_back(a);
            } else {  // c == q
                if (b < P) {
                    b_for[b].push_back(a);
                } else {  // b == p: edge (a, p, q)
                    c_for[a] = 1;
                }
            }
        }
    }
};

struct ScanState {
    const ScanTables* tab = nullptr;
    long long D = 0;
    bool restricted = false;
    bool count_only = false;
    long long budget = 0;
    long long nodes = 0;
    long long best = 0;
    std::vector<long long> x;
};

// Closed-form tail: with prefix fixed and R mass left for (x_p, x_q),
// f(t) = C0 + A t + B (R - t) + Cc t (R - t) over t = x_p. Concave in t, so
// the integer maximum sits at a clamped vertex or an endpoint.
inline void tail_max(ScanState& s, long long C0, long long A, long long B, long long Cc,
                     long long R, long long cap) {
    long long tlo, thi;
    if (s.restricted) {
        tlo = (R + 1) / 2;
        thi = std::min(cap, R);
        if (tlo > thi) return;
    } else {
        tlo = 0;
        thi = R;
    }
    long long cand[4];
    int nc = 0;
    cand[nc++] = tlo;
    cand[nc++] = thi;
    if (Cc > 0) {
        long long tv = ((A - B) + Cc * R) / (2 * Cc);
        if (tv >= tlo && tv <= thi) cand[nc++] = tv;
        if (tv + 1 >= tlo && tv + 1 <= thi) cand[nc++] = tv + 1;
    }
    for (int k = 0; k < nc; ++k) {
        long long t = cand[k];
        long long f = C0 + A * t + B * (R - t) + Cc * t * (R - t);
        if (f > s.best) s.best = f;
    }
}

void scan(ScanState& s, int k, long long rem, long long C0run, long long Arun, long long Brun,
          long long Ccrun) {
    const ScanTables& tab = *s.tab;
    long long lo, hi;
    if (s.restricted) {
        int free_coords = tab.n - k;
        lo = (rem + free_coords - 1) / free_coords;
        hi = std::min(k == 0 ? s.D : s.x[k - 1], rem);
    } else {
        lo = 0;
        hi = rem;
    }
    if (lo > hi) return;

    if (k == tab.P - 1) {
        // innermost prefix coordinate: running sums are linear in its value
        long long T1 = 0;
        for (auto [a, b] : tab.prefix_pairs_for[k]) T1 += s.x[a] * s.x[b];
        long long A1 = 0;
        for (int a : tab.a_for[k]) A1 += s.x[a];
        long long B1 = 0;
        for (int a : tab.b_for[k]) B1 += s.x[a];
        long long c1 = tab.c_for[k];

        s.nodes += hi - lo + 1;
        if (s.nodes > s.budget)
            throw GridBudgetExceeded("grid scan budget exceeded at denominator " +
                                     std::to_string(s.D));
        if (s.count_only) return;
        for (long long v = lo; v <= hi; ++v) {
            tail_max(s, C0run + T1 * v, Arun + A1 * v, Brun + B1 * v, Ccrun + c1 * v, rem - v, v);
        }
        return;
    }

    for (long long v = lo; v <= hi; ++v) {
        long long C0 = C0run, A = Arun, B = Brun, Cc = Ccrun;
        for (auto [a, b] : tab.prefix_pairs_for[k]) C0 += s.x[a] * s.x[b] * v;
        for (int a : tab.a_for[k]) A += s.x[a] * v;
        for (int a : tab.b_for[k]) B += s.x[a] * v;
        Cc += tab.c_for[k] * v;
        s.x[k] = v;
        scan(s, k + 1, rem - v, C0, A, B, Cc);
    }
    s.x[k] = 0;
}

double lgamma_ll(long long v) { return std::lgamma(static_cast<double>(v)); }

// Coarse upper estimate of prefix assignments: compositions of D into P+1
// slots, divided by P! when the scan is order-restricted.
double estimate_nodes(long long D, int P, bool restricted) {
    double logc = lgamma_ll(D + P + 1) - lgamma_ll(D + 1) - lgamma_ll(P + 1);
    if (restricted) logc -= lgamma_ll(P + 1);
    if (logc > 700.0) return std::numeric_limits<double>::infinity();
    return std::exp(logc);
}

long long run_scan(const UniformHypergraph& g, long long D, long long budget, bool count_only,
                   long long* nodes_out) {
    ScanTables tab(g);
    ScanState s;
    s.tab = &tab;
    s.D = D;
    s.restricted = is_left_compressed(g);
    s.count_only = count_only;
    s.budget = budget;
    s.x.assign(tab.P, 0);
    scan(s, 0, D, 0, 0, 0, 0);
    if (nodes_out) *nodes_out = s.nodes;
    return s.best;
}

}  // namespace

long long grid_scan_max(const UniformHypergraph& g, long long denominator, long long node_budget) {
    if (g.r != 3) throw std::invalid_argument("grid scan supports r = 3 only");
    if (denominator < 1 || denominator > 100000)
        throw std::invalid_argument("grid scan: denominator out of range");
    if (g.edges.empty()) return 0;
    // n >= 3 here since the graph has an edge
    bool restricted = is_left_compressed(g);
    double est = estimate_nodes(denominator, g.n - 2, restricted);
    if (est > 3.0 * static_cast<double>(node_budget))
        throw GridBudgetExceeded("grid scan budget exceeded (estimated " +
                                 std::to_string(est) + " prefix nodes)");
    long long nodes = 0;
    run_scan(g, denominator, node_budget, true, &nodes);  // cheap counting pass
    return run_scan(g, denominator, node_budget, false, nullptr);
}

Rat grid_certify_exact(const UniformHypergraph& g, long long denominator, long long node_budget) {
    long long best = grid_scan_max(g, denominator, node_budget);
    long long d3 = denominator * denominator * denominator;
    return Rat(best, d3) + Rat(g.n, 2 * denominator);
}

double grid_certify(const UniformHypergraph& g, long long denominator, long long node_budget) {
    Rat exact = grid_certify_exact(g, denominator, node_budget);
    double v = to_double(exact);
    // never report below the exact bound
    while (big_of_double(v) < big_of(exact))
        v = std::nextafter(v, std::numeric_limits<double>::infinity());
    return v;
}

}  // namespace hlag
