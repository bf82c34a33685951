#include "hlag/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "hlag/poset.hpp"

namespace hlag {

namespace {

void require_candidate_shape(const UniformHypergraph& g, int l, const char* who) {
    if (g.r != 3) throw std::invalid_argument(std::string(who) + ": needs a 3-graph");
    if (g.n != l) throw std::invalid_argument(std::string(who) + ": graph is not on [l]");
    if (!is_left_compressed(g))
        throw std::invalid_argument(std::string(who) + ": graph is not left-compressed");
}

}  // namespace

int eq9_max_i(const UniformHypergraph& g, int l) {
    for (int i = l - 2; i >= 1; --i) {
        Edge e{l - 1 - i, l - 1, l};
        if (!g.has_edge(e)) return i;
    }
    throw std::invalid_argument("eq9_max_i: no missing (a, l-1, l) triple; malformed candidate");
}

bool lemma41_predicate(const UniformHypergraph& g, int l) {
    require_candidate_shape(g, l, "lemma41_predicate");
    if (contains_complete_subgraph(g, l - 1))
        throw std::invalid_argument("lemma41_predicate: graph contains a clique of order l-1");
    return pair_link(g, l - 1, l).sets.size() <= 7;
}

bool thm111_predicate(const UniformHypergraph& g, int l) {
    require_candidate_shape(g, l, "thm111_predicate");
    if (contains_complete_subgraph(g, l - 1))
        throw std::invalid_argument("thm111_predicate: graph contains a clique of order l-1");
    long long want_m = binomial_ll(l - 1, 3) + binomial_ll(l - 2, 2);
    if (static_cast<long long>(g.m()) != want_m)
        throw std::invalid_argument("thm111_predicate: edge count is not the candidate size");

    std::vector<Edge> comp = complement(g).edges;  // colex-sorted by construction
    // leading run (a, l-2, l-1) with consecutive first coordinates ending at l-3
    std::size_t j = 0;
    while (j < comp.size() && comp[j][1] == l - 2 && comp[j][2] == l - 1) {
        if (j > 0 && comp[j][0] != comp[j - 1][0] + 1) return false;
        ++j;
    }
    if (j < 1 || comp[j - 1][0] != l - 3) return false;
    if (j >= comp.size()) return false;
    const Edge& next = comp[j];
    if (next[1] != l - 2 || next[2] != l) return false;
    long long i = (l - 2) - next[0];
    return i >= static_cast<long long>(j);
}

bool eq9_check(const UniformHypergraph& g, int l) {
    require_candidate_shape(g, l, "eq9_check");
    int i = eq9_max_i(g, l);
    return static_cast<int>(pair_link(g, l - 1, l).sets.size()) == l - 2 - i;
}

namespace {

long long pick_denominator(int n, double margin_estimate) {
    if (margin_estimate <= 0.0) return 0;
    double dmin = static_cast<double>(n) / (1.8 * margin_estimate);
    if (dmin > 100000.0) return 0;
    long long d = static_cast<long long>(dmin) + 1;
    return ((d + 49) / 50) * 50;
}

}  // namespace

VerifyOutcome verify(int l, const VerifyOptions& opts) {
    if (l < 6) throw std::invalid_argument("verify: needs l >= 6");
    auto t0 = std::chrono::steady_clock::now();

    VerifyOutcome out;
    Rat threshold = complete_lagrangian(l - 1, 3);
    double thr_d = to_double(threshold);
    BigRat thr_big = big_of(threshold);
    BigRat margin_big = big_of_double(opts.margin_tolerance);

    for (const UniformHypergraph& g : enumerate_candidates(l)) {
        CandidateReport rep;
        rep.l = l;
        rep.m = static_cast<long long>(g.m());
        rep.graph = g;
        rep.complement_triples = complement(g).edges;
        rep.pair_link_size = static_cast<int>(pair_link(g, l - 1, l).sets.size());
        rep.max_i = eq9_max_i(g, l);
        rep.eq9_consistent = eq9_check(g, l);
        rep.lemma41_applies = lemma41_predicate(g, l);
        rep.thm111_applies = thm111_predicate(g, l);
        rep.lambda = maximize(g, opts.solver);
        rep.threshold = threshold;
        rep.margin = thr_d - rep.lambda.value;
        // strict inequality with the exact threshold on the right
        rep.pass = (big_of_double(rep.lambda.value) + margin_big < thr_big) &&
                   rep.lambda.kkt_residual < opts.solver.kkt_tolerance;
        if (opts.certify) {
            long long den = pick_denominator(l, rep.margin);
            if (den > 0) {
                try {
                    Rat bound = grid_certify_exact(g, den, opts.certify_budget);
                    double bd = to_double(bound);
                    while (big_of_double(bd) < big_of(bound))
                        bd = std::nextafter(bd, std::numeric_limits<double>::infinity());
                    rep.lambda.certified_upper_bound = bd;
                    if (big_of(bound) < thr_big) rep.certified = true;
                } catch (const GridBudgetExceeded&) {
                    // stays a numeric pass; certification is best-effort
                }
            }
        }
        out.reports.push_back(std::move(rep));
    }

    VerificationSummary& s = out.summary;
    s.l = l;
    s.candidate_count = static_cast<int>(out.reports.size());
    s.threshold = threshold;
    s.max_lambda = 0.0;
    s.all_pass = true;
    for (const CandidateReport& rep : out.reports) {
        s.max_lambda = std::max(s.max_lambda, rep.lambda.value);
        s.all_pass = s.all_pass && rep.pass;
    }
    s.min_margin = thr_d - s.max_lambda;
    s.runtime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

VerifyOutcome verify(int l, const SolverConfig& cfg, double margin_tolerance) {
    VerifyOptions opts;
    opts.solver = cfg;
    opts.margin_tolerance = margin_tolerance;
    return verify(l, opts);
}

bool conjecture13_spotcheck(int l, int samples, const SolverConfig& cfg) {
    if (l < 6) throw std::invalid_argument("conjecture13_spotcheck: needs l >= 6");
    long long extra_max = binomial_ll(l - 2, 2);
    Rat threshold = complete_lagrangian(l - 1, 3);
    double thr_d = to_double(threshold);

    std::vector<Edge> base = all_r_subsets(l - 1, 3);
    std::vector<Edge> pool;
    for (int a = 1; a < l; ++a)
        for (int b = a + 1; b < l; ++b) pool.push_back({a, b, l});

    std::seed_seq seq{static_cast<unsigned>(cfg.random_seed & 0xffffffffULL),
                      static_cast<unsigned>(cfg.random_seed >> 32), 0x5eedu};
    std::mt19937_64 eng(seq);
    auto draw = [&eng](std::size_t bound) { return static_cast<std::size_t>(eng() % bound); };

    for (int s = 0; s < samples; ++s) {
        long long extra = static_cast<long long>(draw(static_cast<std::size_t>(extra_max) + 1));
        // partial Fisher-Yates over the vertex-l triples
        std::vector<Edge> deck = pool;
        for (long long k = 0; k < extra; ++k)
            std::swap(deck[k], deck[k + static_cast<long long>(draw(deck.size() - k))]);
        std::vector<Edge> edges = base;
        edges.insert(edges.end(), deck.begin(), deck.begin() + extra);
        UniformHypergraph g = make_graph(3, l, std::move(edges));
        LagrangianResult res = maximize(g, cfg);
        if (std::abs(res.value - thr_d) > 1e-6) return false;
    }
    return true;
}

}  // namespace hlag
