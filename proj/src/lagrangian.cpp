#include "hlag/lagrangian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

namespace hlag {

bool is_valid_weighting(const std::vector<double>& x, int n) {
    if (static_cast<int>(x.size()) != n) return false;
    double s = 0.0;
    for (double v : x) {
        if (v < 0.0 || !std::isfinite(v)) return false;
        s += v;
    }
    return std::abs(s - 1.0) <= 1e-12;
}

double evaluate(const UniformHypergraph& g, const std::vector<double>& x) {
    if (static_cast<int>(x.size()) != g.n)
        throw std::invalid_argument("evaluate: weight vector length mismatch");
    double total = 0.0;
    for (const Edge& e : g.edges) {
        double p = 1.0;
        for (int v : e) p *= x[v - 1];
        total += p;
    }
    return total;
}

double partial_gradient(const UniformHypergraph& g, const std::vector<double>& x, int i) {
    if (static_cast<int>(x.size()) != g.n)
        throw std::invalid_argument("partial_gradient: weight vector length mismatch");
    if (i < 1 || i > g.n) throw std::invalid_argument("partial_gradient: vertex out of range");
    double total = 0.0;
    for (const Edge& e : g.edges) {
        if (!std::binary_search(e.begin(), e.end(), i)) continue;
        double p = 1.0;
        for (int v : e)
            if (v != i) p *= x[v - 1];
        total += p;
    }
    return total;
}

namespace {

// Per-vertex link tables with 0-based flat storage for the hot loop.
struct LinkTables {
    int n = 0;
    int r = 0;
    std::vector<std::vector<int>> flat;  // for vertex i: concatenated (r-1)-tuples, 0-based

    explicit LinkTables(const UniformHypergraph& g) : n(g.n), r(g.r), flat(g.n) {
        for (const Edge& e : g.edges) {
            for (int v : e) {
                auto& dst = flat[v - 1];
                for (int u : e)
                    if (u != v) dst.push_back(u - 1);
            }
        }
    }

    void gradients(const std::vector<double>& x, std::vector<double>& out) const {
        for (int i = 0; i < n; ++i) {
            const auto& f = flat[i];
            double s = 0.0;
            for (std::size_t k = 0; k < f.size(); k += r - 1) {
                double p = x[f[k]];
                for (int t = 1; t < r - 1; ++t) p *= x[f[k + t]];
                s += p;
            }
            out[i] = s;
        }
    }
};

double eval_fast(const UniformHypergraph& g, const std::vector<double>& x) {
    double total = 0.0;
    for (const Edge& e : g.edges) {
        double p = 1.0;
        for (int v : e) p *= x[v - 1];
        total += p;
    }
    return total;
}

double kkt_from(const std::vector<double>& x, const std::vector<double>& grad, int r, double val) {
    double worst = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] <= 0.0) continue;
        worst = std::max(worst, std::abs(grad[i] - r * val));
    }
    return worst;
}

// 53-bit uniform in (0, 1], stable across platforms given mt19937_64.
double unit_draw(std::mt19937_64& eng) {
    return static_cast<double>((eng() >> 11) + 1) * 0x1.0p-53;
}

void normalize(std::vector<double>& x) {
    double s = std::accumulate(x.begin(), x.end(), 0.0);
    if (s > 0.0)
        for (double& v : x) v /= s;
}

struct AscentOutcome {
    double value = 0.0;
    std::vector<double> x;
    double kkt = std::numeric_limits<double>::infinity();
};

// Runs the multiplicative update until the stationarity residual drops under
// kkt_tolerance (value change alone is not enough: the residual shrinks much
// more slowly than the value gain).
AscentOutcome ascend(const UniformHypergraph& g, const LinkTables& links, std::vector<double> x,
                     const SolverConfig& cfg) {
    AscentOutcome out;
    double val = eval_fast(g, x);
    if (val <= 0.0) {
        // small ascent step toward the uniform point: every edge becomes
        // active, after which the multiplicative update applies
        for (double& v : x) v = 0.5 * v + 0.5 / g.n;
        normalize(x);
        val = eval_fast(g, x);
    }
    std::vector<double> grad(g.n, 0.0);
    double kkt = std::numeric_limits<double>::infinity();
    double last_delta = std::numeric_limits<double>::infinity();
    for (int it = 0; it < cfg.max_iterations; ++it) {
        links.gradients(x, grad);
        kkt = kkt_from(x, grad, g.r, val);
        // converged = stationary AND the value has stopped moving; a stalled
        // value alone never ends the loop while the residual is still large
        if (kkt < cfg.kkt_tolerance &&
            (it == 0 || std::abs(last_delta) < cfg.convergence_tolerance))
            break;
        if (val <= 0.0) break;  // gradient everywhere zero on support: stuck start
        double inv = 1.0 / (g.r * val);
        for (int i = 0; i < g.n; ++i) x[i] *= grad[i] * inv;
        normalize(x);
        double nv = eval_fast(g, x);
        last_delta = nv - val;
        val = nv;
    }
    out.value = val;
    out.x = std::move(x);
    out.kkt = kkt;
    return out;
}

constexpr double kSupportZeroThreshold = 1e-10;

AscentOutcome ascend_with_support_minimization(const UniformHypergraph& g, const LinkTables& links,
                                               std::vector<double> start,
                                               const SolverConfig& cfg) {
    AscentOutcome cur = ascend(g, links, std::move(start), cfg);
    for (int round = 0; round < g.n; ++round) {
        bool trimmed = false;
        for (double& v : cur.x) {
            if (v > 0.0 && v < kSupportZeroThreshold) {
                v = 0.0;
                trimmed = true;
            }
        }
        if (!trimmed) break;
        normalize(cur.x);
        cur = ascend(g, links, std::move(cur.x), cfg);
    }
    return cur;
}

int support_count(const std::vector<double>& x) {
    return static_cast<int>(std::count_if(x.begin(), x.end(), [](double v) { return v > 0.0; }));
}

// A stalled ascent (residual stuck above tolerance at the iteration cap)
// signals a zero-weight direction whose link value matches r * value in the
// limit; its mass decays only like 1/iteration. Re-ascending with one support
// vertex removed escapes the stall. Every drop is tried; a drop is kept only
// when it improves the value, or matches it on a strictly smaller support.
AscentOutcome polish_by_face_drop(const UniformHypergraph& g, const LinkTables& links,
                                  AscentOutcome cur, const SolverConfig& cfg) {
    for (int round = 0; round < g.n && cur.kkt >= cfg.kkt_tolerance; ++round) {
        int support = support_count(cur.x);
        if (support <= g.r) break;
        AscentOutcome pick;
        pick.value = -1.0;
        for (int i = 0; i < g.n; ++i) {
            if (cur.x[i] <= 0.0) continue;
            std::vector<double> trial = cur.x;
            trial[i] = 0.0;
            normalize(trial);
            AscentOutcome got = ascend_with_support_minimization(g, links, std::move(trial), cfg);
            if (got.value > pick.value) pick = std::move(got);
        }
        bool progress = pick.value > cur.value ||
                        (pick.value == cur.value && support_count(pick.x) < support);
        if (!progress) break;
        cur = std::move(pick);
    }
    return cur;
}

}  // namespace

double kkt_residual(const UniformHypergraph& g, const std::vector<double>& x) {
    if (static_cast<int>(x.size()) != g.n)
        throw std::invalid_argument("kkt_residual: weight vector length mismatch");
    double val = evaluate(g, x);
    double worst = 0.0;
    for (int i = 1; i <= g.n; ++i) {
        if (x[i - 1] <= 0.0) continue;
        worst = std::max(worst, std::abs(partial_gradient(g, x, i) - g.r * val));
    }
    return worst;
}

std::vector<double> replicator_step(const UniformHypergraph& g, const std::vector<double>& x) {
    if (static_cast<int>(x.size()) != g.n)
        throw std::invalid_argument("replicator_step: weight vector length mismatch");
    double val = evaluate(g, x);
    if (val <= 0.0) return x;
    std::vector<double> nx(x);
    for (int i = 1; i <= g.n; ++i) nx[i - 1] = x[i - 1] * partial_gradient(g, x, i) / (g.r * val);
    normalize(nx);
    return nx;
}

LagrangianResult maximize(const UniformHypergraph& g, const SolverConfig& cfg) {
    if (cfg.restarts < 1 || cfg.max_iterations < 1)
        throw std::invalid_argument("maximize: config values must be positive");
    LagrangianResult res;
    if (g.edges.empty()) {
        if (g.n > 0) res.weighting.weights.assign(g.n, 1.0 / g.n);
        res.value = 0.0;
        res.support_size = g.n;
        res.kkt_residual = 0.0;
        res.restarts_used = 0;
        return res;
    }

    LinkTables links(g);
    AscentOutcome best;
    best.value = -1.0;

    for (int idx = 0; idx < cfg.restarts; ++idx) {
        std::vector<double> start(g.n, 0.0);
        int structured = g.n - g.r + 1;  // uniform on every prefix [k], k = r..n
        if (idx < structured) {
            int k = g.r + idx;
            for (int i = 0; i < k; ++i) start[i] = 1.0 / k;
        } else {
            std::seed_seq seq{static_cast<unsigned>(cfg.random_seed & 0xffffffffULL),
                              static_cast<unsigned>(cfg.random_seed >> 32),
                              static_cast<unsigned>(idx)};
            std::mt19937_64 eng(seq);
            for (int i = 0; i < g.n; ++i) start[i] = -std::log(unit_draw(eng));
            normalize(start);
        }
        AscentOutcome got = ascend_with_support_minimization(g, links, std::move(start), cfg);
        if (got.value > best.value) best = std::move(got);
    }

    if (best.kkt >= cfg.kkt_tolerance) best = polish_by_face_drop(g, links, std::move(best), cfg);

    // canonical form: a nonincreasing reordering is adopted when it does not
    // lose value (never loses on left-compressed graphs)
    std::vector<double> sorted = best.x;
    std::sort(sorted.begin(), sorted.end(), std::greater<double>());
    double sorted_val = eval_fast(g, sorted);
    if (sorted_val >= best.value - 1e-15) {
        best.x = std::move(sorted);
        best.value = sorted_val;
        std::vector<double> grad(g.n, 0.0);
        links.gradients(best.x, grad);
        best.kkt = kkt_from(best.x, grad, g.r, best.value);
    }

    res.value = best.value;
    res.weighting.weights = best.x;
    res.support_size = static_cast<int>(
        std::count_if(best.x.begin(), best.x.end(), [](double v) { return v > 0.0; }));
    res.kkt_residual = best.kkt;
    res.restarts_used = cfg.restarts;
    return res;
}

Rat complete_lagrangian(int t, int r) {
    if (t < r) throw std::invalid_argument("complete_lagrangian: t < r");
    return Rat(binomial_ll(t, r), checked_pow_ll(t, r));
}

bool check_monotone_weighting(const UniformHypergraph& g, const std::vector<double>& x) {
    if (static_cast<int>(x.size()) != g.n)
        throw std::invalid_argument("check_monotone_weighting: weight vector length mismatch");
    for (std::size_t i = 1; i < x.size(); ++i)
        if (x[i - 1] < x[i]) return false;
    return true;
}

double compression_identity_residual(const UniformHypergraph& g, const std::vector<double>& x,
                                     int i, int j) {
    if (static_cast<int>(x.size()) != g.n)
        throw std::invalid_argument("compression_identity_residual: weight vector length mismatch");
    if (i >= j) throw std::invalid_argument("compression_identity_residual: need i < j");
    if (!diff_link(g, j, i).sets.empty())
        throw std::invalid_argument(
            "compression_identity_residual: pair is not left-compressed (E_{j\\i} nonempty)");
    double pair_val = 0.0;
    for (const auto& b : pair_link(g, i, j).sets) {
        double p = 1.0;
        for (int v : b) p *= x[v - 1];
        pair_val += p;
    }
    double diff_val = 0.0;
    for (const auto& a : diff_link(g, i, j).sets) {
        double p = 1.0;
        for (int v : a) p *= x[v - 1];
        diff_val += p;
    }
    return std::abs((x[i - 1] - x[j - 1]) * pair_val - diff_val);
}

}  // namespace hlag
