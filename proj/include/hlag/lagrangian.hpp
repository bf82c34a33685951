#pragma once

#include <optional>
#include <vector>

#include "hlag/hypergraph.hpp"
#include "hlag/rational.hpp"

namespace hlag {

// Point on the standard simplex: nonnegative, sums to 1 within 1e-12.
struct Weighting {
    std::vector<double> weights;
};

struct SolverConfig {
    int restarts = 64;
    int max_iterations = 20000;
    double convergence_tolerance = 1e-12;  // per-iteration value change
    double kkt_tolerance = 1e-9;
    unsigned long long random_seed = 42;
};

struct LagrangianResult {
    double value = 0.0;
    Weighting weighting;
    int support_size = 0;
    double kkt_residual = 0.0;
    int restarts_used = 0;
    std::optional<double> certified_upper_bound;
};

bool is_valid_weighting(const std::vector<double>& x, int n);

// Sum over edges of the product of the edge's coordinates. Accepts any
// vector of length n; finite-difference tests evaluate it off the simplex.
double evaluate(const UniformHypergraph& g, const std::vector<double>& x);

// Weight of the link polynomial at x: the partial derivative of evaluate.
double partial_gradient(const UniformHypergraph& g, const std::vector<double>& x, int i);

// Max over the support of |link value - r * total|; zero exactly at interior
// stationary points.
double kkt_residual(const UniformHypergraph& g, const std::vector<double>& x);

// One multiplicative ascent step x_i <- x_i * grad_i / (r * value); the value
// never decreases. Returns x unchanged when the current value is zero.
std::vector<double> replicator_step(const UniformHypergraph& g, const std::vector<double>& x);

// Multistart ascent maximization of evaluate over the simplex. Deterministic
// for a fixed config; support is minimized and left-compressed graphs get a
// nonincreasing weighting.
LagrangianResult maximize(const UniformHypergraph& g, const SolverConfig& cfg = {});

// C(t, r) / t^r exactly: the Lagrangian of the complete r-graph on t vertices.
Rat complete_lagrangian(int t, int r);

bool check_monotone_weighting(const UniformHypergraph& g, const std::vector<double>& x);

// |(x_i - x_j) * pair link value - one-sided link value| for i < j; requires
// the (j over i) one-sided link to be empty.
double compression_identity_residual(const UniformHypergraph& g, const std::vector<double>& x,
                                     int i, int j);

}  // namespace hlag
