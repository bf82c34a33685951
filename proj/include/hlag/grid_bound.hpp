#pragma once

#include <stdexcept>

#include "hlag/hypergraph.hpp"
#include "hlag/rational.hpp"

namespace hlag {

struct GridBudgetExceeded : std::runtime_error {
    explicit GridBudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Scan cost cap, counted in innermost prefix assignments.
inline constexpr long long kDefaultGridNodeBudget = 100'000'000'000LL;

// Certified upper bound for 3-graphs: exact maximum of the edge polynomial
// over simplex points with coordinates k/denominator, plus half the L1 mesh
// radius n/denominator (1/2 bounds every partial derivative on the simplex).
// Left-compressed graphs are scanned over nonincreasing points only; a
// nonincreasing reordering never loses value there. The last two coordinates
// are resolved in closed form, so the scan walks prefixes of length n-2.
// Throws GridBudgetExceeded when the prefix count exceeds node_budget.
Rat grid_certify_exact(const UniformHypergraph& g, long long denominator,
                       long long node_budget = kDefaultGridNodeBudget);

// Same bound rounded upward to a double.
double grid_certify(const UniformHypergraph& g, long long denominator,
                    long long node_budget = kDefaultGridNodeBudget);

// Exact maximum of the edge polynomial over the scanned grid, scaled by
// denominator^3 (no mesh term). Exposed for tests.
long long grid_scan_max(const UniformHypergraph& g, long long denominator,
                        long long node_budget = kDefaultGridNodeBudget);

}  // namespace hlag
