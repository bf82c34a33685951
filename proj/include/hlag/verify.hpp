#pragma once

#include <vector>

#include "hlag/grid_bound.hpp"
#include "hlag/hypergraph.hpp"
#include "hlag/lagrangian.hpp"
#include "hlag/rational.hpp"

namespace hlag {

struct CandidateReport {
    int l = 0;
    long long m = 0;
    UniformHypergraph graph;
    std::vector<Edge> complement_triples;  // colex-sorted
    int pair_link_size = 0;                // |E_{(l-1)l}|
    int max_i = 0;     // largest i with (l-1-i, l-1, l) missing from the graph
    bool eq9_consistent = false;
    bool lemma41_applies = false;
    bool thm111_applies = false;
    LagrangianResult lambda;
    Rat threshold;
    double margin = 0.0;  // threshold - lambda.value
    bool pass = false;
    bool certified = false;  // pass label: certified vs numeric
};

struct VerificationSummary {
    int l = 0;
    int candidate_count = 0;
    double max_lambda = 0.0;
    Rat threshold;
    double min_margin = 0.0;
    bool all_pass = false;
    double runtime_seconds = 0.0;
};

struct VerifyOptions {
    SolverConfig solver;
    double margin_tolerance = 1e-7;
    bool certify = false;
    long long certify_budget = kDefaultGridNodeBudget;
};

struct VerifyOutcome {
    VerificationSummary summary;
    std::vector<CandidateReport> reports;
};

// Largest i with (l-1-i, l-1, l) absent from the graph. Throws when every
// such triple is an edge (impossible on a well-formed candidate).
int eq9_max_i(const UniformHypergraph& g, int l);

// |E_{(l-1)l}| <= 7. Requires a left-compressed graph on [l] with no
// complete subgraph of order l-1.
bool lemma41_predicate(const UniformHypergraph& g, int l);

// The colex-smallest missing triples are a run (l-2-j..l-3, l-2, l-1)
// followed by (l-2-i, l-2, l) with i >= j >= 1. Classifier only.
bool thm111_predicate(const UniformHypergraph& g, int l);

// |E_{(l-1)l}| equals l - 2 - eq9_max_i.
bool eq9_check(const UniformHypergraph& g, int l);

VerifyOutcome verify(int l, const VerifyOptions& opts);
VerifyOutcome verify(int l, const SolverConfig& cfg, double margin_tolerance);

// Random supersets of the complete graph on [l-1] with edge count up to the
// candidate size keep the same Lagrangian (within 1e-6); seeded and
// deterministic.
bool conjecture13_spotcheck(int l, int samples, const SolverConfig& cfg);

}  // namespace hlag
