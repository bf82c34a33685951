#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "hlag/io.hpp"
#include "hlag/lagrangian.hpp"
#include "hlag/poset.hpp"
#include "hlag/rational.hpp"
#include "hlag/verify.hpp"

namespace {

int run_verify(int l, hlag::VerifyOptions opts, const std::string& out_path) {
    hlag::VerifyOutcome outcome = hlag::verify(l, opts);
    for (std::size_t k = 0; k < outcome.reports.size(); ++k) {
        const hlag::CandidateReport& rep = outcome.reports[k];
        std::cout << "candidate " << (k + 1) << "/" << outcome.reports.size() << ": m=" << rep.m
                  << " lambda=" << rep.lambda.value << " margin=" << rep.margin
                  << " kkt=" << rep.lambda.kkt_residual << " |E_(l-1)l|=" << rep.pair_link_size
                  << " i=" << rep.max_i << (rep.lemma41_applies ? " link<=7" : "")
                  << (rep.thm111_applies ? " prefix-form" : "") << " "
                  << (rep.pass ? "pass" : "FAIL") << " ("
                  << (rep.certified ? "certified" : "numeric");
        if (rep.lambda.certified_upper_bound)
            std::cout << ", bound=" << *rep.lambda.certified_upper_bound;
        std::cout << ")\n";
    }
    const hlag::VerificationSummary& s = outcome.summary;
    std::cout << "l=" << s.l << " candidates=" << s.candidate_count << " threshold="
              << s.threshold.numerator() << "/" << s.threshold.denominator() << " ("
              << hlag::decimal_string(s.threshold) << ") max_lambda=" << s.max_lambda
              << " min_margin=" << s.min_margin << " all_pass="
              << (s.all_pass ? "true" : "false") << " runtime=" << s.runtime_seconds << "s\n";
    if (!out_path.empty()) hlag::write_report_file(out_path, outcome);
    return s.all_pass ? 0 : 2;
}

int run_enumerate(int l, const std::string& out_path) {
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            std::cerr << "cannot open " << out_path << "\n";
            return 1;
        }
        os = &file;
    }
    for (const hlag::UniformHypergraph& g : hlag::enumerate_candidates(l))
        (*os) << hlag::graph_to_json(g) << "\n";
    return 0;
}

int run_lagrangian(const std::string& input, hlag::SolverConfig cfg) {
    hlag::UniformHypergraph g = hlag::read_graph_file(input);
    hlag::LagrangianResult res = hlag::maximize(g, cfg);
    std::cout << "value = " << res.value << "\n";
    std::cout << "support_size = " << res.support_size << "\n";
    std::cout << "kkt_residual = " << res.kkt_residual << "\n";
    std::cout << "weighting =";
    for (double w : res.weighting.weights) std::cout << " " << w;
    std::cout << "\n";
    return 0;
}

// Random 2-graphs against the clique-number formula (1/2)(1 - 1/w).
int run_motzkin_straus(int max_n, int trials, unsigned long long seed) {
    if (max_n < 2) {
        std::cerr << "--n must be at least 2\n";
        return 1;
    }
    std::seed_seq seq{static_cast<unsigned>(seed & 0xffffffffULL),
                      static_cast<unsigned>(seed >> 32), 0x25u};
    std::mt19937_64 eng(seq);
    double worst = 0.0;
    int failures = 0;
    for (int t = 0; t < trials; ++t) {
        int n = 2 + static_cast<int>(eng() % static_cast<unsigned long long>(max_n - 1));
        std::vector<hlag::Edge> edges;
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b)
                if (eng() & 1) edges.push_back({a, b});
        hlag::UniformHypergraph g = hlag::make_graph(2, n, std::move(edges));
        hlag::SolverConfig cfg;
        cfg.restarts = 24;
        cfg.random_seed = seed + 1000 + t;
        double lam = hlag::maximize(g, cfg).value;
        int w = hlag::max_clique_order(g);
        double target = 0.5 * (1.0 - 1.0 / w);
        double dev = std::abs(lam - target);
        worst = std::max(worst, dev);
        if (dev > 1e-6) ++failures;
    }
    std::cout << "trials=" << trials << " worst_deviation=" << worst << " failures=" << failures
              << "\n";
    return failures == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lagrangian computation and candidate verification for 3-graphs"};
    app.require_subcommand(1);

    int l = 6;
    int restarts = -1;
    long long seed = -1;
    double margin = 1e-7;
    bool certify = false;
    std::string out_path, input_path;
    int oracle_n = 9, oracle_trials = 200;
    long long oracle_seed = 42;

    CLI::App* v = app.add_subcommand("verify", "check every candidate at a given l");
    v->add_option("--l", l, "vertex count")->required();
    v->add_option("--restarts", restarts, "solver restarts");
    v->add_option("--seed", seed, "solver seed");
    v->add_option("--margin", margin, "required margin below the threshold");
    v->add_flag("--certify", certify, "attempt a rigorous grid upper bound");
    v->add_option("--out", out_path, "report file (jsonl)");

    CLI::App* e = app.add_subcommand("enumerate", "stream candidate graphs");
    e->add_option("--l", l, "vertex count")->required();
    e->add_option("--out", out_path, "output file (jsonl)");

    CLI::App* lg = app.add_subcommand("lagrangian", "maximize the edge polynomial of one graph");
    lg->add_option("--input", input_path, "graph document (json)")->required();
    lg->add_option("--restarts", restarts, "solver restarts");
    lg->add_option("--seed", seed, "solver seed");

    CLI::App* orc = app.add_subcommand("oracle", "property suites");
    CLI::App* ms = orc->add_subcommand("motzkin-straus", "2-graph clique-number formula suite");
    ms->add_option("--n", oracle_n, "max vertex count")->required();
    ms->add_option("--trials", oracle_trials, "number of trials")->required();
    ms->add_option("--seed", oracle_seed, "rng seed");
    orc->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& ex) {
        return app.exit(ex);
    } catch (const CLI::ParseError& ex) {
        std::cerr << ex.what() << "\n";
        return 1;
    }

    try {
        if (v->parsed()) {
            hlag::VerifyOptions opts;
            if (restarts > 0) opts.solver.restarts = restarts;
            if (seed >= 0) opts.solver.random_seed = static_cast<unsigned long long>(seed);
            opts.margin_tolerance = margin;
            opts.certify = certify;
            return run_verify(l, opts, out_path);
        }
        if (e->parsed()) return run_enumerate(l, out_path);
        if (lg->parsed()) {
            hlag::SolverConfig cfg;
            if (restarts > 0) cfg.restarts = restarts;
            if (seed >= 0) cfg.random_seed = static_cast<unsigned long long>(seed);
            return run_lagrangian(input_path, cfg);
        }
        if (ms->parsed())
            return run_motzkin_straus(oracle_n, oracle_trials,
                                      static_cast<unsigned long long>(oracle_seed));
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 1;
}
