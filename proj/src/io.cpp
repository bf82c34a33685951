#include "hlag/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace hlag {

using nlohmann::json;

namespace {

json graph_json(const UniformHypergraph& g) {
    json j;
    j["r"] = g.r;
    j["n"] = g.n;
    j["edges"] = json::array();
    for (const Edge& e : g.edges) j["edges"].push_back(e);
    return j;
}

json rat_json(const Rat& q) {
    json j;
    j["num"] = q.numerator();
    j["den"] = q.denominator();
    j["decimal"] = decimal_string(q);
    return j;
}

}  // namespace

std::string graph_to_json(const UniformHypergraph& g) { return graph_json(g).dump(); }

UniformHypergraph graph_from_json(const std::string& text) {
    json j = json::parse(text);
    if (!j.contains("r") || !j.contains("n") || !j.contains("edges"))
        throw std::invalid_argument("graph document needs fields r, n, edges");
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) edges.push_back(e.get<Edge>());
    return make_graph(j.at("r").get<int>(), j.at("n").get<int>(), std::move(edges));
}

UniformHypergraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return graph_from_json(buf.str());
}

void write_graph_file(const std::string& path, const UniformHypergraph& g) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << graph_to_json(g) << "\n";
}

std::string report_to_json(const CandidateReport& rep) {
    json j;
    j["record"] = "candidate";
    j["l"] = rep.l;
    j["m"] = rep.m;
    j["graph"] = graph_json(rep.graph);
    j["complement_triples"] = json::array();
    for (const Edge& e : rep.complement_triples) j["complement_triples"].push_back(e);
    j["pair_link_size"] = rep.pair_link_size;
    j["max_i"] = rep.max_i;
    j["eq9_consistent"] = rep.eq9_consistent;
    j["lemma41_applies"] = rep.lemma41_applies;
    j["thm111_applies"] = rep.thm111_applies;
    json lam;
    lam["value"] = rep.lambda.value;
    lam["weighting"] = rep.lambda.weighting.weights;
    lam["support_size"] = rep.lambda.support_size;
    lam["kkt_residual"] = rep.lambda.kkt_residual;
    lam["restarts_used"] = rep.lambda.restarts_used;
    if (rep.lambda.certified_upper_bound)
        lam["certified_upper_bound"] = *rep.lambda.certified_upper_bound;
    else
        lam["certified_upper_bound"] = nullptr;
    j["lambda"] = lam;
    j["threshold"] = rat_json(rep.threshold);
    j["margin"] = rep.margin;
    j["verdict"] = rep.pass ? "pass" : "fail";
    j["mode"] = rep.certified ? "certified" : "numeric";
    return j.dump();
}

std::string summary_to_json(const VerificationSummary& s) {
    json j;
    j["record"] = "summary";
    j["l"] = s.l;
    j["candidate_count"] = s.candidate_count;
    j["max_lambda"] = s.max_lambda;
    j["threshold"] = rat_json(s.threshold);
    j["min_margin"] = s.min_margin;
    j["all_pass"] = s.all_pass;
    return j.dump();
}

void write_report_file(const std::string& path, const VerifyOutcome& outcome) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    for (const CandidateReport& rep : outcome.reports) out << report_to_json(rep) << "\n";
    out << summary_to_json(outcome.summary) << "\n";
}

}  // namespace hlag
