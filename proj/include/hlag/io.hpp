#pragma once

#include <iosfwd>
#include <string>

#include "hlag/hypergraph.hpp"
#include "hlag/verify.hpp"

namespace hlag {

// Graph documents: {"edges": [[...], ...], "n": int, "r": int}. The writer is
// canonical (sorted keys, compact, colex-sorted edges) so write-read-write
// round-trips byte for byte.
std::string graph_to_json(const UniformHypergraph& g);
UniformHypergraph graph_from_json(const std::string& text);
UniformHypergraph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const UniformHypergraph& g);

// Report lines: one record per candidate, summary record last. Rationals
// appear as num/den pairs plus a decimal rendering. Timing is console-only;
// the file depends on nothing but input and seed.
std::string report_to_json(const CandidateReport& rep);
std::string summary_to_json(const VerificationSummary& s);
void write_report_file(const std::string& path, const VerifyOutcome& outcome);

}  // namespace hlag
