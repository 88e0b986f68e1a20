#pragma once

#include <string>

#include "sumdilates/bipartite_graph.hpp"
#include "sumdilates/decompose.hpp"
#include "sumdilates/digit_graph.hpp"
#include "sumdilates/exponents.hpp"
#include "sumdilates/gap.hpp"
#include "sumdilates/int_set.hpp"
#include "sumdilates/verify.hpp"

namespace sumdilates {

// JSON schemas (stable; documented in the README). Left/coefficient indices
// are 1-based in serialized form, right/exponent indices 0-based.

std::string to_json(const IntSet& s);
IntSet int_set_from_json(const std::string& text);

std::string to_json(const GapSpec& s);
GapSpec gap_spec_from_json(const std::string& text);

std::string to_json(const DigitGraph& g);

/// {"m": int, "n": int, "edges": [[u, v]]} with u in 1..m, v in 0..n-1.
std::string to_json(const BipartiteGraph& g);
BipartiteGraph bipartite_graph_from_json(const std::string& text);

std::string to_json(const Decomposition& d);
Decomposition decomposition_from_json(const std::string& text);

std::string to_json(const ExponentReport& r);
std::string to_csv(const ExponentReport& r);  // header line + one data row

/// Single line, no trailing newline; one per JSONL log entry.
std::string to_json_line(const TrialRecord& r);

std::string to_json(const SuiteReport& r);

} // namespace sumdilates
