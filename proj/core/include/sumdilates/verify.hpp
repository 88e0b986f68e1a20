#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "sumdilates/exponents.hpp"
#include "sumdilates/int_set.hpp"
#include "sumdilates/rng.hpp"

namespace sumdilates {

enum class Suite { ruzsa, plunnecke, corollary5, prop6, dilates };
std::string to_string(Suite suite);
Suite parse_suite(const std::string& name);

enum class Verdict { holds, violated, indeterminate };
std::string to_string(Verdict v);

/// One checked inequality. Violated records embed everything needed to replay
/// the instance; in exhaustive mode `seed` carries the enumeration index.
struct TrialRecord {
    std::string suite;
    std::string instance_json;
    double lhs_log = 0.0;
    double rhs_log = 0.0;
    double slack = 0.0;  // rhs_log - lhs_log
    Verdict verdict = Verdict::holds;
    std::uint64_t seed = 0;
};

struct VerifyConfig {
    std::int64_t universe = 12;      // sets are drawn from {0, ..., universe}
    std::int64_t max_set_size = 5;   // sizes range over [2, max_set_size]
    std::int64_t max_h = 2;          // dilates: coefficient tuple length
    std::int64_t lambda_max = 7;     // dilates: |lambda_i| <= lambda_max
    std::int64_t trials = 1000;      // random instances (ignored in exhaustive mode)
    std::uint64_t seed = 0;
    bool exhaustive = false;
    std::int64_t max_fold = 3;       // plunnecke: l, m <= max_fold; prop6: k_i + l_i <= max_fold
    std::int64_t max_p_sum = 3;      // corollary5: p1 + p2 <= max_p_sum
    std::int64_t max_sets = 3;       // prop6: q <= max_sets
    double tolerance = 1e-9;         // log-space slack tolerance (relative)
    std::int64_t cardinality_cap = kDefaultCardinalityCap;
    GreedyParams greedy;
    ExactLimits exact;
};

struct SuiteReport {
    Suite suite = Suite::dilates;
    VerifyConfig config;
    std::int64_t trials = 0;  // number of TrialRecords evaluated
    std::int64_t holds = 0;
    std::int64_t violated = 0;
    std::int64_t indeterminate = 0;
    double min_slack = std::numeric_limits<double>::infinity();
    std::vector<TrialRecord> violations;
};

using TrialSink = std::function<void(const TrialRecord&)>;

/// |dilate_sum(lambdas, a)| <= K^exponent |a| with K = |a+a|/|a|.
/// Integer exponents are decided in exact big-integer arithmetic; fractional
/// ones in log space at the given tolerance. Requires |a| >= 2.
TrialRecord check_dilate_bound(const IntSet& a, std::span<const std::int64_t> lambdas,
                               const Exponent& exponent, std::string_view bound_label = "custom",
                               double tolerance = 1e-9, std::uint64_t seed = 0,
                               std::int64_t cap = kDefaultCardinalityCap);

/// |X+Y| * |Z| <= |X+Z| * |Z+Y|, exact.
TrialRecord check_ruzsa(const IntSet& x, const IntSet& y, const IntSet& z,
                        std::uint64_t seed = 0, std::int64_t cap = kDefaultCardinalityCap);

/// |lA - mA| <= K^(l+m) |A|, exact.
TrialRecord check_plunnecke(const IntSet& a, std::int64_t l, std::int64_t m,
                            std::uint64_t seed = 0, std::int64_t cap = kDefaultCardinalityCap);

/// |B + p1 A - p2 A| <= K^(p1+p2+1) |B+A|, exact.
TrialRecord check_corollary5(const IntSet& a, const IntSet& b, std::int64_t p1, std::int64_t p2,
                             std::uint64_t seed = 0, std::int64_t cap = kDefaultCardinalityCap);

/// |k1 A1 - l1 A1 + ... + kq Aq - lq Aq| <= |A1 + ... + Aq| * K^(q + sum(k_i+l_i))
/// with K = max_i |A_i+A_i|/|A_i|, exact.
TrialRecord check_prop6(const std::vector<IntSet>& sets, std::span<const std::int64_t> ks,
                        std::span<const std::int64_t> ls, std::uint64_t seed = 0,
                        std::int64_t cap = kDefaultCardinalityCap);

/// Runs a suite; every record is also fed to `sink` when provided (JSONL logs).
SuiteReport run_suite(Suite suite, const VerifyConfig& config, const TrialSink& sink = {});

/// Subsets of {0, ..., universe} with size in [min_size, max_size], in
/// lexicographic sequence order ({0,1} < {0,1,2} < {0,2}).
class SubsetEnumerator {
public:
    SubsetEnumerator(std::int64_t universe, std::int64_t min_size, std::int64_t max_size);
    bool next(std::vector<std::int64_t>& out);

private:
    std::int64_t universe_;
    std::int64_t min_size_;
    std::int64_t max_size_;
    std::vector<std::int64_t> current_;
    bool started_ = false;
    bool advance();
};

/// Nonzero coefficient tuples of length 1..max_h over [-lambda_max, lambda_max],
/// in lexicographic sequence order with the domain ordered ascending.
class TupleEnumerator {
public:
    TupleEnumerator(std::int64_t lambda_max, std::int64_t max_h);
    bool next(std::vector<std::int64_t>& out);

private:
    std::int64_t lambda_max_;
    std::int64_t max_h_;
    std::vector<std::int64_t> current_;
};

/// Size uniform in [2, max_size], then distinct elements uniform in [0, universe].
IntSet sample_int_set(Rng& rng, std::int64_t universe, std::int64_t max_size);

/// Uniform over [-lambda_max, lambda_max] \ {0}.
std::int64_t sample_lambda(Rng& rng, std::int64_t lambda_max);

} // namespace sumdilates
