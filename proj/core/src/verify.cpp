#include "sumdilates/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "sumdilates/big_uint.hpp"
#include "sumdilates/errors.hpp"

namespace sumdilates {

using ordered_json = nlohmann::ordered_json;

std::string to_string(Suite suite) {
    switch (suite) {
        case Suite::ruzsa: return "ruzsa";
        case Suite::plunnecke: return "plunnecke";
        case Suite::corollary5: return "corollary5";
        case Suite::prop6: return "prop6";
        case Suite::dilates: return "dilates";
    }
    return "?";
}

Suite parse_suite(const std::string& name) {
    if (name == "ruzsa") return Suite::ruzsa;
    if (name == "plunnecke") return Suite::plunnecke;
    if (name == "corollary5") return Suite::corollary5;
    if (name == "prop6") return Suite::prop6;
    if (name == "dilates") return Suite::dilates;
    throw std::invalid_argument("unknown suite: " + name);
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::violated: return "violated";
        case Verdict::indeterminate: return "indeterminate";
    }
    return "?";
}

namespace {

double log_count(std::uint64_t n) { return std::log(static_cast<double>(n)); }

struct BoundOutcome {
    double lhs_log = 0.0;
    double rhs_log = 0.0;
    double slack = 0.0;
    Verdict verdict = Verdict::holds;
};

// Decides lhs <= base * K^E. Integer exponents are settled exactly in
// big-integer arithmetic: lhs * den^E <= base * num^E. Fractional exponents
// use log space; a candidate violation must survive a long-double recheck
// before it is reported (a float artifact must never masquerade as a
// counterexample to a theorem).
BoundOutcome check_power_bound(std::uint64_t lhs_count, std::uint64_t base_count,
                               const Rational& k, const Exponent& exponent, double tolerance) {
    BoundOutcome out;
    const double ln_k = std::log(static_cast<double>(k.num)) - std::log(static_cast<double>(k.den));
    out.lhs_log = log_count(lhs_count);
    out.rhs_log = exponent.value * ln_k + log_count(base_count);
    out.slack = out.rhs_log - out.lhs_log;

    if (exponent.exact) {
        BigUint lhs = BigUint::pow(k.den, static_cast<std::uint64_t>(*exponent.exact));
        lhs *= lhs_count;
        BigUint rhs = BigUint::pow(k.num, static_cast<std::uint64_t>(*exponent.exact));
        rhs *= base_count;
        out.verdict = BigUint::compare(lhs, rhs) <= 0 ? Verdict::holds : Verdict::violated;
        return out;
    }

    const double scale = std::max({1.0, std::fabs(out.lhs_log), std::fabs(out.rhs_log)});
    if (out.slack >= -tolerance * scale) {
        out.verdict = Verdict::holds;
        return out;
    }
    const long double slack_ld =
        static_cast<long double>(exponent.value) *
            (std::log(static_cast<long double>(k.num)) - std::log(static_cast<long double>(k.den))) +
        std::log(static_cast<long double>(base_count)) - std::log(static_cast<long double>(lhs_count));
    out.verdict = slack_ld < -static_cast<long double>(tolerance * scale) ? Verdict::violated
                                                                          : Verdict::indeterminate;
    return out;
}

ordered_json json_set(const IntSet& s) { return ordered_json(s.elements()); }

TrialRecord make_record(Suite suite, ordered_json instance, const BoundOutcome& outcome,
                        std::uint64_t seed) {
    TrialRecord rec;
    rec.suite = to_string(suite);
    rec.instance_json = instance.dump();
    rec.lhs_log = outcome.lhs_log;
    rec.rhs_log = outcome.rhs_log;
    rec.slack = outcome.slack;
    rec.verdict = outcome.verdict;
    rec.seed = seed;
    return rec;
}

} // namespace

TrialRecord check_dilate_bound(const IntSet& a, std::span<const std::int64_t> lambdas,
                               const Exponent& exponent, std::string_view bound_label,
                               double tolerance, std::uint64_t seed, std::int64_t cap) {
    if (a.size() < 2) {
        throw std::invalid_argument("dilate bound checks need |A| >= 2 (K = 1 is vacuous)");
    }
    const IntSet spread = dilate_sum(lambdas, a, cap);
    const Rational k = doubling_constant(a, DoublingMode::sum, cap);
    const BoundOutcome outcome = check_power_bound(spread.size(), a.size(), k, exponent, tolerance);

    ordered_json instance;
    instance["set"] = json_set(a);
    instance["lambdas"] = ordered_json(std::vector<std::int64_t>(lambdas.begin(), lambdas.end()));
    instance["bound"] = std::string(bound_label);
    instance["exponent"] = exponent.value;
    instance["k"] = to_string(k);
    return make_record(Suite::dilates, std::move(instance), outcome, seed);
}

TrialRecord check_ruzsa(const IntSet& x, const IntSet& y, const IntSet& z, std::uint64_t seed,
                        std::int64_t cap) {
    const std::uint64_t xy = sumset(x, y, cap).size();
    const std::uint64_t xz = sumset(x, z, cap).size();
    const std::uint64_t zy = sumset(z, y, cap).size();

    BoundOutcome outcome;
    outcome.lhs_log = log_count(xy);
    outcome.rhs_log = log_count(xz) + log_count(zy) - log_count(z.size());
    outcome.slack = outcome.rhs_log - outcome.lhs_log;
    const unsigned __int128 lhs = static_cast<unsigned __int128>(xy) * z.size();
    const unsigned __int128 rhs = static_cast<unsigned __int128>(xz) * zy;
    outcome.verdict = lhs <= rhs ? Verdict::holds : Verdict::violated;

    ordered_json instance;
    instance["x"] = json_set(x);
    instance["y"] = json_set(y);
    instance["z"] = json_set(z);
    return make_record(Suite::ruzsa, std::move(instance), outcome, seed);
}

TrialRecord check_plunnecke(const IntSet& a, std::int64_t l, std::int64_t m, std::uint64_t seed,
                            std::int64_t cap) {
    const IntSet folded = signed_fold(l, m, a, cap);
    const Rational k = doubling_constant(a, DoublingMode::sum, cap);
    const BoundOutcome outcome =
        check_power_bound(folded.size(), a.size(), k, Exponent::from_int(l + m), 0.0);

    ordered_json instance;
    instance["set"] = json_set(a);
    instance["l"] = l;
    instance["m"] = m;
    return make_record(Suite::plunnecke, std::move(instance), outcome, seed);
}

TrialRecord check_corollary5(const IntSet& a, const IntSet& b, std::int64_t p1, std::int64_t p2,
                             std::uint64_t seed, std::int64_t cap) {
    if (p1 < 0 || p2 < 0) throw std::invalid_argument("corollary5 needs nonnegative p1, p2");
    const IntSet lhs_set = p1 + p2 == 0 ? b : sumset(b, signed_fold(p1, p2, a, cap), cap);
    const IntSet base = sumset(b, a, cap);
    const Rational k = doubling_constant(a, DoublingMode::sum, cap);
    const BoundOutcome outcome =
        check_power_bound(lhs_set.size(), base.size(), k, Exponent::from_int(p1 + p2 + 1), 0.0);

    ordered_json instance;
    instance["a"] = json_set(a);
    instance["b"] = json_set(b);
    instance["p1"] = p1;
    instance["p2"] = p2;
    return make_record(Suite::corollary5, std::move(instance), outcome, seed);
}

TrialRecord check_prop6(const std::vector<IntSet>& sets, std::span<const std::int64_t> ks,
                        std::span<const std::int64_t> ls, std::uint64_t seed, std::int64_t cap) {
    if (sets.empty() || sets.size() != ks.size() || sets.size() != ls.size()) {
        throw std::invalid_argument("prop6 needs equally many sets, ks and ls (>= 1)");
    }
    IntSet lhs_set({0});
    IntSet base;
    Rational k{1, 1};
    std::int64_t exponent = static_cast<std::int64_t>(sets.size());
    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (ks[i] < 0 || ls[i] < 0) throw std::invalid_argument("prop6 fold counts must be nonnegative");
        if (ks[i] + ls[i] > 0) {
            lhs_set = sumset(lhs_set, signed_fold(ks[i], ls[i], sets[i], cap), cap);
        }
        base = i == 0 ? sets[i] : sumset(base, sets[i], cap);
        const Rational ki = doubling_constant(sets[i], DoublingMode::sum, cap);
        if (compare(ki, k) > 0) k = ki;
        exponent += ks[i] + ls[i];
    }
    const BoundOutcome outcome =
        check_power_bound(lhs_set.size(), base.size(), k, Exponent::from_int(exponent), 0.0);

    ordered_json instance;
    ordered_json set_list = ordered_json::array();
    for (const auto& s : sets) set_list.push_back(json_set(s));
    instance["sets"] = std::move(set_list);
    instance["k"] = ordered_json(std::vector<std::int64_t>(ks.begin(), ks.end()));
    instance["l"] = ordered_json(std::vector<std::int64_t>(ls.begin(), ls.end()));
    return make_record(Suite::prop6, std::move(instance), outcome, seed);
}

SubsetEnumerator::SubsetEnumerator(std::int64_t universe, std::int64_t min_size, std::int64_t max_size)
    : universe_(universe), min_size_(min_size), max_size_(std::min(max_size, universe + 1)) {}

bool SubsetEnumerator::advance() {
    if (!started_) {
        started_ = true;
        current_ = {0};
        return universe_ >= 0 && max_size_ >= 1;
    }
    if (static_cast<std::int64_t>(current_.size()) < max_size_ && current_.back() < universe_) {
        current_.push_back(current_.back() + 1);
        return true;
    }
    while (!current_.empty() && current_.back() == universe_) current_.pop_back();
    if (current_.empty()) return false;
    ++current_.back();
    return true;
}

bool SubsetEnumerator::next(std::vector<std::int64_t>& out) {
    while (advance()) {
        if (static_cast<std::int64_t>(current_.size()) >= min_size_) {
            out = current_;
            return true;
        }
    }
    return false;
}

TupleEnumerator::TupleEnumerator(std::int64_t lambda_max, std::int64_t max_h)
    : lambda_max_(lambda_max), max_h_(max_h) {}

bool TupleEnumerator::next(std::vector<std::int64_t>& out) {
    if (lambda_max_ < 1 || max_h_ < 1) return false;
    if (current_.empty()) {
        current_ = {-lambda_max_};
        out = current_;
        return true;
    }
    if (static_cast<std::int64_t>(current_.size()) < max_h_) {
        current_.push_back(-lambda_max_);
        out = current_;
        return true;
    }
    while (!current_.empty() && current_.back() == lambda_max_) current_.pop_back();
    if (current_.empty()) return false;
    current_.back() = current_.back() == -1 ? 1 : current_.back() + 1;
    out = current_;
    return true;
}

IntSet sample_int_set(Rng& rng, std::int64_t universe, std::int64_t max_size) {
    const std::uint64_t size = 2 + rng.bounded(static_cast<std::uint64_t>(max_size - 1));
    std::set<std::int64_t> elems;
    while (elems.size() < size) {
        elems.insert(static_cast<std::int64_t>(rng.bounded(static_cast<std::uint64_t>(universe + 1))));
    }
    return IntSet::from_sorted(std::vector<std::int64_t>(elems.begin(), elems.end()));
}

std::int64_t sample_lambda(Rng& rng, std::int64_t lambda_max) {
    const std::uint64_t u = rng.bounded(2 * static_cast<std::uint64_t>(lambda_max));
    const std::int64_t v = static_cast<std::int64_t>(u);
    return v < lambda_max ? v + 1 : -(v - lambda_max + 1);
}

namespace {

void validate_config(Suite suite, const VerifyConfig& c) {
    if (c.universe < 1) throw std::invalid_argument("universe must be >= 1");
    if (c.max_set_size < 2) throw std::invalid_argument("max_set_size must be >= 2");
    if (c.max_set_size > c.universe + 1) {
        throw std::invalid_argument("max_set_size cannot exceed universe + 1");
    }
    if (!c.exhaustive && c.trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (suite == Suite::dilates && (c.lambda_max < 1 || c.max_h < 1)) {
        throw std::invalid_argument("dilates needs lambda_max >= 1 and max_h >= 1");
    }
    if (suite == Suite::plunnecke && c.max_fold < 1) {
        throw std::invalid_argument("plunnecke needs max_fold >= 1");
    }
    if (suite == Suite::prop6 && (c.max_fold < 1 || c.max_sets < 1)) {
        throw std::invalid_argument("prop6 needs max_fold >= 1 and max_sets >= 1");
    }
    if (suite == Suite::corollary5 && c.max_p_sum < 0) {
        throw std::invalid_argument("corollary5 needs max_p_sum >= 0");
    }
}

struct Aggregator {
    SuiteReport& report;
    const TrialSink& sink;

    void operator()(const TrialRecord& rec) {
        ++report.trials;
        switch (rec.verdict) {
            case Verdict::holds: ++report.holds; break;
            case Verdict::violated: ++report.violated; break;
            case Verdict::indeterminate: ++report.indeterminate; break;
        }
        if (rec.slack < report.min_slack) report.min_slack = rec.slack;
        if (rec.verdict != Verdict::holds) report.violations.push_back(rec);
        if (sink) sink(rec);
    }
};

// All exponent machinery for one coefficient tuple, reused across sets.
struct DilateBounds {
    std::vector<std::pair<std::string, Exponent>> entries;
};

DilateBounds dilate_bounds_for(const std::vector<std::int64_t>& lambdas, const VerifyConfig& c) {
    DilateBounds b;
    b.entries.emplace_back("bukh", Exponent::from_real(bukh_exponent(lambdas)));
    b.entries.emplace_back("binbound", Exponent::from_int(binbound_exponent(lambdas)));
    const DigitGraph graph = build_digit_graph(lambdas);
    const std::int64_t base = 7 + 10 * static_cast<std::int64_t>(graph.max_exp);
    const auto add = [&](DecomposeAlgo algo) {
        const Decomposition d = decompose(graph, algo, c.greedy, c.exact);
        b.entries.emplace_back("decomposition/" + to_string(algo),
                               Exponent::from_int(base + 2 * d.weight));
    };
    add(DecomposeAlgo::star_rows);
    add(DecomposeAlgo::star_cols);
    add(DecomposeAlgo::greedy);
    if (graph.graph.edge_count() <= c.exact.max_edges) add(DecomposeAlgo::exact);
    return b;
}

void run_dilates(const VerifyConfig& c, Aggregator& emit) {
    std::map<std::vector<std::int64_t>, DilateBounds> cache;
    const auto bounds_for = [&](const std::vector<std::int64_t>& lambdas) -> const DilateBounds& {
        auto it = cache.find(lambdas);
        if (it == cache.end()) it = cache.emplace(lambdas, dilate_bounds_for(lambdas, c)).first;
        return it->second;
    };

    const auto run_instance = [&](const IntSet& a, const std::vector<std::int64_t>& lambdas,
                                  std::uint64_t seed) {
        const DilateBounds& bounds = bounds_for(lambdas);
        for (const auto& [label, exponent] : bounds.entries) {
            emit(check_dilate_bound(a, lambdas, exponent, label, c.tolerance, seed,
                                    c.cardinality_cap));
        }
    };

    if (c.exhaustive) {
        SubsetEnumerator sets(c.universe, 2, c.max_set_size);
        std::vector<std::int64_t> elems;
        std::uint64_t index = 0;
        while (sets.next(elems)) {
            const IntSet a = IntSet::from_sorted(elems);
            TupleEnumerator tuples(c.lambda_max, c.max_h);
            std::vector<std::int64_t> lambdas;
            while (tuples.next(lambdas)) run_instance(a, lambdas, index++);
        }
        return;
    }
    for (std::int64_t t = 0; t < c.trials; ++t) {
        const std::uint64_t seed = trial_seed(c.seed, static_cast<std::uint64_t>(t));
        Rng rng(seed);
        const IntSet a = sample_int_set(rng, c.universe, c.max_set_size);
        const std::int64_t h = 1 + static_cast<std::int64_t>(rng.bounded(static_cast<std::uint64_t>(c.max_h)));
        std::vector<std::int64_t> lambdas(static_cast<std::size_t>(h));
        for (auto& lambda : lambdas) lambda = sample_lambda(rng, c.lambda_max);
        run_instance(a, lambdas, seed);
    }
}

std::vector<IntSet> all_subsets(std::int64_t universe, std::int64_t max_size) {
    std::vector<IntSet> out;
    SubsetEnumerator sets(universe, 2, max_size);
    std::vector<std::int64_t> elems;
    while (sets.next(elems)) out.push_back(IntSet::from_sorted(elems));
    return out;
}

void run_ruzsa(const VerifyConfig& c, Aggregator& emit) {
    if (c.exhaustive) {
        const std::vector<IntSet> sets = all_subsets(c.universe, c.max_set_size);
        std::uint64_t index = 0;
        for (const auto& x : sets) {
            for (const auto& y : sets) {
                for (const auto& z : sets) {
                    emit(check_ruzsa(x, y, z, index++, c.cardinality_cap));
                }
            }
        }
        return;
    }
    for (std::int64_t t = 0; t < c.trials; ++t) {
        const std::uint64_t seed = trial_seed(c.seed, static_cast<std::uint64_t>(t));
        Rng rng(seed);
        const IntSet x = sample_int_set(rng, c.universe, c.max_set_size);
        const IntSet y = sample_int_set(rng, c.universe, c.max_set_size);
        const IntSet z = sample_int_set(rng, c.universe, c.max_set_size);
        emit(check_ruzsa(x, y, z, seed, c.cardinality_cap));
    }
}

void run_plunnecke(const VerifyConfig& c, Aggregator& emit) {
    if (c.exhaustive) {
        const std::vector<IntSet> sets = all_subsets(c.universe, c.max_set_size);
        std::uint64_t index = 0;
        for (const auto& a : sets) {
            for (std::int64_t l = 0; l <= c.max_fold; ++l) {
                for (std::int64_t m = 0; m <= c.max_fold; ++m) {
                    if (l + m == 0) continue;
                    emit(check_plunnecke(a, l, m, index++, c.cardinality_cap));
                }
            }
        }
        return;
    }
    for (std::int64_t t = 0; t < c.trials; ++t) {
        const std::uint64_t seed = trial_seed(c.seed, static_cast<std::uint64_t>(t));
        Rng rng(seed);
        const IntSet a = sample_int_set(rng, c.universe, c.max_set_size);
        std::int64_t l = 0;
        std::int64_t m = 0;
        do {
            l = static_cast<std::int64_t>(rng.bounded(static_cast<std::uint64_t>(c.max_fold + 1)));
            m = static_cast<std::int64_t>(rng.bounded(static_cast<std::uint64_t>(c.max_fold + 1)));
        } while (l + m == 0);
        emit(check_plunnecke(a, l, m, seed, c.cardinality_cap));
    }
}

void run_corollary5(const VerifyConfig& c, Aggregator& emit) {
    if (c.exhaustive) {
        const std::vector<IntSet> sets = all_subsets(c.universe, c.max_set_size);
        std::uint64_t index = 0;
        for (const auto& a : sets) {
            for (const auto& b : sets) {
                for (std::int64_t p1 = 0; p1 <= c.max_p_sum; ++p1) {
                    for (std::int64_t p2 = 0; p1 + p2 <= c.max_p_sum; ++p2) {
                        emit(check_corollary5(a, b, p1, p2, index++, c.cardinality_cap));
                    }
                }
            }
        }
        return;
    }
    for (std::int64_t t = 0; t < c.trials; ++t) {
        const std::uint64_t seed = trial_seed(c.seed, static_cast<std::uint64_t>(t));
        Rng rng(seed);
        const IntSet a = sample_int_set(rng, c.universe, c.max_set_size);
        const IntSet b = sample_int_set(rng, c.universe, c.max_set_size);
        const std::int64_t p1 =
            static_cast<std::int64_t>(rng.bounded(static_cast<std::uint64_t>(c.max_p_sum + 1)));
        const std::int64_t p2 =
            static_cast<std::int64_t>(rng.bounded(static_cast<std::uint64_t>(c.max_p_sum + 1 - p1)));
        emit(check_corollary5(a, b, p1, p2, seed, c.cardinality_cap));
    }
}

void run_prop6(const VerifyConfig& c, Aggregator& emit) {
    if (c.exhaustive) {
        const std::vector<IntSet> sets = all_subsets(c.universe, c.max_set_size);
        std::uint64_t index = 0;
        std::vector<IntSet> chosen;
        std::vector<std::int64_t> ks;
        std::vector<std::int64_t> ls;
        const auto recurse = [&](auto&& self, std::int64_t q) -> void {
            if (q == 0) {
                emit(check_prop6(chosen, ks, ls, index++, c.cardinality_cap));
                return;
            }
            for (const auto& a : sets) {
                for (std::int64_t s = 1; s <= c.max_fold; ++s) {
                    for (std::int64_t k = 0; k <= s; ++k) {
                        chosen.push_back(a);
                        ks.push_back(k);
                        ls.push_back(s - k);
                        self(self, q - 1);
                        chosen.pop_back();
                        ks.pop_back();
                        ls.pop_back();
                    }
                }
            }
        };
        for (std::int64_t q = 1; q <= c.max_sets; ++q) recurse(recurse, q);
        return;
    }
    for (std::int64_t t = 0; t < c.trials; ++t) {
        const std::uint64_t seed = trial_seed(c.seed, static_cast<std::uint64_t>(t));
        Rng rng(seed);
        const std::int64_t q = 1 + static_cast<std::int64_t>(rng.bounded(static_cast<std::uint64_t>(c.max_sets)));
        std::vector<IntSet> sets;
        std::vector<std::int64_t> ks;
        std::vector<std::int64_t> ls;
        for (std::int64_t i = 0; i < q; ++i) {
            sets.push_back(sample_int_set(rng, c.universe, c.max_set_size));
            const std::int64_t s = 1 + static_cast<std::int64_t>(rng.bounded(static_cast<std::uint64_t>(c.max_fold)));
            const std::int64_t k = static_cast<std::int64_t>(rng.bounded(static_cast<std::uint64_t>(s + 1)));
            ks.push_back(k);
            ls.push_back(s - k);
        }
        emit(check_prop6(sets, ks, ls, seed, c.cardinality_cap));
    }
}

} // namespace

SuiteReport run_suite(Suite suite, const VerifyConfig& config, const TrialSink& sink) {
    validate_config(suite, config);
    SuiteReport report;
    report.suite = suite;
    report.config = config;
    Aggregator emit{report, sink};
    switch (suite) {
        case Suite::ruzsa: run_ruzsa(config, emit); break;
        case Suite::plunnecke: run_plunnecke(config, emit); break;
        case Suite::corollary5: run_corollary5(config, emit); break;
        case Suite::prop6: run_prop6(config, emit); break;
        case Suite::dilates: run_dilates(config, emit); break;
    }
    if (report.trials == 0) report.min_slack = 0.0;
    return report;
}

} // namespace sumdilates
