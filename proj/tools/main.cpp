// dilates — sum-of-dilates workbench CLI.
//
// Subcommands: bounds (exponent bounds for a coefficient tuple), decompose
// (biclique partitions of digit graphs / bipartite graphs), verify
// (inequality suites with reproducible trial streams), gap (generalized
// arithmetic progression evidence).
//
// Exit codes: 0 success / no violation, 1 usage error, 2 computation limit,
// 3 verification violation.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>
#include <unistd.h>

#include "sumdilates/big_uint.hpp"
#include "sumdilates/errors.hpp"
#include "sumdilates/exponents.hpp"
#include "sumdilates/gap.hpp"
#include "sumdilates/serialize.hpp"
#include "sumdilates/verify.hpp"

namespace sd = sumdilates;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitLimit = 2;
constexpr int kExitViolation = 3;

bool color_enabled() {
    if (std::getenv("NO_COLOR") != nullptr) return false;
    return isatty(fileno(stdout)) != 0;
}

std::string paint(const std::string& text, const char* code) {
    if (!color_enabled()) return text;
    return std::string("\033[") + code + "m" + text + "\033[0m";
}

std::string green(const std::string& text) { return paint(text, "32"); }
std::string red(const std::string& text) { return paint(text, "31"); }

std::vector<std::int64_t> parse_int_list(const std::string& text, const char* what) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw std::invalid_argument(std::string("empty entry in ") + what);
        std::size_t pos = 0;
        const std::int64_t v = std::stoll(item, &pos);
        if (pos != item.size()) throw std::invalid_argument("malformed integer '" + item + "' in " + what);
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument(std::string(what) + " must not be empty");
    return out;
}

void require_nonzero(const std::vector<std::int64_t>& lambdas) {
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        if (lambdas[i] == 0) {
            throw std::invalid_argument("lambda #" + std::to_string(i + 1) + " is zero");
        }
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << content;
}

// --config file.json supplies defaults; explicitly passed flags win.
ordered_json load_config_file(const std::string& path) {
    auto j = ordered_json::parse(read_file(path), nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
        throw std::invalid_argument("config file must hold a JSON object: " + path);
    }
    return j;
}

template <typename T>
void merge_option(const CLI::App& app, const std::string& flag, const ordered_json& cfg,
                  const std::string& key, T& value) {
    if (app.count(flag) > 0) return;
    if (auto it = cfg.find(key); it != cfg.end()) value = it->get<T>();
}

struct BoundsOptions {
    std::string lambdas_text;
    int repeat = 1;
    std::string format = "table";
    std::string method = "all";
    std::string output;
    std::string config_file;
    int max_q = 4;
    std::int64_t time_budget = -1;
    int max_edges = 12;
};

std::string render_bounds_table(const sd::ExponentReport& report, const std::string& method) {
    std::ostringstream out;
    const auto row = [&](const std::string& label, const std::string& value) {
        out << "  " << label;
        for (std::size_t i = label.size(); i < 28; ++i) out << ' ';
        out << value << '\n';
    };
    out << "exponent bounds for lambdas = [";
    for (std::size_t i = 0; i < report.lambdas.size(); ++i) {
        if (i) out << ", ";
        out << report.lambdas[i];
    }
    out << "]  (r = " << report.r << ", h = " << report.h << ")\n";
    const auto want = [&](const std::string& label) { return method == "all" || method == label; };
    if (want("plunnecke")) row("plunnecke", std::to_string(report.plunnecke));
    if (want("bukh")) row("bukh", ordered_json(report.bukh).dump());
    if (want("binbound")) row("binbound", std::to_string(report.binbound));
    if (want("decomposition")) {
        for (const auto& d : report.decompositions) {
            row("decomposition/" + d.label,
                std::to_string(d.exponent) + "  (weight " + std::to_string(d.weight) + ", q " +
                    std::to_string(d.q) + ", sharp " + std::to_string(d.sharp_exponent) + ")");
        }
    }
    if (want("main")) {
        if (report.main_theorem) {
            row("main", ordered_json(report.main_theorem->value).dump() +
                            (report.main_theorem->applicable ? "  (applicable)" : "  (not applicable)"));
        } else {
            row("main", "-  (needs r >= 1 and r + h >= 3)");
        }
    }
    if (method == "all") {
        row("best", green(report.best_label) + " = " + ordered_json(report.best.value).dump());
    }
    return out.str();
}

int cmd_bounds(const BoundsOptions& opt, const CLI::App& app) {
    BoundsOptions merged = opt;
    if (!opt.config_file.empty()) {
        const ordered_json cfg = load_config_file(opt.config_file);
        merge_option(app, "--lambdas", cfg, "lambdas", merged.lambdas_text);
        merge_option(app, "--repeat", cfg, "repeat", merged.repeat);
        merge_option(app, "--format", cfg, "format", merged.format);
        merge_option(app, "--method", cfg, "method", merged.method);
        merge_option(app, "--max-q", cfg, "max-q", merged.max_q);
        merge_option(app, "--time-budget", cfg, "time-budget", merged.time_budget);
        merge_option(app, "--max-edges", cfg, "max-edges", merged.max_edges);
    }
    if (merged.lambdas_text.empty()) throw std::invalid_argument("--lambdas is required");
    if (merged.repeat < 1) throw std::invalid_argument("--repeat must be >= 1");

    std::vector<std::int64_t> base = parse_int_list(merged.lambdas_text, "--lambdas");
    require_nonzero(base);
    std::vector<std::int64_t> lambdas;
    for (int i = 0; i < merged.repeat; ++i) lambdas.insert(lambdas.end(), base.begin(), base.end());

    sd::ReportParams params;
    params.greedy.max_q = merged.max_q;
    params.greedy.time_budget_ms = merged.time_budget;
    params.exact.max_edges = merged.max_edges;
    const sd::ExponentReport report = sd::exponent_report(lambdas, params);

    const bool known_method = merged.method == "all" || merged.method == "plunnecke" ||
                              merged.method == "bukh" || merged.method == "binbound" ||
                              merged.method == "decomposition" || merged.method == "main";
    if (!known_method) {
        throw std::invalid_argument("--method must be all|plunnecke|bukh|binbound|decomposition|main");
    }

    std::string rendered;
    if (merged.format == "json") {
        ordered_json j = ordered_json::parse(sd::to_json(report));
        if (merged.method != "all") {
            ordered_json filtered;
            filtered["lambdas"] = j["lambdas"];
            filtered["r"] = j["r"];
            filtered["h"] = j["h"];
            if (merged.method == "decomposition") {
                filtered["decompositions"] = j["decompositions"];
                filtered["best_decomposition"] = j["best_decomposition"];
            } else if (merged.method == "main") {
                filtered["main_theorem"] = j["main_theorem"];
            } else {
                filtered[merged.method] = j[merged.method];
            }
            j = std::move(filtered);
        }
        rendered = j.dump(2) + "\n";
    } else if (merged.format == "csv") {
        rendered = sd::to_csv(report);
    } else if (merged.format == "table") {
        rendered = render_bounds_table(report, merged.method);
    } else {
        throw std::invalid_argument("bounds supports --format table|json|csv");
    }
    if (!merged.output.empty()) {
        write_file(merged.output, rendered);
    } else {
        std::cout << rendered;
    }
    return kExitOk;
}

struct DecomposeOptions {
    std::string lambdas_text;
    int repeat = 1;
    std::string graph_file;
    std::string algo = "greedy";
    std::string format = "table";
    std::string output;
    std::string config_file;
    int max_q = 4;
    std::int64_t time_budget = -1;
    int max_edges = 12;
};

int cmd_decompose(const DecomposeOptions& opt, const CLI::App& app) {
    DecomposeOptions merged = opt;
    if (!opt.config_file.empty()) {
        const ordered_json cfg = load_config_file(opt.config_file);
        merge_option(app, "--lambdas", cfg, "lambdas", merged.lambdas_text);
        merge_option(app, "--repeat", cfg, "repeat", merged.repeat);
        merge_option(app, "--graph", cfg, "graph", merged.graph_file);
        merge_option(app, "--algo", cfg, "algo", merged.algo);
        merge_option(app, "--format", cfg, "format", merged.format);
        merge_option(app, "--max-q", cfg, "max-q", merged.max_q);
        merge_option(app, "--time-budget", cfg, "time-budget", merged.time_budget);
        merge_option(app, "--max-edges", cfg, "max-edges", merged.max_edges);
    }
    if (merged.lambdas_text.empty() == merged.graph_file.empty()) {
        throw std::invalid_argument("decompose needs exactly one of --lambdas or --graph");
    }
    const sd::DecomposeAlgo algo = sd::parse_algo(merged.algo);
    sd::GreedyParams greedy;
    greedy.max_q = merged.max_q;
    greedy.time_budget_ms = merged.time_budget;
    sd::ExactLimits exact{merged.max_edges};

    sd::Decomposition decomposition;
    sd::ValidationReport validation;
    if (!merged.lambdas_text.empty()) {
        std::vector<std::int64_t> base = parse_int_list(merged.lambdas_text, "--lambdas");
        require_nonzero(base);
        std::vector<std::int64_t> lambdas;
        for (int i = 0; i < merged.repeat; ++i) lambdas.insert(lambdas.end(), base.begin(), base.end());
        const sd::DigitGraph graph = sd::build_digit_graph(lambdas);
        decomposition = sd::decompose(graph, algo, greedy, exact);
        validation = sd::validate_decomposition(graph, decomposition);
    } else {
        const sd::BipartiteGraph graph = sd::bipartite_graph_from_json(read_file(merged.graph_file));
        switch (algo) {
            case sd::DecomposeAlgo::star_rows:
                decomposition = sd::star_decomposition(graph, sd::StarOrientation::rows);
                break;
            case sd::DecomposeAlgo::star_cols:
                decomposition = sd::star_decomposition(graph, sd::StarOrientation::columns);
                break;
            case sd::DecomposeAlgo::greedy:
                decomposition = sd::greedy_decomposition(graph, greedy);
                break;
            case sd::DecomposeAlgo::exact:
                decomposition = sd::exact_min_weight_decomposition(graph, exact);
                break;
        }
        validation = sd::validate_decomposition(graph, decomposition);
    }

    if (!merged.output.empty()) write_file(merged.output, sd::to_json(decomposition) + "\n");

    if (merged.format == "json") {
        ordered_json j;
        j["algo"] = merged.algo;
        j["decomposition"] = ordered_json::parse(sd::to_json(decomposition));
        ordered_json v;
        v["is_partition"] = validation.is_partition;
        v["parts_are_bicliques"] = validation.parts_are_bicliques;
        v["weight_matches"] = validation.weight_matches;
        v["recomputed_weight"] = validation.recomputed_weight;
        if (validation.gamma_reconstruction) v["gamma_reconstruction"] = *validation.gamma_reconstruction;
        v["ok"] = validation.ok();
        j["validation"] = std::move(v);
        std::cout << j.dump(2) << '\n';
    } else if (merged.format == "table") {
        std::cout << "algorithm: " << merged.algo << '\n'
                  << "weight:    " << decomposition.weight << '\n'
                  << "q:         " << decomposition.q() << '\n';
        if (!decomposition.gammas.empty()) {
            std::cout << "gammas:    ";
            for (std::size_t i = 0; i < decomposition.gammas.size(); ++i) {
                if (i) std::cout << ' ';
                std::cout << decomposition.gammas[i];
            }
            std::cout << '\n';
        }
        std::cout << "valid:     " << (validation.ok() ? green("yes") : red("NO")) << '\n';
    } else {
        throw std::invalid_argument("decompose supports --format table|json");
    }
    if (!validation.ok()) return kExitViolation;
    return kExitOk;
}

struct VerifyOptions {
    std::string suite;
    sd::VerifyConfig config;
    std::string log_file;
    std::string format = "json";
    std::string output;
    std::string config_file;
};

int cmd_verify(const VerifyOptions& opt, const CLI::App& app) {
    VerifyOptions merged = opt;
    if (!opt.config_file.empty()) {
        const ordered_json cfg = load_config_file(opt.config_file);
        merge_option(app, "--universe", cfg, "universe", merged.config.universe);
        merge_option(app, "--max-set-size", cfg, "max-set-size", merged.config.max_set_size);
        merge_option(app, "--max-h", cfg, "max-h", merged.config.max_h);
        merge_option(app, "--lambda-max", cfg, "lambda-max", merged.config.lambda_max);
        merge_option(app, "--trials", cfg, "trials", merged.config.trials);
        merge_option(app, "--seed", cfg, "seed", merged.config.seed);
        merge_option(app, "--exhaustive", cfg, "exhaustive", merged.config.exhaustive);
        merge_option(app, "--max-fold", cfg, "max-fold", merged.config.max_fold);
        merge_option(app, "--max-p-sum", cfg, "max-p-sum", merged.config.max_p_sum);
        merge_option(app, "--max-sets", cfg, "max-sets", merged.config.max_sets);
        merge_option(app, "--cap", cfg, "cap", merged.config.cardinality_cap);
        merge_option(app, "--log", cfg, "log", merged.log_file);
        merge_option(app, "--format", cfg, "format", merged.format);
    }
    const sd::Suite suite = sd::parse_suite(merged.suite);

    std::ofstream log_stream;
    sd::TrialSink sink;
    if (!merged.log_file.empty()) {
        log_stream.open(merged.log_file, std::ios::binary | std::ios::trunc);
        if (!log_stream) throw std::invalid_argument("cannot write log file: " + merged.log_file);
        sink = [&log_stream](const sd::TrialRecord& rec) {
            log_stream << sd::to_json_line(rec) << '\n';
        };
    }

    const sd::SuiteReport report = sd::run_suite(suite, merged.config, sink);
    if (log_stream.is_open()) log_stream.close();

    std::string rendered;
    if (merged.format == "json") {
        rendered = sd::to_json(report) + "\n";
    } else if (merged.format == "table") {
        std::ostringstream out;
        out << "suite:         " << sd::to_string(report.suite) << '\n'
            << "trials:        " << report.trials << '\n'
            << "holds:         " << report.holds << '\n'
            << "violated:      " << report.violated << '\n'
            << "indeterminate: " << report.indeterminate << '\n'
            << "min slack:     " << ordered_json(report.min_slack).dump() << '\n'
            << "verdict:       "
            << (report.violated == 0 ? green("all inequalities hold") : red("VIOLATIONS FOUND"))
            << '\n';
        rendered = out.str();
    } else {
        throw std::invalid_argument("verify supports --format table|json");
    }
    if (!merged.output.empty()) {
        write_file(merged.output, rendered);
    } else {
        std::cout << rendered;
    }
    return report.violated == 0 ? kExitOk : kExitViolation;
}

struct GapOptions {
    std::int64_t base = 0;
    std::string diffs_text;
    std::string lengths_text;
    std::string lambdas_text;
    std::string format = "table";
    std::string output;
    std::int64_t cap = sd::kDefaultCardinalityCap;
};

int cmd_gap(const GapOptions& opt) {
    sd::GapSpec spec;
    spec.base = opt.base;
    spec.diffs = parse_int_list(opt.diffs_text, "--diffs");
    spec.lengths = parse_int_list(opt.lengths_text, "--lengths");
    const sd::GapResult gap = sd::gap_generate(spec, opt.cap);
    const sd::Rational k = sd::doubling_constant(gap.set, sd::DoublingMode::sum, opt.cap);
    const std::int64_t dim = static_cast<std::int64_t>(spec.diffs.size());

    // 2^k bound on the doubling constant of a proper progression
    sd::BigUint doubling_rhs = sd::BigUint::pow(2, static_cast<std::uint64_t>(dim));
    doubling_rhs *= k.den;
    const bool doubling_in_bound = sd::BigUint::compare(sd::BigUint::from(k.num), doubling_rhs) <= 0;

    std::optional<bool> dilate_holds;
    std::uint64_t dilate_lhs = 0;
    sd::BigUint dilate_rhs;
    std::vector<std::int64_t> lambdas;
    std::int64_t lambda_sum = 0;
    if (!opt.lambdas_text.empty()) {
        lambdas = parse_int_list(opt.lambdas_text, "--lambdas");
        for (std::int64_t lambda : lambdas) {
            if (lambda < 1) throw std::invalid_argument("gap --lambdas must be positive integers");
            lambda_sum += lambda;
        }
        dilate_lhs = sd::dilate_sum(lambdas, gap.set, opt.cap).size();
        dilate_rhs = sd::BigUint::pow(static_cast<std::uint64_t>(lambda_sum),
                                      static_cast<std::uint64_t>(dim));
        dilate_rhs *= gap.set.size();
        dilate_holds = sd::BigUint::compare(sd::BigUint::from(dilate_lhs), dilate_rhs) <= 0;
    }

    if (opt.format == "json") {
        ordered_json j;
        j["spec"] = ordered_json::parse(sd::to_json(spec));
        j["set"] = ordered_json(gap.set.elements());
        j["size"] = gap.set.size();
        j["proper"] = gap.proper;
        j["doubling"] = sd::to_string(k);
        j["doubling_le_2_pow_k"] = doubling_in_bound;
        if (dilate_holds) {
            ordered_json d;
            d["lambdas"] = ordered_json(lambdas);
            d["lhs"] = dilate_lhs;
            d["rhs"] = std::to_string(lambda_sum) + "^" + std::to_string(dim) + " * " +
                       std::to_string(gap.set.size());
            d["holds"] = *dilate_holds;
            j["dilate_bound"] = std::move(d);
        }
        const std::string rendered = j.dump(2) + "\n";
        if (!opt.output.empty()) write_file(opt.output, rendered);
        else std::cout << rendered;
    } else if (opt.format == "table") {
        std::ostringstream out;
        out << "set (" << gap.set.size() << " elements): [";
        for (std::size_t i = 0; i < gap.set.size(); ++i) {
            if (i) out << ", ";
            out << gap.set.elements()[i];
        }
        out << "]\n"
            << "proper:   " << (gap.proper ? "true" : "false") << '\n'
            << "doubling: " << sd::to_string(k) << (doubling_in_bound ? " <= " : " > ") << "2^" << dim
            << '\n';
        if (dilate_holds) {
            out << "dilate bound: |sum lambda_i * P| = " << dilate_lhs << (*dilate_holds ? " <= " : " > ")
                << lambda_sum << "^" << dim << " * " << gap.set.size() << "  ("
                << (*dilate_holds ? green("holds") : red("violated")) << ")\n";
        }
        if (!opt.output.empty()) write_file(opt.output, out.str());
        else std::cout << out.str();
    } else {
        throw std::invalid_argument("gap supports --format table|json");
    }
    if (dilate_holds && !*dilate_holds) return kExitViolation;
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"sum-of-dilates workbench: exponent bounds, biclique decompositions, "
                 "inequality verification"};
    app.require_subcommand(1);

    BoundsOptions bounds_opt;
    CLI::App* bounds = app.add_subcommand("bounds", "compute every exponent bound for a coefficient tuple");
    bounds->add_option("--lambdas", bounds_opt.lambdas_text, "comma-separated nonzero coefficients");
    bounds->add_option("--repeat", bounds_opt.repeat, "repeat the coefficient list N times");
    bounds->add_option("--format", bounds_opt.format, "table|json|csv")->default_str("table");
    bounds->add_option("--method", bounds_opt.method, "all|plunnecke|bukh|binbound|decomposition|main");
    bounds->add_option("--output", bounds_opt.output, "write output to this file");
    bounds->add_option("--config", bounds_opt.config_file, "JSON config file (flags win)");
    bounds->add_option("--max-q", bounds_opt.max_q, "greedy seed-subset size bound");
    bounds->add_option("--time-budget", bounds_opt.time_budget, "greedy budget in ms (-1 = unlimited)");
    bounds->add_option("--max-edges", bounds_opt.max_edges, "exact solver edge limit");

    DecomposeOptions dec_opt;
    CLI::App* decompose = app.add_subcommand("decompose", "biclique-partition a digit graph or graph file");
    decompose->add_option("--lambdas", dec_opt.lambdas_text, "comma-separated nonzero coefficients");
    decompose->add_option("--repeat", dec_opt.repeat, "repeat the coefficient list N times");
    decompose->add_option("--graph", dec_opt.graph_file, "bipartite graph JSON file");
    decompose->add_option("--algo", dec_opt.algo, "star-rows|star-cols|greedy|exact");
    decompose->add_option("--format", dec_opt.format, "table|json");
    decompose->add_option("--output", dec_opt.output, "write the decomposition JSON here");
    decompose->add_option("--config", dec_opt.config_file, "JSON config file (flags win)");
    decompose->add_option("--max-q", dec_opt.max_q, "greedy seed-subset size bound");
    decompose->add_option("--time-budget", dec_opt.time_budget, "greedy budget in ms (-1 = unlimited)");
    decompose->add_option("--max-edges", dec_opt.max_edges, "exact solver edge limit");

    VerifyOptions ver_opt;
    CLI::App* verify = app.add_subcommand("verify", "run an inequality verification suite");
    verify->add_option("suite", ver_opt.suite, "ruzsa|plunnecke|corollary5|prop6|dilates")->required();
    verify->add_option("--universe", ver_opt.config.universe, "sets are drawn from {0..universe}");
    verify->add_option("--max-set-size", ver_opt.config.max_set_size, "maximum set size (min is 2)");
    verify->add_option("--max-h", ver_opt.config.max_h, "dilates: max tuple length");
    verify->add_option("--lambda-max", ver_opt.config.lambda_max, "dilates: max |lambda|");
    verify->add_option("--trials", ver_opt.config.trials, "random trials");
    verify->add_option("--seed", ver_opt.config.seed, "run seed");
    verify->add_flag("--exhaustive", ver_opt.config.exhaustive, "enumerate instead of sampling");
    verify->add_option("--max-fold", ver_opt.config.max_fold, "plunnecke l,m cap / prop6 k+l cap");
    verify->add_option("--max-p-sum", ver_opt.config.max_p_sum, "corollary5 p1+p2 cap");
    verify->add_option("--max-sets", ver_opt.config.max_sets, "prop6 set count cap");
    verify->add_option("--cap", ver_opt.config.cardinality_cap, "sumset cardinality cap");
    verify->add_option("--log", ver_opt.log_file, "write a JSONL trial log");
    verify->add_option("--format", ver_opt.format, "json|table");
    verify->add_option("--output", ver_opt.output, "write the suite report here");
    verify->add_option("--config", ver_opt.config_file, "JSON config file (flags win)");

    GapOptions gap_opt;
    CLI::App* gap = app.add_subcommand("gap", "generate a generalized arithmetic progression");
    gap->add_option("--base", gap_opt.base, "progression base");
    gap->add_option("--diffs", gap_opt.diffs_text, "comma-separated differences")->required();
    gap->add_option("--lengths", gap_opt.lengths_text, "comma-separated lengths")->required();
    gap->add_option("--lambdas", gap_opt.lambdas_text, "positive coefficients for the dilate check");
    gap->add_option("--format", gap_opt.format, "table|json");
    gap->add_option("--output", gap_opt.output, "write output to this file");
    gap->add_option("--cap", gap_opt.cap, "cardinality cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (bounds->parsed()) return cmd_bounds(bounds_opt, *bounds);
        if (decompose->parsed()) return cmd_decompose(dec_opt, *decompose);
        if (verify->parsed()) return cmd_verify(ver_opt, *verify);
        if (gap->parsed()) return cmd_gap(gap_opt);
    } catch (const sd::limit_exceeded& e) {
        std::cerr << "limit: " << e.what() << '\n';
        return kExitLimit;
    } catch (const sd::arithmetic_overflow& e) {
        std::cerr << "overflow: " << e.what() << '\n';
        return kExitLimit;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
