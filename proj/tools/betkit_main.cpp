// Command-line front door: parses and serializes the domain objects, runs the
// constructions and checks, and emits machine-readable reports. Exit codes:
// 0 success, 1 domain error (structured {"error": ...} report on stderr),
// 2 usage error (bad verb, bad flag, unreadable file).

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "betkit/construction.hpp"
#include "betkit/decompose.hpp"
#include "betkit/errors.hpp"
#include "betkit/eta_construction.hpp"
#include "betkit/hoeffding.hpp"
#include "betkit/martingale.hpp"
#include "betkit/rng.hpp"
#include "betkit/schedule.hpp"
#include "betkit/serialization.hpp"
#include "betkit/special_extension.hpp"
#include "betkit/stest.hpp"
#include "betkit/strategy_rule.hpp"
#include "betkit/trajectory.hpp"
#include "betkit/ville.hpp"

namespace {

using betkit::BitString;
using betkit::Json;
using betkit::MartingaleTable;
using betkit::PredictionFunction;
using betkit::Rational;
using betkit::StageSequence;
using betkit::StrategyRule;

// Flag-level mistakes: unreadable files, malformed flag values, unknown
// strategy names. Mapped to exit code 2, unlike betkit::Error (exit 1).
class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

// ---------------------------------------------------------------------------
// Flag parsing helpers
// ---------------------------------------------------------------------------

void require_readable(const std::string& path) {
    std::ifstream probe(path);
    if (!probe) {
        throw UsageError("cannot read file: " + path);
    }
}

Rational rational_flag(const std::string& text, const std::string& flag) {
    try {
        return betkit::parse_rational(text);
    } catch (const betkit::Error& error) {
        throw UsageError(flag + ": " + error.what());
    }
}

BitString bits_flag(const std::string& text, const std::string& flag) {
    try {
        return BitString::parse(text);
    } catch (const betkit::Error& error) {
        throw UsageError(flag + ": " + error.what());
    }
}

unsigned long unsigned_arg(const std::string& text, const std::string& what) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
        throw UsageError(what + " must be a decimal integer, got \"" + text + "\"");
    }
    try {
        return std::stoul(text);
    } catch (const std::exception&) {
        throw UsageError(what + " is out of range: \"" + text + "\"");
    }
}

Json load_json(const std::string& path) {
    require_readable(path);
    return betkit::read_json_file(path);
}

MartingaleTable load_table(const std::string& path) {
    return betkit::table_from_json(load_json(path));
}

// "0" and "1" name the constant predictors; anything else is read as a
// predictor document.
PredictionFunction prediction_spec(const std::string& spec) {
    if (spec == "0" || spec == "1") {
        return PredictionFunction::constant(spec == "1" ? 1 : 0);
    }
    return betkit::prediction_from_json(load_json(spec));
}

// An opponent file holds either a stage sequence ({"stages": [...]}) or a
// separable increment script ({"zero_increments": ..., "one_increments":
// ...}), recognized by its keys; the latter is combined into its stage stack.
StageSequence load_stage_sequence(const std::string& path) {
    Json document = load_json(path);
    if (document.is_object() && document.contains("zero_increments")) {
        return betkit::separable_opponent_from_json(document).combined();
    }
    return betkit::stage_sequence_from_json(document);
}

// ---------------------------------------------------------------------------
// Output helpers
// ---------------------------------------------------------------------------

void emit_text(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) {
        throw UsageError("cannot write file: " + out_path);
    }
    out << text;
}

void emit_json(const Json& document, const std::string& out_path) {
    emit_text(betkit::json_to_string(document), out_path);
}

// Decimal sidecar values requested by --report-decimals. Report-only: the
// doubles never feed back into any computation.
void add_decimal(Json& document, const std::string& key, const Rational& value,
                 bool decimals) {
    if (decimals) {
        document[key + "_decimal"] = value.get_d();
    }
}

void fail_validation(const betkit::ValidationReport& report, const std::string& what) {
    Json problems = Json::array();
    for (const std::string& problem : report.problems) problems.push_back(problem);
    Json document;
    document["error"] = what;
    document["problems"] = std::move(problems);
    document["suppressed"] = report.suppressed;
    std::cerr << betkit::json_to_string(document);
    std::exit(1);
}

// ---------------------------------------------------------------------------
// Strategy specifications (report verb)
// ---------------------------------------------------------------------------

// Grammar: name[:key=value[,key=value...]]. Names: hoeffding (q, f),
// mixture (trunc), backer (initial), sniper (lead, start, initial),
// snipermix (terms), constant (value).
std::map<std::string, std::string> spec_params(const std::string& text,
                                               const std::string& name) {
    std::map<std::string, std::string> params;
    if (text.empty()) {
        return params;
    }
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t equals = item.find('=');
        if (equals == std::string::npos || equals == 0) {
            throw UsageError("strategy " + name + ": malformed parameter \"" + item + "\"");
        }
        std::string key = item.substr(0, equals);
        if (!params.emplace(key, item.substr(equals + 1)).second) {
            throw UsageError("strategy " + name + ": duplicate parameter \"" + key + "\"");
        }
    }
    return params;
}

std::string take_param(std::map<std::string, std::string>& params, const std::string& key,
                       const std::string& name, const char* fallback = nullptr) {
    auto it = params.find(key);
    if (it == params.end()) {
        if (fallback != nullptr) {
            return fallback;
        }
        throw UsageError("strategy " + name + ": missing parameter \"" + key + "\"");
    }
    std::string value = it->second;
    params.erase(it);
    return value;
}

// Flat strategy used as the trivial baseline in reports.
class ConstantCapital : public betkit::RuleState {
public:
    explicit ConstantCapital(Rational value) : value_(std::move(value)) {}

    Rational value() const override { return value_; }
    void advance(int) override {}
    std::unique_ptr<betkit::RuleState> clone() const override {
        return std::make_unique<ConstantCapital>(value_);
    }

private:
    Rational value_;
};

StrategyRule rule_from_spec(const std::string& spec) {
    std::size_t colon = spec.find(':');
    std::string name = spec.substr(0, colon);
    auto params = spec_params(colon == std::string::npos ? "" : spec.substr(colon + 1), name);

    std::optional<StrategyRule> rule;
    if (name == "hoeffding") {
        Rational q = rational_flag(take_param(params, "q", name), "strategy hoeffding q");
        PredictionFunction f = prediction_spec(take_param(params, "f", name, "0"));
        rule = betkit::hoeffding_rule(q, f);
    } else if (name == "mixture") {
        rule = betkit::frequency_mixture_rule(
            unsigned_arg(take_param(params, "trunc", name), "strategy mixture trunc"));
    } else if (name == "backer") {
        rule = betkit::gap_backer_rule(
            rational_flag(take_param(params, "initial", name), "strategy backer initial"));
    } else if (name == "sniper") {
        unsigned long lead = unsigned_arg(take_param(params, "lead", name), "sniper lead");
        unsigned long start =
            unsigned_arg(take_param(params, "start", name, "0"), "sniper start");
        Rational initial =
            rational_flag(take_param(params, "initial", name), "strategy sniper initial");
        rule = betkit::lead_sniper_rule(lead, start, initial);
    } else if (name == "snipermix") {
        rule = betkit::sniper_mixture_rule(
            unsigned_arg(take_param(params, "terms", name), "strategy snipermix terms"));
    } else if (name == "constant") {
        Rational value =
            rational_flag(take_param(params, "value", name), "strategy constant value");
        if (value < 0) {
            throw UsageError("strategy constant: value must be nonnegative");
        }
        rule = StrategyRule("constant " + betkit::format_rational(value),
                            [value] { return std::make_unique<ConstantCapital>(value); });
    } else {
        throw UsageError("unknown strategy \"" + name + "\"");
    }
    if (!params.empty()) {
        throw UsageError("strategy " + name + ": unknown parameter \"" +
                         params.begin()->first + "\"");
    }
    return *rule;
}

// ---------------------------------------------------------------------------
// Verbs
// ---------------------------------------------------------------------------

struct ValidateOptions {
    std::string table_path;
    std::string stest_path;
    std::string opponent_path;
    std::string stages_path;
};

void run_validate(const ValidateOptions& options) {
    betkit::ValidationReport report;
    if (!options.table_path.empty()) {
        report = betkit::validate_martingale(load_table(options.table_path));
    } else if (!options.stest_path.empty()) {
        report = betkit::validate_stest(betkit::stest_from_json(load_json(options.stest_path)));
    } else if (!options.opponent_path.empty()) {
        report = betkit::validate_separable_opponent(
            betkit::separable_opponent_from_json(load_json(options.opponent_path)));
    } else {
        report = betkit::validate_stage_sequence(load_stage_sequence(options.stages_path));
    }
    if (!report.ok()) {
        fail_validation(report, "validation failed");
    }
    std::cout << "ok\n";
}

struct EvalOptions {
    std::string table_path;
    std::string path_bits;
    std::string bits_path;
    std::string out_path;
    bool csv = false;
};

void run_eval(const EvalOptions& options) {
    MartingaleTable table = load_table(options.table_path);
    BitString path;
    if (!options.bits_path.empty()) {
        require_readable(options.bits_path);
        path = betkit::read_bits_file(options.bits_path);
    } else {
        path = bits_flag(options.path_bits, "--path");
    }
    betkit::CapitalTrajectory trajectory = betkit::evaluate(table, path);
    if (options.csv) {
        emit_text(betkit::trajectory_to_csv(trajectory), options.out_path);
    } else {
        emit_json(betkit::trajectory_to_json(trajectory), options.out_path);
    }
}

struct DecomposeOptions {
    std::string table_path;
    std::string out_zero;
    std::string out_one;
};

void run_decompose(const DecomposeOptions& options) {
    betkit::ProductDecomposition factors =
        betkit::product_decompose(load_table(options.table_path));
    if (!options.out_zero.empty() && !options.out_one.empty()) {
        betkit::write_json_file(options.out_zero, betkit::table_to_json(factors.zero_sided));
        betkit::write_json_file(options.out_one, betkit::table_to_json(factors.one_sided));
        return;
    }
    Json document;
    document["zero_sided"] = betkit::table_to_json(factors.zero_sided);
    document["one_sided"] = betkit::table_to_json(factors.one_sided);
    emit_json(document, "");
}

struct HoeffdingOptions {
    std::string q_text;
    std::string f_spec = "0";
    std::size_t depth = 0;
    std::string out_path;
    bool rate_only = false;
    bool decimals = false;
};

void run_hoeffding(const HoeffdingOptions& options) {
    Rational q = rational_flag(options.q_text, "--q");
    if (options.rate_only) {
        betkit::RateEnclosure rate = betkit::r_of_q(q);
        Json document;
        document["q"] = betkit::format_rational(q);
        document["lower"] = betkit::format_rational(rate.lower.value());
        add_decimal(document, "lower", rate.lower.value(), options.decimals);
        document["upper"] = betkit::format_rational(rate.upper.value());
        add_decimal(document, "upper", rate.upper.value(), options.decimals);
        document["base"] = rate.base;
        document["base_power"] = betkit::format_rational(rate.base_power);
        emit_json(document, options.out_path);
        return;
    }
    MartingaleTable table =
        betkit::hoeffding(q, prediction_spec(options.f_spec), options.depth);
    emit_json(betkit::table_to_json(table), options.out_path);
}

struct TailCountOptions {
    std::size_t n = 0;
    std::string q_text;
    std::string f_spec = "0";
    bool decimals = false;
};

void run_tailcount(const TailCountOptions& options) {
    Rational q = rational_flag(options.q_text, "--q");
    betkit::TailCount tail =
        betkit::hoeffding_tail_count(options.n, q, prediction_spec(options.f_spec));
    Json document;
    document["n"] = options.n;
    document["q"] = betkit::format_rational(q);
    document["count"] = tail.count.get_str();
    document["bound_ok"] = tail.bound_ok;
    if (options.decimals) {
        document["count_decimal"] = tail.count.get_d();
    }
    emit_json(document, "");
}

struct MixtureOptions {
    std::size_t depth = 0;
    std::size_t truncation = 0;
    std::string out_path;
    bool parts = false;
    std::string out_zero;
    std::string out_one;
};

void run_mixture(const MixtureOptions& options) {
    if (options.parts) {
        betkit::FrequencyMixtureParts parts =
            betkit::frequency_mixture_parts(options.depth, options.truncation);
        if (!options.out_zero.empty() && !options.out_one.empty()) {
            betkit::write_json_file(options.out_zero, betkit::table_to_json(parts.zero_sided));
            betkit::write_json_file(options.out_one, betkit::table_to_json(parts.one_sided));
            return;
        }
        Json document;
        document["zero_sided"] = betkit::table_to_json(parts.zero_sided);
        document["one_sided"] = betkit::table_to_json(parts.one_sided);
        emit_json(document, options.out_path);
        return;
    }
    MartingaleTable table = betkit::frequency_mixture(options.depth, options.truncation);
    emit_json(betkit::table_to_json(table), options.out_path);
}

struct DimStrategyOptions {
    std::string test_path;
    std::string eps_text;
    std::size_t depth = 0;
    std::string out_path;
    bool decimals = false;
};

void run_dimstrategy(const DimStrategyOptions& options) {
    betkit::STest test = betkit::stest_from_json(load_json(options.test_path));
    Rational eps = rational_flag(options.eps_text, "--eps");
    betkit::DimStrategy strategy = betkit::dim_strategy(test, eps, options.depth);
    Json weights = Json::array();
    for (const Rational& weight : strategy.level_weights) {
        weights.push_back(betkit::format_rational(weight));
    }
    Json document;
    document["start_index"] = strategy.start_index;
    document["level_weights"] = std::move(weights);
    document["root"] = betkit::format_rational(strategy.table.root());
    add_decimal(document, "root", strategy.table.root(), options.decimals);
    if (options.out_path.empty()) {
        document["table"] = betkit::table_to_json(strategy.table);
        emit_json(document, "");
    } else {
        betkit::write_json_file(options.out_path, betkit::table_to_json(strategy.table));
        emit_json(document, "");
    }
}

struct SpecialExtOptions {
    std::string table_path;
    std::string sigma_bits;
    std::string eps_text;
    std::optional<unsigned long> gap;
    std::optional<unsigned long> target_length;
    std::optional<std::string> candidate;
    bool bound = false;
    std::size_t bound_opponents = 1;
};

void run_specialext(const SpecialExtOptions& options) {
    Rational eps = rational_flag(options.eps_text, "--eps");
    if (options.bound) {
        std::cout << betkit::special_gap_bound_multi(eps, options.bound_opponents) << "\n";
        return;
    }
    if (options.table_path.empty()) {
        throw UsageError("--table is required unless --bound is given");
    }
    MartingaleTable stage = load_table(options.table_path);
    BitString base = bits_flag(options.sigma_bits, "--sigma");
    if (options.candidate.has_value()) {
        bool special = betkit::is_special_extension(
            base, bits_flag(*options.candidate, "--candidate"), eps, stage);
        std::cout << (special ? "true" : "false") << "\n";
        return;
    }
    std::size_t target = 0;
    if (options.target_length.has_value()) {
        target = *options.target_length;
    } else if (options.gap.has_value()) {
        target = base.size() + *options.gap;
    } else {
        throw UsageError("one of --gap, --target-length, --candidate, --bound is required");
    }
    std::optional<BitString> found =
        betkit::find_special_extension(base, target, eps, stage);
    if (found.has_value()) {
        std::cout << found->str() << "\n";
    } else {
        std::cout << "not-found\n";
    }
}

struct ScheduleOptions {
    std::string profile;
    unsigned long levels = 1;
    std::string eps_text;
    std::vector<std::string> q_texts;
    std::optional<unsigned long> budget_exponent;
    std::string out_path;
};

std::vector<Rational> q_levels_from(const std::vector<std::string>& texts) {
    std::vector<Rational> q_levels;
    q_levels.reserve(texts.size());
    for (const std::string& text : texts) {
        q_levels.push_back(rational_flag(text, "--q"));
    }
    return q_levels;
}

void run_schedule(const ScheduleOptions& options) {
    betkit::Schedule sched;
    if (options.profile == "paper") {
        sched = betkit::schedule_paper(options.levels);
    } else if (options.profile == "relaxed") {
        if (options.eps_text.empty() || options.q_texts.empty()) {
            throw UsageError("profile relaxed needs --eps and at least one --q");
        }
        sched = betkit::schedule_relaxed(rational_flag(options.eps_text, "--eps"),
                                         q_levels_from(options.q_texts));
    } else if (options.profile == "eta-budget") {
        if (!options.budget_exponent.has_value() || options.eps_text.empty() ||
            options.q_texts.empty()) {
            throw UsageError("profile eta-budget needs --budget-exponent, --eps, and --q");
        }
        sched = betkit::schedule_eta_budget(*options.budget_exponent,
                                            rational_flag(options.eps_text, "--eps"),
                                            q_levels_from(options.q_texts));
    } else {
        throw UsageError("unknown profile \"" + options.profile +
                         "\" (expected paper, relaxed, or eta-budget)");
    }
    emit_json(betkit::schedule_to_json(sched), options.out_path);
}

struct AdversaryOptions {
    std::string mode = "main";
    std::vector<std::string> opponent_paths;
    std::vector<std::string> pred_specs;
    std::vector<std::string> prior_bits;
    std::vector<unsigned long> indices;
    std::string schedule_path;
    std::string eps_text;
    std::vector<std::string> q_texts;
    std::optional<unsigned long> budget_exponent;
    unsigned long max_stage = 0;
    std::string out_path;
};

betkit::Schedule adversary_schedule(const AdversaryOptions& options,
                                    std::optional<unsigned long> eta_budget) {
    if (!options.schedule_path.empty()) {
        return betkit::schedule_from_json(load_json(options.schedule_path));
    }
    if (options.eps_text.empty() || options.q_texts.empty()) {
        throw UsageError("either --schedule or both --eps and --q are required");
    }
    Rational eps = rational_flag(options.eps_text, "--eps");
    if (eta_budget.has_value()) {
        return betkit::schedule_eta_budget(*eta_budget, eps, q_levels_from(options.q_texts));
    }
    return betkit::schedule_relaxed(eps, q_levels_from(options.q_texts));
}

void run_adversary_main(const AdversaryOptions& options) {
    if (options.opponent_paths.size() != 1) {
        throw UsageError("mode main takes exactly one --opponent");
    }
    StageSequence opponent = load_stage_sequence(options.opponent_paths.front());
    betkit::Schedule sched = adversary_schedule(options, std::nullopt);
    betkit::ConstructionTrace trace =
        betkit::run_construction(opponent, sched, options.max_stage);
    betkit::ValidationReport report = betkit::validate_trace(trace, opponent, sched);
    if (!report.ok()) {
        fail_validation(report, "trace validation failed");
    }
    emit_json(betkit::trace_to_json(trace), options.out_path);
}

void run_adversary_eta(const AdversaryOptions& options) {
    if (options.opponent_paths.empty()) {
        throw UsageError("mode eta needs at least one --opponent");
    }
    if (!options.pred_specs.empty() &&
        options.pred_specs.size() != options.opponent_paths.size()) {
        throw UsageError("--pred count must match --opponent count");
    }
    if (!options.indices.empty() && options.indices.size() != options.opponent_paths.size()) {
        throw UsageError("--index count must match --opponent count");
    }
    betkit::EtaInput eta;
    for (std::size_t j = 0; j < options.opponent_paths.size(); ++j) {
        betkit::EtaOpponent opponent;
        opponent.index = options.indices.empty() ? j : options.indices[j];
        opponent.f = options.pred_specs.empty() ? PredictionFunction::constant(0)
                                                : prediction_spec(options.pred_specs[j]);
        opponent.stages = load_stage_sequence(options.opponent_paths[j]);
        eta.opponents.push_back(std::move(opponent));
    }
    if (options.prior_bits.empty()) {
        eta.priors.push_back(BitString());
    } else {
        for (const std::string& text : options.prior_bits) {
            eta.priors.push_back(bits_flag(text, "--prior"));
        }
    }
    unsigned long g = betkit::g_of_eta(eta);
    unsigned long budget = options.budget_exponent.value_or(g);
    betkit::Schedule sched = adversary_schedule(options, budget);
    betkit::ConstructionTrace trace =
        betkit::run_construction_eta(eta, budget, sched, options.max_stage);
    Json document;
    document["g"] = g;
    document["code_length"] = betkit::eta_code_length(eta);
    document["budget_exponent"] = budget;
    document["trace"] = betkit::trace_to_json(trace);
    emit_json(document, options.out_path);
}

void run_adversary(const AdversaryOptions& options) {
    if (options.mode == "main") {
        run_adversary_main(options);
    } else if (options.mode == "eta") {
        run_adversary_eta(options);
    } else {
        throw UsageError("unknown mode \"" + options.mode + "\" (expected main or eta)");
    }
}

struct ReportOptions {
    std::vector<std::string> gen_biased;
    std::string strategy_spec;
    std::string bits_path;
    std::string format = "csv";
    std::string out_path;
};

void run_report(const ReportOptions& options) {
    if (!options.gen_biased.empty()) {
        Rational zero_probability = rational_flag(options.gen_biased[0], "--gen-biased p");
        std::uint64_t seed = unsigned_arg(options.gen_biased[1], "--gen-biased seed");
        std::size_t length = unsigned_arg(options.gen_biased[2], "--gen-biased len");
        BitString bits = betkit::biased_bits(zero_probability, seed, length);
        if (options.out_path.empty()) {
            std::cout << bits.str() << "\n";
        } else {
            betkit::write_bits_file(options.out_path, bits);
        }
        return;
    }
    if (options.strategy_spec.empty() || options.bits_path.empty()) {
        throw UsageError("report needs --strategy and --bits (or --gen-biased)");
    }
    StrategyRule rule = rule_from_spec(options.strategy_spec);
    require_readable(options.bits_path);
    BitString path = betkit::read_bits_file(options.bits_path);
    betkit::CapitalTrajectory trajectory = betkit::evaluate(rule, path);
    if (options.format == "csv") {
        emit_text(betkit::trajectory_to_csv(trajectory), options.out_path);
        return;
    }
    if (options.format != "json") {
        throw UsageError("unknown format \"" + options.format + "\" (expected csv or json)");
    }
    Json document = betkit::trajectory_to_json(trajectory);
    document["strategy"] = rule.description();
    if (!path.empty()) {
        betkit::GrowthReport growth = betkit::growth_exponent(trajectory);
        if (std::isfinite(growth.final_exponent)) {
            document["final_exponent"] = growth.final_exponent;
        } else {
            document["final_exponent"] = "-inf";
        }
        if (std::isfinite(growth.max_exponent)) {
            document["max_exponent"] = growth.max_exponent;
        } else {
            document["max_exponent"] = "-inf";
        }
    }
    emit_json(document, options.out_path);
}

}  // namespace

// ---------------------------------------------------------------------------
// Dispatch
// ---------------------------------------------------------------------------

int main(int argc, char** argv) {
    CLI::App app{"Exact betting-strategy toolkit"};
    app.require_subcommand(1);

    ValidateOptions validate_options;
    auto* validate = app.add_subcommand("validate", "Check a serialized object");
    auto* validate_input = validate->add_option_group("input");
    validate_input->add_option("--table", validate_options.table_path, "Capital table");
    validate_input->add_option("--stest", validate_options.stest_path, "Layered cover");
    validate_input->add_option("--opponent", validate_options.opponent_path,
                               "Separable increment script");
    validate_input->add_option("--stages", validate_options.stages_path, "Stage sequence");
    validate_input->require_option(1);
    validate->callback([&] { run_validate(validate_options); });

    EvalOptions eval_options;
    auto* eval = app.add_subcommand("eval", "Capital along a play path");
    eval->add_option("--table", eval_options.table_path, "Capital table")->required();
    auto* eval_path = eval->add_option("--path", eval_options.path_bits, "Play path bits");
    auto* eval_bits = eval->add_option("--bits", eval_options.bits_path, "Play path file");
    eval_path->excludes(eval_bits);
    eval->add_flag("--csv", eval_options.csv, "Emit trajectory rows instead of JSON");
    eval->add_option("--out", eval_options.out_path, "Write output to a file");
    eval->callback([&] {
        if (eval_path->count() == 0 && eval_bits->count() == 0) {
            throw UsageError("eval needs --path or --bits");
        }
        run_eval(eval_options);
    });

    DecomposeOptions decompose_options;
    auto* decompose = app.add_subcommand("decompose", "Factor a table into sided parts");
    decompose->add_option("--table", decompose_options.table_path, "Capital table")->required();
    decompose->add_option("--out-n", decompose_options.out_zero, "0-sided factor file");
    decompose->add_option("--out-t", decompose_options.out_one, "1-sided factor file");
    decompose->callback([&] { run_decompose(decompose_options); });

    HoeffdingOptions hoeffding_options;
    auto* hoeff = app.add_subcommand("hoeffding", "Exponential prediction follower");
    hoeff->add_option("--q", hoeffding_options.q_text, "Bias in (0,1)")->required();
    hoeff->add_option("--f", hoeffding_options.f_spec, "Predictor: 0, 1, or a file");
    hoeff->add_option("--depth", hoeffding_options.depth, "Table depth");
    hoeff->add_flag("--rate", hoeffding_options.rate_only, "Emit the growth-rate enclosure");
    hoeff->add_option("--out", hoeffding_options.out_path, "Write output to a file");
    hoeff->add_flag("--report-decimals", hoeffding_options.decimals,
                    "Add decimal approximations");
    hoeff->callback([&] { run_hoeffding(hoeffding_options); });

    TailCountOptions tail_options;
    auto* tail = app.add_subcommand("tailcount", "Census of high-match strings");
    tail->add_option("--n", tail_options.n, "String length")->required();
    tail->add_option("--q", tail_options.q_text, "Bias in (1/2,1)")->required();
    tail->add_option("--f", tail_options.f_spec, "Predictor: 0, 1, or a file");
    tail->add_flag("--report-decimals", tail_options.decimals, "Add decimal approximations");
    tail->callback([&] { run_tailcount(tail_options); });

    MixtureOptions mixture_options;
    auto* mixture = app.add_subcommand("mixture", "Two-sided frequency mixture");
    mixture->add_option("--depth", mixture_options.depth, "Table depth")->required();
    mixture->add_option("--truncation", mixture_options.truncation, "Component count")
        ->required();
    mixture->add_flag("--parts", mixture_options.parts, "Emit the sided halves");
    mixture->add_option("--out", mixture_options.out_path, "Write output to a file");
    mixture->add_option("--out-zero", mixture_options.out_zero, "0-sided half file");
    mixture->add_option("--out-one", mixture_options.out_one, "1-sided half file");
    mixture->callback([&] { run_mixture(mixture_options); });

    DimStrategyOptions dim_options;
    auto* dim = app.add_subcommand("dimstrategy", "Betting strategy from a layered cover");
    dim->add_option("--test", dim_options.test_path, "Layered cover file")->required();
    dim->add_option("--eps", dim_options.eps_text, "Root budget in (0,1)")->required();
    dim->add_option("--depth", dim_options.depth, "Table depth")->required();
    dim->add_option("--out", dim_options.out_path, "Write the table to a file");
    dim->add_flag("--report-decimals", dim_options.decimals, "Add decimal approximations");
    dim->callback([&] { run_dimstrategy(dim_options); });

    SpecialExtOptions special_options;
    std::string special_candidate;
    unsigned long special_gap = 0;
    unsigned long special_target = 0;
    auto* special = app.add_subcommand("specialext", "Tame extensions of a prefix");
    special->add_option("--table", special_options.table_path, "Stage capital table");
    special->add_option("--sigma", special_options.sigma_bits, "Base prefix bits");
    special->add_option("--eps", special_options.eps_text, "Accuracy in (0,1)")->required();
    auto* special_gap_option =
        special->add_option("--gap", special_gap, "Window length to search");
    auto* special_target_option =
        special->add_option("--target-length", special_target, "Absolute length to search");
    auto* special_candidate_option =
        special->add_option("--candidate", special_candidate, "Check this extension");
    special->add_flag("--bound", special_options.bound, "Print the guaranteed window length");
    special->add_option("--opponents", special_options.bound_opponents,
                        "Simultaneous windows for --bound");
    special_gap_option->excludes(special_target_option);
    special_gap_option->excludes(special_candidate_option);
    special_target_option->excludes(special_candidate_option);
    special->callback([&] {
        if (special_gap_option->count() > 0) special_options.gap = special_gap;
        if (special_target_option->count() > 0) special_options.target_length = special_target;
        if (special_candidate_option->count() > 0) special_options.candidate = special_candidate;
        run_specialext(special_options);
    });

    AdversaryOptions adversary_options;
    unsigned long adversary_budget = 0;
    auto* adversary = app.add_subcommand("adversary", "Staged diagonalization runs");
    adversary->add_option("--mode", adversary_options.mode, "main or eta");
    adversary->add_option("--opponent", adversary_options.opponent_paths,
                          "Opponent file (repeatable in mode eta)");
    adversary->add_option("--pred", adversary_options.pred_specs,
                          "Predictor per opponent: 0, 1, or a file (mode eta)");
    adversary->add_option("--prior", adversary_options.prior_bits,
                          "Settled prefix chain (mode eta)");
    adversary->add_option("--index", adversary_options.indices,
                          "Enumeration index per opponent (mode eta)");
    adversary->add_option("--schedule", adversary_options.schedule_path,
                          "Schedule file (overrides --eps/--q)");
    adversary->add_option("--eps", adversary_options.eps_text, "Accuracy in (0,1)");
    adversary->add_option("--q", adversary_options.q_texts,
                          "Description coefficient per level");
    auto* adversary_budget_option = adversary->add_option(
        "--budget-exponent", adversary_budget, "Ledger budget exponent (mode eta)");
    adversary->add_option("--max-stage", adversary_options.max_stage, "Stages to run")
        ->required();
    adversary->add_option("--out", adversary_options.out_path, "Write the trace to a file");
    adversary->callback([&] {
        if (adversary_budget_option->count() > 0) {
            adversary_options.budget_exponent = adversary_budget;
        }
        run_adversary(adversary_options);
    });

    ScheduleOptions schedule_options;
    unsigned long schedule_budget = 0;
    auto* schedule = app.add_subcommand("schedule", "Exact construction parameters");
    schedule->add_option("--profile", schedule_options.profile,
                         "paper, relaxed, or eta-budget")
        ->required();
    schedule->add_option("--levels", schedule_options.levels, "Levels (profile paper)");
    schedule->add_option("--eps", schedule_options.eps_text, "Accuracy in (0,1)");
    schedule->add_option("--q", schedule_options.q_texts,
                         "Description coefficient per level");
    auto* schedule_budget_option = schedule->add_option(
        "--budget-exponent", schedule_budget, "Budget exponent (profile eta-budget)");
    schedule->add_option("--out", schedule_options.out_path, "Write output to a file");
    schedule->callback([&] {
        if (schedule_budget_option->count() > 0) {
            schedule_options.budget_exponent = schedule_budget;
        }
        run_schedule(schedule_options);
    });

    ReportOptions report_options;
    auto* report = app.add_subcommand("report", "Trajectory reports and fixtures");
    report->add_option("--gen-biased", report_options.gen_biased,
                       "Generate bits: zero-probability seed length")
        ->expected(3);
    report->add_option("--strategy", report_options.strategy_spec,
                       "Strategy spec, e.g. hoeffding:q=3/4,f=0");
    report->add_option("--bits", report_options.bits_path, "Play path file");
    report->add_option("--format", report_options.format, "csv or json");
    report->add_option("--out", report_options.out_path, "Write output to a file");
    report->callback([&] { run_report(report_options); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& error) {
        int code = app.exit(error);
        return code == 0 ? 0 : 2;
    } catch (const UsageError& error) {
        Json document;
        document["error"] = error.what();
        std::cerr << betkit::json_to_string(document);
        return 2;
    } catch (const betkit::Error& error) {
        Json document;
        document["error"] = error.what();
        std::cerr << betkit::json_to_string(document);
        return 1;
    }
    return 0;
}
