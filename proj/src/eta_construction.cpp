#include "betkit/eta_construction.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "betkit/errors.hpp"
#include "betkit/martingale.hpp"
#include "betkit/special_extension.hpp"

namespace betkit {

namespace {

void require_well_formed(const EtaInput& eta) {
    if (eta.opponents.empty()) {
        throw PreconditionViolated("input needs at least one opponent");
    }
    if (eta.priors.empty()) {
        throw PreconditionViolated("input needs at least one settled prefix");
    }
    if (eta.priors.front().size() != 0) {
        throw PreconditionViolated("the settled chain must start at the empty string");
    }
    for (std::size_t i = 0; i + 1 < eta.priors.size(); ++i) {
        if (!(eta.priors[i].size() < eta.priors[i + 1].size() &&
              eta.priors[i].is_prefix_of(eta.priors[i + 1]))) {
            throw PreconditionViolated("settled prefixes must form a strictly increasing chain");
        }
    }
}

void append_gamma(std::vector<bool>& bits, unsigned long value) {
    unsigned long width = 0;
    for (unsigned long v = value; v > 1; v >>= 1) {
        ++width;
    }
    bits.insert(bits.end(), width, false);
    for (unsigned long i = width + 1; i-- > 0;) {
        bits.push_back(((value >> i) & 1ul) != 0);
    }
}

// Largest value of the summed snapshots on the prefix chain of `node`.
Rational summed_running_max(const std::vector<const MartingaleTable*>& snapshots,
                            const BitString& node) {
    Rational best;
    for (std::size_t length = 0; length <= node.size(); ++length) {
        const BitString prefix = node.prefix(length);
        Rational total = 0;
        for (const MartingaleTable* table : snapshots) {
            total += table->at(prefix);
        }
        if (length == 0 || total > best) {
            best = total;
        }
    }
    return best;
}

}  // namespace

std::vector<bool> eta_serialize(const EtaInput& eta) {
    require_well_formed(eta);
    std::vector<bool> bits;
    append_gamma(bits, eta.opponents.size());
    for (const EtaOpponent& opponent : eta.opponents) {
        append_gamma(bits, opponent.index + 1);
    }
    append_gamma(bits, eta.priors.size());
    for (const BitString& prior : eta.priors) {
        append_gamma(bits, prior.size() + 1);
        for (std::size_t i = 0; i < prior.size(); ++i) {
            bits.push_back(prior.bit(i) != 0);
        }
    }
    return bits;
}

unsigned long eta_code_length(const EtaInput& eta) {
    return eta_serialize(eta).size();
}

unsigned long g_of_eta(const EtaInput& eta) {
    return 2 * eta_code_length(eta) + 2;
}

ConstructionTrace run_construction_eta(const EtaInput& eta, unsigned long budget_exponent,
                                       const Schedule& sched, unsigned long max_stage) {
    require_well_formed(eta);
    std::size_t min_depth = eta.opponents.front().stages.depth();
    for (const EtaOpponent& opponent : eta.opponents) {
        const ValidationReport shape = validate_stage_sequence(opponent.stages);
        if (!shape.ok()) {
            throw PreconditionViolated(
                "opponent " + std::to_string(opponent.index) + " stages invalid: " +
                (shape.problems.empty() ? std::string("(suppressed)") : shape.problems.front()));
        }
        if (opponent.stages.final().root() > 1) {
            throw PreconditionViolated("opponent " + std::to_string(opponent.index) +
                                       " root capital " +
                                       format_rational(opponent.stages.final().root()) +
                                       " exceeds 1");
        }
        min_depth = std::min(min_depth, opponent.stages.depth());
    }

    const unsigned long level = eta.priors.size();
    const ScheduleRow& row = sched.row(level);
    if (!row.s.fits_ulong_p()) {
        throw EnumerationTooLarge("level " + std::to_string(level) +
                                  " prefix length does not fit a machine word");
    }
    const unsigned long target = row.s.get_ui();
    const BitString& base = eta.priors.back();
    if (target > min_depth) {
        throw PreconditionViolated("level " + std::to_string(level) + " prefix length " +
                                   std::to_string(target) + " exceeds the opponent depth " +
                                   std::to_string(min_depth));
    }
    if (target < base.size()) {
        throw PreconditionViolated("level " + std::to_string(level) + " prefix length " +
                                   std::to_string(target) +
                                   " is shorter than the settled prefix");
    }
    if (target - base.size() > 24) {
        throw EnumerationTooLarge("level " + std::to_string(level) + " window of " +
                                  std::to_string(target - base.size()) +
                                  " bits exceeds the enumeration guard of 24");
    }

    const Rational hypothesis_bound = Rational(1) - pow2(-static_cast<long>(level));
    const Rational undefine_threshold =
        hypothesis_bound + pow2(-static_cast<long>(level) - 3);
    const Rational certificate_threshold =
        hypothesis_bound + pow2(-static_cast<long>(level) - 2);

    ConstructionTrace trace;
    trace.ledger = KraftLedger(pow2(-static_cast<long>(budget_exponent)));

    std::optional<BitString> current;
    Integer defines = 0;
    std::vector<const MartingaleTable*> snapshots(eta.opponents.size(), nullptr);

    for (unsigned long stage = 1; stage <= max_stage; ++stage) {
        const unsigned long s = stage - 1;
        if (s > min_depth) {
            trace.events.push_back({stage, TraceAction::Idle, 0, BitString(), std::nullopt});
            continue;
        }
        for (std::size_t j = 0; j < eta.opponents.size(); ++j) {
            const StageSequence& stages = eta.opponents[j].stages;
            snapshots[j] = &stages.stage(std::min<std::size_t>(stage, stages.count() - 1));
        }
        if (!(summed_running_max(snapshots, base) < hypothesis_bound)) {
            trace.events.push_back({stage, TraceAction::Idle, 0, BitString(), std::nullopt});
            continue;
        }

        if (!current.has_value()) {
            if (compare_with_pow2(Rational(defines + 1), row.p) <= 0) {
                std::vector<std::pair<MartingaleTable, PredictionFunction>> windows;
                windows.reserve(eta.opponents.size());
                for (std::size_t j = 0; j < eta.opponents.size(); ++j) {
                    windows.emplace_back(*snapshots[j], eta.opponents[j].f);
                }
                const std::optional<BitString> witness =
                    find_special_extension_multi(base, target, row.eps, windows);
                if (witness.has_value()) {
                    current = *witness;
                    defines += 1;
                    trace.events.push_back(
                        {stage, TraceAction::Define, level, *witness, std::nullopt});
                } else {
                    trace.events.push_back(
                        {stage, TraceAction::Stuck, level, base, std::nullopt});
                }
            } else {
                trace.events.push_back({stage, TraceAction::Idle, 0, BitString(), std::nullopt});
            }
        } else if (summed_running_max(snapshots, *current) > undefine_threshold) {
            trace.events.push_back({stage, TraceAction::Undefine, level, *current, std::nullopt});
            current.reset();
        } else {
            trace.events.push_back({stage, TraceAction::Idle, 0, BitString(), std::nullopt});
        }

        if (current.has_value()) {
            const std::optional<unsigned long> recorded =
                trace.ledger.description_length(*current);
            if (!recorded.has_value() || Rational(*recorded) > row.q * Rational(row.s)) {
                const unsigned long length = default_description_length(row);
                trace.ledger.request(*current, length);
                trace.events.push_back({stage, TraceAction::Request, level, *current, length});
            }
            const Rational capital = summed_running_max(snapshots, *current);
            const bool within = capital <= certificate_threshold;
            trace.certificates.push_back(
                {stage, level, *current, capital, certificate_threshold, within});
        }
    }

    trace.prefixes.reserve(eta.priors.size() + 1);
    for (const BitString& prior : eta.priors) {
        trace.prefixes.emplace_back(prior);
    }
    trace.prefixes.push_back(current);
    return trace;
}

}  // namespace betkit
