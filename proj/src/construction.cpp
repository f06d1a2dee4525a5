#include "betkit/construction.hpp"

#include <algorithm>
#include <string>

#include "betkit/errors.hpp"
#include "betkit/martingale.hpp"
#include "betkit/special_extension.hpp"

namespace betkit {

namespace {

// Capital ceiling for a defined level-n prefix: 1/2 + sum_{i<n} 2^{-i-2},
// which telescopes to 1 - 2^{-n-1}.
Rational level_threshold(unsigned long n) {
    return Rational(1) - pow2(-static_cast<long>(n) - 1);
}

std::size_t snapshot_index(unsigned long stage, std::size_t stage_count) {
    return std::min<std::size_t>(stage, stage_count - 1);
}

unsigned long row_length(const ScheduleRow& row) {
    if (!row.s.fits_ulong_p()) {
        throw EnumerationTooLarge("level " + std::to_string(row.n) +
                                  " prefix length does not fit a machine word");
    }
    return row.s.get_ui();
}

// Shared precondition checks: the opponent must validate with root capital
// below 1/2, and every reachable row must fit the opponent's depth with a
// searchable window.
void check_inputs(const StageSequence& opponent, const Schedule& sched,
                  unsigned long reachable) {
    const ValidationReport shape = validate_stage_sequence(opponent);
    if (!shape.ok()) {
        throw PreconditionViolated("opponent stages invalid: " +
                                   (shape.problems.empty() ? std::string("(suppressed)")
                                                           : shape.problems.front()));
    }
    if (!(opponent.final().root() < Rational(1, 2))) {
        throw PreconditionViolated("opponent root capital " +
                                   format_rational(opponent.final().root()) +
                                   " must stay below 1/2");
    }
    unsigned long previous_length = 0;
    for (unsigned long n = 1; n <= reachable; ++n) {
        const ScheduleRow& row = sched.row(n);
        const unsigned long length = row_length(row);
        if (length > opponent.depth()) {
            throw PreconditionViolated("level " + std::to_string(n) + " prefix length " +
                                       std::to_string(length) +
                                       " exceeds the opponent depth " +
                                       std::to_string(opponent.depth()));
        }
        if (length < previous_length) {
            throw PreconditionViolated("level " + std::to_string(n) + " prefix length " +
                                       std::to_string(length) +
                                       " shrinks below the previous level");
        }
        if (length - previous_length > 24) {
            throw EnumerationTooLarge("level " + std::to_string(n) + " window of " +
                                      std::to_string(length - previous_length) +
                                      " bits exceeds the enumeration guard of 24");
        }
        previous_length = length;
    }
}

unsigned long reachable_levels(const Schedule& sched, unsigned long max_stage) {
    const unsigned long by_stage = max_stage == 0 ? 0 : max_stage - 1;
    return std::min<unsigned long>(sched.levels(), by_stage);
}

}  // namespace

const char* to_string(TraceAction action) {
    switch (action) {
        case TraceAction::Define:
            return "define";
        case TraceAction::Undefine:
            return "undefine";
        case TraceAction::Request:
            return "request";
        case TraceAction::Idle:
            return "idle";
        case TraceAction::Stuck:
            return "stuck";
    }
    return "unknown";
}

unsigned long default_description_length(const ScheduleRow& row) {
    const Integer length = floor_rational(row.q * Rational(row.s));
    if (!length.fits_ulong_p() || length < 1) {
        throw PreconditionViolated("level " + std::to_string(row.n) +
                                   " description length out of range");
    }
    return length.get_ui();
}

ConstructionTrace run_construction(const StageSequence& opponent, const Schedule& sched,
                                   unsigned long max_stage,
                                   const DescriptionLengthRule& rule) {
    const unsigned long reachable = reachable_levels(sched, max_stage);
    check_inputs(opponent, sched, reachable);

    ConstructionTrace trace;
    std::vector<std::optional<BitString>> sigma(sched.levels() + 1);
    sigma[0] = BitString();

    for (unsigned long stage = 1; stage <= max_stage; ++stage) {
        const unsigned long s = stage - 1;
        const MartingaleTable& snap = opponent.stage(snapshot_index(stage, opponent.count()));
        const unsigned long scan_limit = std::min<unsigned long>(s, reachable);

        // Placement: least level needing it acts. The defined set stays
        // downward closed (undefines cascade, defines fill the least hole),
        // so the first undefined level always has a defined parent.
        unsigned long hit = 0;
        bool hit_defined = false;
        for (unsigned long n = 1; n <= scan_limit; ++n) {
            if (!sigma[n].has_value()) {
                hit = n;
                hit_defined = false;
                break;
            }
            if (running_max(snap, *sigma[n]) > level_threshold(n)) {
                hit = n;
                hit_defined = true;
                break;
            }
        }
        if (hit == 0) {
            trace.events.push_back({stage, TraceAction::Idle, 0, BitString(), std::nullopt});
        } else if (!hit_defined) {
            const ScheduleRow& row = sched.row(hit);
            const BitString& base = *sigma[hit - 1];
            const std::optional<BitString> found =
                find_special_extension(base, row_length(row), row.eps, snap);
            if (found.has_value()) {
                sigma[hit] = *found;
                trace.events.push_back({stage, TraceAction::Define, hit, *found, std::nullopt});
            } else {
                trace.events.push_back({stage, TraceAction::Stuck, hit, base, std::nullopt});
            }
        } else {
            trace.events.push_back({stage, TraceAction::Undefine, hit, *sigma[hit], std::nullopt});
            for (std::size_t i = hit; i < sigma.size(); ++i) {
                sigma[i].reset();
            }
        }

        // Description step: the least defined level whose recorded
        // description (if any) is longer than q_k * s_k issues one request.
        for (unsigned long k = 1; k <= scan_limit; ++k) {
            if (!sigma[k].has_value()) {
                continue;
            }
            const ScheduleRow& row = sched.row(k);
            const Rational bound = row.q * Rational(row.s);
            const std::optional<unsigned long> recorded =
                trace.ledger.description_length(*sigma[k]);
            if (!recorded.has_value() || Rational(*recorded) > bound) {
                const unsigned long length = rule(row);
                trace.ledger.request(*sigma[k], length);
                trace.events.push_back({stage, TraceAction::Request, k, *sigma[k], length});
                break;
            }
        }

        for (unsigned long n = 1; n <= scan_limit; ++n) {
            if (!sigma[n].has_value()) {
                continue;
            }
            const Rational capital = running_max(snap, *sigma[n]);
            const Rational threshold = level_threshold(n);
            const bool within = capital <= threshold;
            trace.certificates.push_back({stage, n, *sigma[n], capital, threshold, within});
        }
    }

    trace.prefixes.assign(sigma.begin(), sigma.end());
    return trace;
}

ValidationReport validate_trace(const ConstructionTrace& trace, const StageSequence& opponent,
                                const Schedule& sched, const DescriptionLengthRule& rule) {
    ValidationReport report;
    constexpr std::size_t kProblemCap = 20;
    auto add = [&](std::string message) {
        if (report.problems.size() < kProblemCap) {
            report.problems.push_back(std::move(message));
        } else {
            ++report.suppressed;
        }
    };
    auto at_stage = [](unsigned long stage) { return " at stage " + std::to_string(stage); };

    const unsigned long max_stage = trace.events.empty() ? 0 : trace.events.back().stage;
    const unsigned long reachable = reachable_levels(sched, max_stage);
    check_inputs(opponent, sched, reachable);

    std::vector<std::optional<BitString>> sigma(sched.levels() + 1);
    sigma[0] = BitString();
    KraftLedger ledger(trace.ledger.budget());
    // Redefinition bookkeeping per level, reset when the parent value
    // changes: count of definitions and the last defined value.
    std::vector<Integer> define_count(sched.levels() + 1, Integer(0));
    std::vector<std::optional<BitString>> last_value(sched.levels() + 1);
    auto reset_deeper = [&](unsigned long level) {
        for (std::size_t i = level + 1; i < define_count.size(); ++i) {
            define_count[i] = 0;
            last_value[i].reset();
        }
    };

    std::size_t event_index = 0;
    std::size_t certificate_index = 0;
    for (unsigned long stage = 1; stage <= max_stage; ++stage) {
        const unsigned long s = stage - 1;
        const MartingaleTable& snap = opponent.stage(snapshot_index(stage, opponent.count()));
        const unsigned long scan_limit = std::min<unsigned long>(s, reachable);

        // Recompute the placement decision from the replayed state.
        unsigned long hit = 0;
        bool hit_defined = false;
        for (unsigned long n = 1; n <= scan_limit; ++n) {
            if (!sigma[n].has_value()) {
                hit = n;
                hit_defined = false;
                break;
            }
            if (running_max(snap, *sigma[n]) > level_threshold(n)) {
                hit = n;
                hit_defined = true;
                break;
            }
        }

        if (event_index >= trace.events.size() ||
            trace.events[event_index].stage != stage) {
            add("missing placement event" + at_stage(stage));
            break;
        }
        const TraceEvent& placement = trace.events[event_index];
        ++event_index;

        if (hit == 0) {
            if (placement.action != TraceAction::Idle) {
                add(std::string("expected idle, recorded ") + to_string(placement.action) +
                    at_stage(stage));
                break;
            }
        } else if (!hit_defined) {
            const ScheduleRow& row = sched.row(hit);
            const std::optional<BitString> found =
                find_special_extension(*sigma[hit - 1], row_length(row), row.eps, snap);
            if (found.has_value()) {
                if (placement.action != TraceAction::Define || placement.level != hit ||
                    placement.node != *found) {
                    add("definition at level " + std::to_string(hit) +
                        " is not the leftmost special extension" + at_stage(stage));
                    break;
                }
                if (last_value[hit].has_value() && !(*last_value[hit] < placement.node)) {
                    add("redefinition of level " + std::to_string(hit) +
                        " is not lexicographically increasing" + at_stage(stage));
                }
                define_count[hit] += 1;
                if (compare_with_pow2(Rational(define_count[hit]), row.p) > 0) {
                    add("level " + std::to_string(hit) +
                        " exceeded its redefinition budget" + at_stage(stage));
                }
                last_value[hit] = placement.node;
                sigma[hit] = placement.node;
                reset_deeper(hit);
            } else if (placement.action != TraceAction::Stuck || placement.level != hit) {
                add("expected a stuck search at level " + std::to_string(hit) +
                    at_stage(stage));
                break;
            }
        } else {
            if (placement.action != TraceAction::Undefine || placement.level != hit ||
                placement.node != *sigma[hit]) {
                add("expected undefine of level " + std::to_string(hit) + at_stage(stage));
                break;
            }
            for (std::size_t i = hit; i < sigma.size(); ++i) {
                sigma[i].reset();
            }
        }

        // Recompute the request decision.
        unsigned long expected_k = 0;
        for (unsigned long k = 1; k <= scan_limit; ++k) {
            if (!sigma[k].has_value()) {
                continue;
            }
            const ScheduleRow& row = sched.row(k);
            const std::optional<unsigned long> recorded = ledger.description_length(*sigma[k]);
            if (!recorded.has_value() || Rational(*recorded) > row.q * Rational(row.s)) {
                expected_k = k;
                break;
            }
        }
        const bool recorded_request = event_index < trace.events.size() &&
                                      trace.events[event_index].stage == stage &&
                                      trace.events[event_index].action == TraceAction::Request;
        if (expected_k == 0) {
            if (recorded_request) {
                add("unexpected request" + at_stage(stage));
                break;
            }
        } else {
            if (!recorded_request) {
                add("missing request for level " + std::to_string(expected_k) + at_stage(stage));
                break;
            }
            const TraceEvent& request = trace.events[event_index];
            ++event_index;
            const ScheduleRow& row = sched.row(expected_k);
            if (request.level != expected_k || request.node != *sigma[expected_k] ||
                !request.length.has_value() || *request.length != rule(row)) {
                add("request does not match level " + std::to_string(expected_k) +
                    " and length " + std::to_string(rule(row)) + at_stage(stage));
                break;
            }
            ledger.request(request.node, *request.length);
        }

        // Certificates: one per defined level, in level order, exact values.
        for (unsigned long n = 1; n <= scan_limit; ++n) {
            if (!sigma[n].has_value()) {
                continue;
            }
            if (certificate_index >= trace.certificates.size()) {
                add("missing capital certificate for level " + std::to_string(n) +
                    at_stage(stage));
                return report;
            }
            const CapitalCertificate& cert = trace.certificates[certificate_index];
            ++certificate_index;
            const Rational capital = running_max(snap, *sigma[n]);
            const Rational threshold = level_threshold(n);
            if (cert.stage != stage || cert.level != n || cert.node != *sigma[n] ||
                cert.capital != capital || cert.threshold != threshold ||
                cert.within != (capital <= threshold)) {
                add("capital certificate misstated for level " + std::to_string(n) +
                    at_stage(stage));
            } else if (!cert.within) {
                add("capital certificate violated for level " + std::to_string(n) +
                    at_stage(stage));
            }
        }
    }

    if (event_index != trace.events.size()) {
        add("trace has trailing events beyond the replay");
    }
    if (certificate_index != trace.certificates.size()) {
        add("trace has trailing capital certificates beyond the replay");
    }
    if (trace.prefixes.size() != sigma.size()) {
        add("trace prefix list has the wrong level count");
    } else {
        for (std::size_t i = 0; i < sigma.size(); ++i) {
            if (trace.prefixes[i] != sigma[i]) {
                add("final prefix at level " + std::to_string(i) +
                    " disagrees with the replay");
            }
        }
    }
    if (trace.ledger.weight() != ledger.weight()) {
        add("ledger weight disagrees with the replayed requests");
    }
    if (trace.ledger.weight() > trace.ledger.budget()) {
        add("ledger weight exceeds the budget");
    }
    return report;
}

}  // namespace betkit
