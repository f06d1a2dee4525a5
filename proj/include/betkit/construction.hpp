#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "betkit/bitstring.hpp"
#include "betkit/kraft.hpp"
#include "betkit/rational.hpp"
#include "betkit/schedule.hpp"
#include "betkit/stage_sequence.hpp"

namespace betkit {

// One record per construction decision. Every stage emits exactly one
// placement action (Define, Undefine, Idle, or Stuck) and at most one
// Request. Undefine at level n implicitly clears every level >= n.
// Stuck records an attempted definition whose search found no witness.
enum class TraceAction { Define, Undefine, Request, Idle, Stuck };

const char* to_string(TraceAction action);

struct TraceEvent {
    unsigned long stage = 0;
    TraceAction action = TraceAction::Idle;
    unsigned long level = 0;                 // level acted on; 0 for Idle
    BitString node;                          // prefix involved; empty for Idle
    std::optional<unsigned long> length;     // description length (Request only)
};

// Capital reading for one defined prefix at the end of one stage: `capital`
// is the running max of the opponent snapshot at `node` and `within` records
// whether it stayed at or below `threshold`.
struct CapitalCertificate {
    unsigned long stage = 0;
    unsigned long level = 0;
    BitString node;
    Rational capital;
    Rational threshold;
    bool within = false;
};

struct ConstructionTrace {
    std::vector<TraceEvent> events;
    // Final prefix per level; index 0 is the empty string, higher entries are
    // nullopt when the level ended undefined.
    std::vector<std::optional<BitString>> prefixes;
    KraftLedger ledger{Rational(1)};
    std::vector<CapitalCertificate> certificates;
};

// Maps a schedule row to the description length requested for its prefix.
using DescriptionLengthRule = std::function<unsigned long(const ScheduleRow&)>;

// floor(q_n * s_n), the default request length.
unsigned long default_description_length(const ScheduleRow& row);

// Stagewise diagonalization against one monotone opponent. At stage s+1 the
// least level n <= s needing placement acts: an undefined level is defined to
// the leftmost special extension of its parent prefix at absolute length s_n
// (Stuck if none exists), and a defined level whose snapshot running max
// exceeds 1 - 2^{-n-1} is undefined together with every deeper level. After
// the placement action, the least defined level whose recorded description is
// longer than q_k * s_k gets a request of length rule(row_k). All decisions
// read the snapshot u = min(s+1, T-1) of the opponent's T stages.
//
// Preconditions: the opponent validates, its final root capital is below 1/2,
// and every reachable schedule row fits the opponent (nondecreasing lengths
// within depth, window of at most 24 bits). The ledger budget is 1; a
// BudgetExceeded escape signals a construction bug, not bad input.
ConstructionTrace run_construction(
    const StageSequence& opponent, const Schedule& sched, unsigned long max_stage,
    const DescriptionLengthRule& rule = default_description_length);

// Independent referee for a recorded trace: replays the level state and the
// ledger from the events alone and recomputes every decision from the
// opponent and schedule. Reports problems when a Define is not the leftmost
// special extension at its stage, redefinitions fail to increase
// lexicographically or exceed 2^{p_n} while the parent is fixed, a Request
// length or target is wrong or mistimed, a capital certificate is misstated
// or violated, the placement action contradicts the least-level rule, or the
// final prefixes and ledger weight disagree with the replay.
ValidationReport validate_trace(const ConstructionTrace& trace,
                                const StageSequence& opponent, const Schedule& sched,
                                const DescriptionLengthRule& rule = default_description_length);

}  // namespace betkit
