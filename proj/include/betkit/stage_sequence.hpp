#pragma once

#include <cstddef>
#include <vector>

#include "betkit/martingale.hpp"
#include "betkit/prediction.hpp"

namespace betkit {

// Finite stage-wise approximation of a monotonically revealed strategy:
// stages[k] is the capital table visible at stage k. Stages share a depth and
// never decrease pointwise, mirroring approximation from below.
struct StageSequence {
    std::vector<MartingaleTable> stages;

    std::size_t depth() const { return stages.front().depth(); }
    std::size_t count() const { return stages.size(); }
    const MartingaleTable& stage(std::size_t k) const { return stages[k]; }
    const MartingaleTable& final() const { return stages.back(); }
};

// Checks shape (nonempty, equal depths), validity of every stage, and
// pointwise monotonicity between consecutive stages.
ValidationReport validate_stage_sequence(const StageSequence& sequence);

// Pointwise difference stages[to] - stages[from], from <= to. Differences of
// valid nondecreasing stages are again valid tables (fairness is linear and
// monotonicity keeps the values nonnegative).
MartingaleTable stage_difference(const StageSequence& sequence, std::size_t from,
                                 std::size_t to);

// True when every increment stages[k+1] - stages[k] is f-sided. Sums of
// f-sided tables are f-sided, so this certifies f-sidedness of every
// difference stages[t] - stages[s] with s <= t.
bool is_canonical_for(const StageSequence& sequence, const PredictionFunction& f);

// Prefix-sums increments into a stage sequence: stage k holds the sum of
// increments[0..k]. The usual way to script monotone opponents, since any
// list of valid increments yields valid nondecreasing stages.
StageSequence accumulate_increments(const std::vector<MartingaleTable>& increments);

// An opponent that reveals an f-sided strategy stage by stage; `stages` is
// expected to be canonical for `f`.
struct SidedOpponent {
    PredictionFunction f;
    StageSequence stages;
};

// An opponent scripted as a 0-sided and a 1-sided increment list of equal
// length. Stage k of the combined opponent is the sum of all increments up to
// k on both sides, so separability holds by construction with the two prefix
// sums as witness stacks.
struct SeparableOpponent {
    std::vector<MartingaleTable> zero_increments;
    std::vector<MartingaleTable> one_increments;

    StageSequence zero_stages() const { return accumulate_increments(zero_increments); }
    StageSequence one_stages() const { return accumulate_increments(one_increments); }
    StageSequence combined() const;
};

// Checks shape (equal nonempty counts, uniform depth), validity of every
// increment, and sidedness of each list.
ValidationReport validate_separable_opponent(const SeparableOpponent& opponent);

}  // namespace betkit
