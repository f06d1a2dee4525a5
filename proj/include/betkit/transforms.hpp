#pragma once

#include "betkit/martingale.hpp"
#include "betkit/prediction.hpp"
#include "betkit/rational.hpp"

namespace betkit {

// Adds to an f-sided table a companion that bets half its capital on f at
// every node, making every bet strict. The companion starts at 1, so the
// result's root is table(root) + 1, the result is strictly f-sided, and it
// dominates the input at every node. Throws NotFSided when the input is not
// f-sided.
MartingaleTable strictify(const MartingaleTable& table, const PredictionFunction& f);

// Result of the savings rule: `result` is the fair table actually played
// (active plus reserve at every node); `reserve` records the banked part,
// which is nondecreasing along every path and is not itself fair. The tables
// share the input's depth.
struct SavingsTransform {
    MartingaleTable result;
    MartingaleTable reserve;
};

// Plays the input's proportional bets with the active part of the capital,
// and each time the active part reaches `checkpoint`, banks half of it into
// the reserve (repeating while the active part still reaches the checkpoint).
// Along a path where running_max(table) reaches checkpoint * 2^k, at least k
// banking events fire, each adding at least checkpoint / 2 to the reserve, so
// the result is at least k * checkpoint / 2 there. Throws InvalidCheckpoint
// unless checkpoint > table(root), and PreconditionViolated when the input
// fails validate_martingale.
SavingsTransform savings_transform(const MartingaleTable& table, const Rational& checkpoint);

}  // namespace betkit
