#pragma once

#include <cstddef>

#include "betkit/rational.hpp"
#include "betkit/strategy_rule.hpp"

namespace betkit {

// Steady backer of outcome 0: bets wager 1 on 0 at every position while its
// capital is at least 1, so capital(n) = initial + zeros(n) - ones(n) until
// the capital dips below 1, after which it never bets again. On the all-ones
// path an integer initial capital reaches 0 after exactly `initial` steps.
// Requires initial >= 0 (PreconditionViolated).
StrategyRule gap_backer_rule(const Rational& initial);

// Sniper of a fixed lead: from position `start` on, bets wager 1 on outcome 1
// exactly when the running lead zeros(n) - ones(n) equals `lead` and capital
// is at least 1. Requires initial >= 0 (PreconditionViolated).
StrategyRule lead_sniper_rule(unsigned long lead, unsigned long start, const Rational& initial);

// The (lead, start) pair of the s-th sniper in the diagonal enumeration of
// all pairs, s >= 1: component s unpacks s - 1 along anti-diagonals (the pair
// (0,0) first, then (1,0), (0,1), (2,0), ...).
struct SniperIndex {
    unsigned long lead = 0;
    unsigned long start = 0;
};

SniperIndex sniper_pair(std::size_t component);

// Weighted sum of the first `terms` snipers, component s carrying weight
// 2^{-s} and unit starting capital, so the total initial capital is
// 1 - 2^{-terms}. Requires terms >= 1 (TruncationInvalid).
StrategyRule sniper_mixture_rule(std::size_t terms);

}  // namespace betkit
