#pragma once

#include <cstddef>

#include "betkit/bitstring.hpp"
#include "betkit/rational.hpp"
#include "betkit/stage_sequence.hpp"

namespace betkit {

// Outcome of the growth-transfer check along a special extension: when the
// opponent's capital at sigma grew by less than 2^{-p} between stages s and
// t, its capital at tau may grow by at most 2^{delta * gap - p}, where
// gap = |tau| - |sigma| and delta = (1 + eps) / 2. Both sides are evaluated
// exactly; the power with rational exponent is handled by cross-powered
// integer comparison.
struct GrowthBoundReport {
    bool hypothesis_holds = false;  // growth at sigma stayed below 2^{-p}
    bool conclusion_holds = false;  // growth at tau stayed within the bound
    Rational growth_at_sigma;       // M_t(sigma) - M_s(sigma)
    Rational growth_at_tau;         // M_t(tau) - M_s(tau)
    Rational bound_exponent;        // delta * gap - p
};

// Preconditions: s < t < stage count, and tau must be a special extension of
// sigma for the stage-s table at parameter eps (PreconditionViolated names
// the failing part). The hypothesis is reported, not required: a report with
// hypothesis_holds = false and conclusion_holds = false is not a violation
// of the growth bound.
GrowthBoundReport growth_bound_check(const StageSequence& stages, const BitString& sigma,
                                     const BitString& tau, std::size_t s, std::size_t t,
                                     long p, const Rational& eps);

}  // namespace betkit
