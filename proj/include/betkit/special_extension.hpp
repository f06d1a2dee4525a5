#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "betkit/bitstring.hpp"
#include "betkit/martingale.hpp"
#include "betkit/prediction.hpp"
#include "betkit/rational.hpp"

namespace betkit {

// True when `candidate` extends `base` and the stage's capital stays tame
// along the way: running_max(rho) <= running_max(base) / (1 - eps) for every
// base <= rho <= candidate, and each symbol occurs strictly fewer than
// delta * gap times in the window, delta = (1 + eps) / 2, gap = |candidate| -
// |base|. The empty window (candidate == base) qualifies vacuously. Throws
// NotAnExtension when base is not a prefix of candidate, DepthExceeded when
// candidate is deeper than the table, EpsOutOfRange for eps outside (0,1).
bool is_special_extension(const BitString& base, const BitString& candidate,
                          const Rational& eps, const MartingaleTable& stage);

// Lexicographically least extension of `base` of length `target_length` that
// is special for the stage, or nullopt when none exists. The search walks the
// candidate tree 0-first and prunes only provably failing subtrees, so the
// first hit is the leftmost. Requires target_length between |base| and the
// table depth, and a window of at most 24 bits (EnumerationTooLarge).
std::optional<BitString> find_special_extension(const BitString& base,
                                                std::size_t target_length,
                                                const Rational& eps,
                                                const MartingaleTable& stage);

// Multi-opponent variant: each opponent pairs a stage table with the
// prediction function it follows. A candidate must keep every opponent's
// capital within its own running-max bound and the count of correct
// f_j-predictions in the window strictly inside
// ((1-delta) * gap, delta * gap) for every j. With a single opponent whose
// prediction is constant 0 this coincides with find_special_extension.
// Additionally requires a nonempty opponent list with root capital <= 1 each.
std::optional<BitString> find_special_extension_multi(
    const BitString& base, std::size_t target_length, const Rational& eps,
    const std::vector<std::pair<MartingaleTable, PredictionFunction>>& opponents);

// Least window length at which a special extension is guaranteed to exist for
// accuracy eps against one opponent of root capital at most 1: the minimal
// integer l with 2 * r^{-l} <= eps, where r is the growth rate of the
// exponential strategy with bias (1 + eps) / 2. The comparison is certified:
// directed dyadic powering decides it rigorously, falling back to exact
// rational powers when the bounds cannot separate. Throws EpsOutOfRange for
// eps outside (0,1).
unsigned long special_gap_bound(const Rational& eps);

// Union-bound variant for `opponents` many simultaneous windows: minimal l
// with 2 * opponents * r^{-l} <= eps. special_gap_bound(eps) is the
// single-opponent case.
unsigned long special_gap_bound_multi(const Rational& eps, std::size_t opponents);

}  // namespace betkit
