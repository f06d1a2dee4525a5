#pragma once

#include <vector>

#include "betkit/martingale.hpp"
#include "betkit/prediction.hpp"
#include "betkit/stage_sequence.hpp"

namespace betkit {

// Splits a nondecreasing stage sequence M_0 <= ... <= M_{K-1} into component
// tables N_0..N_{K-1}, each a valid martingale, with partial sums never
// exceeding the final stage and total root mass equal to the final root.
// When the stages never need headroom from later stages the components are
// exactly the stage differences M_k - M_{k-1}. Throws PreconditionViolated
// when the sequence is empty, depth-inconsistent, stage-invalid, or not
// pointwise nondecreasing.
std::vector<MartingaleTable> lce_to_mixture_plain(const StageSequence& stages);

// Same split with the extra guarantee that every partial sum S_k is 0-sided.
// Additionally requires the final stage to be strictly 0-sided.
std::vector<MartingaleTable> lce_to_mixture_zero_sided(const StageSequence& stages);

// Same split with the extra guarantee that every component N_k is f-sided on
// its own. Additionally requires the final stage to be strictly f-sided and
// the f-oriented wager gaps M_t(sigma*f) - M_t(sigma*(1-f)) to be
// nondecreasing in t at every internal node.
std::vector<MartingaleTable> lce_to_mixture_strongly_sided(const StageSequence& stages,
                                                           const PredictionFunction& f);

}  // namespace betkit
