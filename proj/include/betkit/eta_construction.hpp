#pragma once

#include <vector>

#include "betkit/bitstring.hpp"
#include "betkit/construction.hpp"
#include "betkit/prediction.hpp"
#include "betkit/schedule.hpp"
#include "betkit/stage_sequence.hpp"

namespace betkit {

// One sided opponent inside a budgeted construction input: `index` names the
// opponent in a fixed global enumeration (the serialization records the
// index, not the tables), `f` is its prediction function, and `stages` its
// scripted monotone approximation.
struct EtaOpponent {
    unsigned long index = 0;
    PredictionFunction f;
    StageSequence stages;
};

// Input of the budgeted construction: a nonempty opponent list and a strict
// chain of already-settled prefixes, starting at the empty string. The run
// extends the chain by one level, n = priors.size().
struct EtaInput {
    std::vector<EtaOpponent> opponents;
    std::vector<BitString> priors;
};

// Self-delimiting canonical serialization: gamma(#opponents), gamma(index+1)
// per opponent, gamma(#priors), then per prior gamma(length+1) followed by
// its raw bits. The code is prefix-free and one-to-one on inputs, which is
// what makes the doubled-length budgets below jointly affordable.
std::vector<bool> eta_serialize(const EtaInput& eta);

// Bit length of eta_serialize(eta). The smallest input (one opponent of
// index 0, priors = [empty]) serializes to 4 bits.
unsigned long eta_code_length(const EtaInput& eta);

// Budget exponent g = 2L + 2 for L = eta_code_length(eta). Summed over all
// inputs, 2^{-g} totals at most 1/2 (at most 2^L codes per length), so
// per-input ledgers with budget 2^{-g} stay jointly below Kraft mass 1.
// Inputs whose serializations share a length share a budget exponent.
unsigned long g_of_eta(const EtaInput& eta);

// Budgeted single-level construction against the summed opponents. Level
// n = priors.size() uses schedule row n and extends priors.back() to absolute
// length s_n. At stage s+1 (skipped as Idle when s exceeds an opponent depth
// or the summed running max at priors.back() reaches 1 - 2^{-n}):
//   - undefined, with fewer than 2^{p_n} prior definitions and an existing
//     witness: define the leftmost multi-window special extension (Stuck when
//     the search proves none exists);
//   - defined, with summed running max above (1 - 2^{-n}) + 2^{-n-3}:
//     undefine.
// A defined prefix whose recorded description is longer than q_n * s_n then
// requests length floor(q_n * s_n). The trace's ledger carries budget
// 2^{-budget_exponent}; schedule arithmetic (the eta-budget profile solved
// for the same exponent) keeps the weight strictly below it, and a
// BudgetExceeded escape means the schedule was inconsistent with the budget.
// Capital certificates compare the summed running max at the defined prefix
// against (1 - 2^{-n}) + 2^{-n-2}. prefixes ends up as
// [priors..., final sigma_n].
ConstructionTrace run_construction_eta(const EtaInput& eta, unsigned long budget_exponent,
                                       const Schedule& sched, unsigned long max_stage);

}  // namespace betkit
