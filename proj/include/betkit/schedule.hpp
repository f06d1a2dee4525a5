#pragma once

#include <cstddef>
#include <vector>

#include "betkit/rational.hpp"

namespace betkit {

// One level of construction parameters, all exact. `s` is the absolute prefix
// length assigned to the level, `p` the redefinition-budget exponent
// p = s * delta + n + 2, and `delta` the count-window coefficient
// (1 + eps) / 2. Every profile keeps delta < q, which makes the description
// coefficient q meaningful (requests of length floor(q * s) stay affordable
// across at most 2^p redefinitions).
struct ScheduleRow {
    unsigned long n = 0;  // level index, 1-based
    Rational q;           // description-length coefficient
    Rational eps;         // capital slack parameter
    Rational delta;       // count-window coefficient (1 + eps) / 2
    Integer s;            // absolute prefix length for the level
    Rational p;           // redefinition-budget exponent
};

struct Schedule {
    std::vector<ScheduleRow> rows;

    std::size_t levels() const { return rows.size(); }
    // 1-based accessor matching the level index; throws PreconditionViolated
    // for n = 0 or n > levels().
    const ScheduleRow& row(unsigned long n) const;
};

// Least integer strictly greater than `value`. Used for every length choice
// below so that s * (q - delta) strictly exceeds the numerator it was solved
// from, even when the quotient is an integer.
Integer strict_integer_above(const Rational& value);

// Full-strength profile: q_n = 1/2 + 3/(n+2), eps_n = 2^{-n-5},
// s_n = max(strict_integer_above((2n+2 + sum_{i<n} p_i) / (q_n - delta_n)),
//           special_gap_bound(eps_n)).
// The gap-bound term dominates and grows fast (hundreds of thousands by
// n = 3), so this profile is for exact arithmetic on the parameters, not for
// running searches. Practical up to n_max = 10 (the enclosure machinery
// rejects finer eps denominators).
Schedule schedule_paper(unsigned long n_max);

// Desk-scale profile: fixed eps, caller-chosen q per level (one entry per
// level, n_max = q_levels.size()),
// s_n = strict_integer_above((2n+2) / (q_n - delta)).
// No gap-bound term and no running budget sum, which keeps the lengths small
// enough to enumerate; existence of special extensions is then a matter for
// the search, not the schedule.
Schedule schedule_relaxed(const Rational& eps, const std::vector<Rational>& q_levels);

// Budgeted variant for the per-input constructions: like the relaxed profile
// but solved against the input's budget exponent g,
// s_n = strict_integer_above((g + n + 3) / (q_n - delta)).
// This makes floor(q_n * s_n) > p_n + g, which keeps the ledger weight
// strictly below 2^{-g} across at most 2^{p_n} redefinitions.
Schedule schedule_eta_budget(unsigned long budget_exponent, const Rational& eps,
                             const std::vector<Rational>& q_levels);

}  // namespace betkit
