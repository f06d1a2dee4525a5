#include "betkit/schedule.hpp"

#include <string>

#include "betkit/errors.hpp"
#include "betkit/special_extension.hpp"

namespace betkit {

namespace {

void require_delta_below_q(const ScheduleRow& row) {
    if (!(row.delta < row.q)) {
        throw PreconditionViolated("level " + std::to_string(row.n) +
                                   ": window coefficient " + format_rational(row.delta) +
                                   " must stay below the description coefficient " +
                                   format_rational(row.q));
    }
}

void require_eps_open_unit(const Rational& eps) {
    if (!(eps > 0 && eps < 1)) {
        throw EpsOutOfRange("schedule requires eps in (0,1), got " + format_rational(eps));
    }
}

ScheduleRow make_row(unsigned long n, Rational q, Rational eps, const Rational& numerator) {
    ScheduleRow row;
    row.n = n;
    row.q = std::move(q);
    row.eps = std::move(eps);
    row.delta = Rational(1 + row.eps) / 2;
    require_delta_below_q(row);
    row.s = strict_integer_above(numerator / (row.q - row.delta));
    row.p = Rational(row.s) * row.delta + n + 2;
    return row;
}

}  // namespace

const ScheduleRow& Schedule::row(unsigned long n) const {
    if (n == 0 || n > rows.size()) {
        throw PreconditionViolated("schedule has no level " + std::to_string(n) +
                                   " (levels are 1.." + std::to_string(rows.size()) + ")");
    }
    return rows[n - 1];
}

Integer strict_integer_above(const Rational& value) {
    return floor_rational(value) + 1;
}

Schedule schedule_paper(unsigned long n_max) {
    if (n_max < 1) {
        throw PreconditionViolated("schedule_paper requires n_max >= 1");
    }
    Schedule sched;
    Rational budget_sum = 0;  // sum of p_i over completed levels
    for (unsigned long n = 1; n <= n_max; ++n) {
        const Rational q = Rational(1, 2) + Rational(3) / (n + 2);
        const Rational eps = pow2(-static_cast<long>(n) - 5);
        ScheduleRow row = make_row(n, q, eps, budget_sum + 2 * n + 2);
        const Integer gap_floor(special_gap_bound(row.eps));
        if (row.s < gap_floor) {
            row.s = gap_floor;
            row.p = Rational(row.s) * row.delta + n + 2;
        }
        budget_sum += row.p;
        sched.rows.push_back(std::move(row));
    }
    return sched;
}

Schedule schedule_relaxed(const Rational& eps, const std::vector<Rational>& q_levels) {
    require_eps_open_unit(eps);
    if (q_levels.empty()) {
        throw PreconditionViolated("schedule_relaxed requires at least one level");
    }
    Schedule sched;
    for (unsigned long n = 1; n <= q_levels.size(); ++n) {
        sched.rows.push_back(make_row(n, q_levels[n - 1], eps, Rational(2 * n + 2)));
    }
    return sched;
}

Schedule schedule_eta_budget(unsigned long budget_exponent, const Rational& eps,
                             const std::vector<Rational>& q_levels) {
    require_eps_open_unit(eps);
    if (q_levels.empty()) {
        throw PreconditionViolated("schedule_eta_budget requires at least one level");
    }
    Schedule sched;
    for (unsigned long n = 1; n <= q_levels.size(); ++n) {
        sched.rows.push_back(
            make_row(n, q_levels[n - 1], eps, Rational(budget_exponent + n + 3)));
    }
    return sched;
}

}  // namespace betkit
