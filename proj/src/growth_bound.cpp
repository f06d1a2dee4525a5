#include "betkit/growth_bound.hpp"

#include <string>

#include "betkit/errors.hpp"
#include "betkit/special_extension.hpp"

namespace betkit {

GrowthBoundReport growth_bound_check(const StageSequence& stages, const BitString& sigma,
                                     const BitString& tau, std::size_t s, std::size_t t,
                                     long p, const Rational& eps) {
    if (!(s < t && t < stages.count())) {
        throw PreconditionViolated("growth_bound_check requires stages s < t within range, got s=" +
                                   std::to_string(s) + ", t=" + std::to_string(t) + " of " +
                                   std::to_string(stages.count()));
    }
    if (!is_special_extension(sigma, tau, eps, stages.stage(s))) {
        throw PreconditionViolated("\"" + tau.str() + "\" is not a special extension of \"" +
                                   sigma.str() + "\" at stage " + std::to_string(s));
    }

    GrowthBoundReport report;
    report.growth_at_sigma = stages.stage(t).at(sigma) - stages.stage(s).at(sigma);
    report.growth_at_tau = stages.stage(t).at(tau) - stages.stage(s).at(tau);

    report.hypothesis_holds = report.growth_at_sigma < pow2(-p);

    const unsigned long gap = tau.size() - sigma.size();
    const Rational delta = (1 + eps) / 2;
    report.bound_exponent = delta * gap - p;
    if (report.growth_at_tau <= 0) {
        report.conclusion_holds = true;
    } else {
        report.conclusion_holds =
            compare_with_pow2(report.growth_at_tau, report.bound_exponent) <= 0;
    }
    return report;
}

}  // namespace betkit
