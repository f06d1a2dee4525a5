#include "betkit/trajectory.hpp"

#include <limits>

#include "betkit/errors.hpp"

namespace betkit {

GrowthReport growth_exponent(const CapitalTrajectory& trajectory) {
    if (trajectory.path.empty()) {
        throw PreconditionViolated("growth exponent needs a nonempty path");
    }
    if (trajectory.capital.empty() || trajectory.capital[0] == 0) {
        throw ZeroInitialCapital("growth exponent needs positive initial capital");
    }
    const double neg_inf = -std::numeric_limits<double>::infinity();
    GrowthReport report;
    report.max_exponent = neg_inf;
    for (std::size_t n = 1; n < trajectory.capital.size(); ++n) {
        double exponent = trajectory.capital[n] == 0
                              ? neg_inf
                              : log2_approx(trajectory.capital[n]) / static_cast<double>(n);
        if (exponent > report.max_exponent) {
            report.max_exponent = exponent;
        }
        report.final_exponent = exponent;
    }
    return report;
}

CapitalTrajectory evaluate(const MartingaleTable& table, const BitString& path) {
    if (path.size() > table.depth()) {
        throw DepthExceeded("path longer than table depth");
    }
    CapitalTrajectory trajectory;
    trajectory.path = path;
    trajectory.capital.reserve(path.size() + 1);
    for (std::size_t n = 0; n <= path.size(); ++n) {
        trajectory.capital.push_back(table.at(path.prefix(n)));
    }
    return trajectory;
}

}  // namespace betkit
