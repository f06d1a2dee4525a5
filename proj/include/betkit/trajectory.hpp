#pragma once

#include <vector>

#include "betkit/bitstring.hpp"
#include "betkit/martingale.hpp"
#include "betkit/rational.hpp"

namespace betkit {

// Capital along one play path: capital[n] is the value after the first n bits
// of `path`, so the vector holds path.size() + 1 entries.
struct CapitalTrajectory {
    BitString path;
    std::vector<Rational> capital;
};

// Exponent summary of a trajectory. Exponents are log2(capital[n]) / n for
// n >= 1; a zero capital contributes negative infinity. Doubles here are
// report-only and never feed back into exact checks.
struct GrowthReport {
    double final_exponent = 0.0;
    double max_exponent = 0.0;
};

// Throws ZeroInitialCapital when capital[0] == 0 and PreconditionViolated on
// an empty path (no n >= 1 to take an exponent at).
GrowthReport growth_exponent(const CapitalTrajectory& trajectory);

// Reads capital off a dense table along `path` (path must fit the depth).
CapitalTrajectory evaluate(const MartingaleTable& table, const BitString& path);

}  // namespace betkit
