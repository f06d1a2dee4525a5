#include "betkit/lce_mixture.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "betkit/errors.hpp"

namespace betkit {

namespace {

enum class SplitMode { Plain, ZeroSided, StronglySided };

// Wager gap oriented toward the favored side: value(favored child) minus
// value(other child). Nonnegative exactly when the table obeys f at sigma.
Rational oriented_gap(const MartingaleTable& table, std::size_t level, std::size_t offset,
                      int favored) {
    const Rational& toward = table.at(level + 1, 2 * offset + static_cast<std::size_t>(favored));
    const Rational& away =
        table.at(level + 1, 2 * offset + static_cast<std::size_t>(1 - favored));
    return toward - away;
}

void check_preconditions(const StageSequence& stages, SplitMode mode,
                         const PredictionFunction& f) {
    ValidationReport report = validate_stage_sequence(stages);
    if (!report.ok()) {
        throw PreconditionViolated("stage sequence invalid: " + report.problems.front());
    }
    if (mode == SplitMode::ZeroSided &&
        !is_strictly_f_sided(stages.final(), PredictionFunction::constant(0))) {
        throw PreconditionViolated("final stage is not strictly 0-sided");
    }
    if (mode == SplitMode::StronglySided) {
        if (!is_strictly_f_sided(stages.final(), f)) {
            throw PreconditionViolated("final stage is not strictly f-sided");
        }
        const std::size_t depth = stages.depth();
        for (std::size_t t = 0; t + 1 < stages.count(); ++t) {
            for (std::size_t level = 0; level < depth; ++level) {
                const std::size_t width = std::size_t{1} << level;
                for (std::size_t offset = 0; offset < width; ++offset) {
                    const int favored = f(BitString::from_level_offset(level, offset));
                    if (oriented_gap(stages.stage(t + 1), level, offset, favored) <
                        oriented_gap(stages.stage(t), level, offset, favored)) {
                        throw PreconditionViolated(
                            "wager gaps are not nondecreasing between stages " +
                            std::to_string(t) + " and " + std::to_string(t + 1) + " at \"" +
                            BitString::from_level_offset(level, offset).str() + "\"");
                    }
                }
            }
        }
    }
}

std::vector<MartingaleTable> split_stages(const StageSequence& stages, SplitMode mode,
                                          const PredictionFunction& f) {
    check_preconditions(stages, mode, f);
    const std::size_t count = stages.count();
    const std::size_t depth = stages.depth();

    std::vector<MartingaleTable> components;
    components.reserve(count);
    MartingaleTable partial(depth);

    for (std::size_t k = 0; k < count; ++k) {
        MartingaleTable component(depth);
        component.root() = stages.stage(k).root() - partial.root();

        for (std::size_t level = 0; level < depth; ++level) {
            const std::size_t width = std::size_t{1} << level;
            for (std::size_t offset = 0; offset < width; ++offset) {
                const Rational& here = component.at(level, offset);
                Rational toward_one = 0;
                if (here != 0) {
                    const int favored =
                        (mode == SplitMode::StronglySided)
                            ? f(BitString::from_level_offset(level, offset))
                            : 0;
                    // Advance the stage pointer until the child headrooms
                    // (and the mode's sidedness caps) admit a fair split.
                    // The final stage always does: the partial sums stay
                    // below it pointwise, and its sidedness covers the caps.
                    bool split_found = false;
                    for (std::size_t pointer = k; pointer < count; ++pointer) {
                        const MartingaleTable& target = stages.stage(pointer);
                        const Rational headroom_zero =
                            target.at(level + 1, 2 * offset) - partial.at(level + 1, 2 * offset);
                        const Rational headroom_one = target.at(level + 1, 2 * offset + 1) -
                                                      partial.at(level + 1, 2 * offset + 1);
                        Rational low = std::max<Rational>(Rational(0), 2 * here - headroom_zero);
                        Rational high = std::min<Rational>(2 * here, headroom_one);
                        bool extra_ok = true;
                        if (mode == SplitMode::ZeroSided) {
                            // Keeps the next partial sum 0-sided: equivalent
                            // to the minimal split staying below the cap
                            // here + (S(sigma*0) - S(sigma*1)) / 2.
                            extra_ok = target.at(level + 1, 2 * offset) >=
                                       partial.at(level, offset) + here;
                        } else if (mode == SplitMode::StronglySided) {
                            const Rational slack =
                                oriented_gap(target, level, offset, favored) -
                                oriented_gap(partial, level, offset, favored);
                            if (favored == 0) {
                                // Component gap 2(here - x) must be
                                // nonnegative and fit into the gap slack.
                                low = std::max<Rational>(low, here - slack / 2);
                                high = std::min<Rational>(high, here);
                            } else {
                                low = std::max<Rational>(low, here);
                                high = std::min<Rational>(high, here + slack / 2);
                            }
                        }
                        if (extra_ok && low <= high) {
                            toward_one = std::move(low);
                            split_found = true;
                            break;
                        }
                    }
                    if (!split_found) {
                        throw Error("lce_to_mixture: no stage admits a fair split at \"" +
                                    BitString::from_level_offset(level, offset).str() +
                                    "\" (internal invariant failure)");
                    }
                }
                component.at(level + 1, 2 * offset + 1) = toward_one;
                component.at(level + 1, 2 * offset) = 2 * here - toward_one;
            }
        }

        for (std::size_t level = 0; level <= depth; ++level) {
            const std::size_t width = std::size_t{1} << level;
            for (std::size_t offset = 0; offset < width; ++offset) {
                partial.at(level, offset) += component.at(level, offset);
            }
        }
        components.push_back(std::move(component));
    }
    return components;
}

}  // namespace

std::vector<MartingaleTable> lce_to_mixture_plain(const StageSequence& stages) {
    return split_stages(stages, SplitMode::Plain, PredictionFunction::constant(0));
}

std::vector<MartingaleTable> lce_to_mixture_zero_sided(const StageSequence& stages) {
    return split_stages(stages, SplitMode::ZeroSided, PredictionFunction::constant(0));
}

std::vector<MartingaleTable> lce_to_mixture_strongly_sided(const StageSequence& stages,
                                                           const PredictionFunction& f) {
    return split_stages(stages, SplitMode::StronglySided, f);
}

}  // namespace betkit
