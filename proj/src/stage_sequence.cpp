#include "betkit/stage_sequence.hpp"

#include "betkit/errors.hpp"

namespace betkit {

ValidationReport validate_stage_sequence(const StageSequence& sequence) {
    ValidationReport report;
    if (sequence.stages.empty()) {
        report.problems.push_back("stage sequence is empty");
        return report;
    }
    std::size_t depth = sequence.depth();
    for (std::size_t k = 0; k < sequence.count(); ++k) {
        if (sequence.stage(k).depth() != depth) {
            report.problems.push_back("stage " + std::to_string(k) +
                                      " has mismatched depth");
            continue;
        }
        ValidationReport stage_report = validate_martingale(sequence.stage(k));
        if (!stage_report.ok()) {
            report.problems.push_back("stage " + std::to_string(k) + " invalid: " +
                                      stage_report.problems.front());
        }
    }
    for (std::size_t k = 0; k + 1 < sequence.count(); ++k) {
        const auto& lo = sequence.stage(k);
        const auto& hi = sequence.stage(k + 1);
        if (lo.depth() != hi.depth()) continue;
        bool monotone = true;
        for (std::size_t n = 0; n <= depth && monotone; ++n) {
            for (std::size_t j = 0; j < (std::size_t{1} << n); ++j) {
                if (hi.at(n, j) < lo.at(n, j)) {
                    report.problems.push_back(
                        "stage " + std::to_string(k + 1) + " decreases at \"" +
                        BitString::from_level_offset(n, j).str() + "\"");
                    monotone = false;
                    break;
                }
            }
        }
    }
    return report;
}

MartingaleTable stage_difference(const StageSequence& sequence, std::size_t from,
                                 std::size_t to) {
    if (from > to || to >= sequence.count()) {
        throw PreconditionViolated("stage difference needs from <= to < stage count");
    }
    std::size_t depth = sequence.depth();
    MartingaleTable diff(depth);
    for (std::size_t n = 0; n <= depth; ++n) {
        for (std::size_t j = 0; j < (std::size_t{1} << n); ++j) {
            diff.at(n, j) = sequence.stage(to).at(n, j) - sequence.stage(from).at(n, j);
        }
    }
    return diff;
}

bool is_canonical_for(const StageSequence& sequence, const PredictionFunction& f) {
    for (std::size_t k = 0; k + 1 < sequence.count(); ++k) {
        if (!is_f_sided(stage_difference(sequence, k, k + 1), f)) {
            return false;
        }
    }
    return true;
}

StageSequence accumulate_increments(const std::vector<MartingaleTable>& increments) {
    if (increments.empty()) {
        throw PreconditionViolated("cannot accumulate an empty increment list");
    }
    StageSequence sequence;
    sequence.stages.reserve(increments.size());
    sequence.stages.push_back(increments.front());
    for (std::size_t k = 1; k < increments.size(); ++k) {
        if (increments[k].depth() != sequence.depth()) {
            throw DepthMismatch("increments must share a depth");
        }
        sequence.stages.push_back(
            mix({sequence.stages.back(), increments[k]}, {Rational(1), Rational(1)}));
    }
    return sequence;
}

StageSequence SeparableOpponent::combined() const {
    if (zero_increments.size() != one_increments.size()) {
        throw PreconditionViolated("separable opponent needs equally many increments per side");
    }
    StageSequence zero = zero_stages();
    StageSequence one = one_stages();
    StageSequence sequence;
    sequence.stages.reserve(zero.count());
    for (std::size_t k = 0; k < zero.count(); ++k) {
        sequence.stages.push_back(
            mix({zero.stage(k), one.stage(k)}, {Rational(1), Rational(1)}));
    }
    return sequence;
}

ValidationReport validate_separable_opponent(const SeparableOpponent& opponent) {
    ValidationReport report;
    if (opponent.zero_increments.empty() ||
        opponent.zero_increments.size() != opponent.one_increments.size()) {
        report.problems.push_back("sides must hold equally many increments, at least one");
        return report;
    }
    std::size_t depth = opponent.zero_increments.front().depth();
    for (std::size_t side = 0; side < 2; ++side) {
        const auto& increments = side == 0 ? opponent.zero_increments : opponent.one_increments;
        const char* name = side == 0 ? "zero" : "one";
        for (std::size_t k = 0; k < increments.size(); ++k) {
            std::string label = std::string(name) + " increment " + std::to_string(k);
            if (increments[k].depth() != depth) {
                report.problems.push_back(label + " has mismatched depth");
                continue;
            }
            ValidationReport table_report = validate_martingale(increments[k]);
            if (!table_report.ok()) {
                report.problems.push_back(label + " invalid: " + table_report.problems.front());
            }
            bool sided = side == 0 ? is_zero_sided(increments[k]) : is_one_sided(increments[k]);
            if (!sided) {
                report.problems.push_back(label + " is not " + name + "-sided");
            }
        }
    }
    return report;
}

}  // namespace betkit
