#include "betkit/martingale.hpp"

#include <algorithm>

#include "betkit/errors.hpp"

namespace betkit {

namespace {

constexpr std::size_t kMaxReportedProblems = 20;

void report_problem(ValidationReport& report, std::string message) {
    if (report.problems.size() < kMaxReportedProblems) {
        report.problems.push_back(std::move(message));
    } else {
        ++report.suppressed;
    }
}

std::string node_name(std::size_t level, std::size_t offset) {
    return "\"" + BitString::from_level_offset(level, offset).str() + "\"";
}

}  // namespace

MartingaleTable::MartingaleTable(std::size_t depth) {
    levels_.resize(depth + 1);
    for (std::size_t n = 0; n <= depth; ++n) {
        levels_[n].assign(std::size_t{1} << n, Rational(0));
    }
}

MartingaleTable MartingaleTable::constant(std::size_t depth, const Rational& value) {
    MartingaleTable table(depth);
    for (auto& level : table.levels_) {
        for (auto& entry : level) {
            entry = value;
        }
    }
    return table;
}

const Rational& MartingaleTable::at(const BitString& node) const {
    if (node.size() > depth()) {
        throw DepthExceeded("node \"" + node.str() + "\" deeper than table depth " +
                            std::to_string(depth()));
    }
    return levels_[node.size()][node.level_offset()];
}

Rational& MartingaleTable::at(const BitString& node) {
    return const_cast<Rational&>(static_cast<const MartingaleTable&>(*this).at(node));
}

const Rational& MartingaleTable::at(std::size_t level, std::size_t offset) const {
    if (level >= levels_.size()) {
        throw DepthExceeded("level " + std::to_string(level) + " deeper than table depth " +
                            std::to_string(depth()));
    }
    return levels_[level][offset];
}

Rational& MartingaleTable::at(std::size_t level, std::size_t offset) {
    return const_cast<Rational&>(
        static_cast<const MartingaleTable&>(*this).at(level, offset));
}

ValidationReport validate_martingale(const MartingaleTable& table) {
    ValidationReport report;
    const auto& levels = table.levels();
    for (std::size_t n = 0; n < levels.size(); ++n) {
        for (std::size_t j = 0; j < levels[n].size(); ++j) {
            if (levels[n][j] < 0) {
                report_problem(report, "negative value at " + node_name(n, j));
            }
        }
    }
    for (std::size_t n = 0; n + 1 < levels.size(); ++n) {
        for (std::size_t j = 0; j < levels[n].size(); ++j) {
            const Rational& left = levels[n + 1][2 * j];
            const Rational& right = levels[n + 1][2 * j + 1];
            if (2 * levels[n][j] != left + right) {
                report_problem(report, "fairness fails at " + node_name(n, j) +
                                           ": 2*" + format_rational(levels[n][j]) +
                                           " != " + format_rational(left) + " + " +
                                           format_rational(right));
            }
        }
    }
    return report;
}

Rational wager(const MartingaleTable& table, const BitString& node) {
    if (node.size() >= table.depth()) {
        throw DepthExceeded("wager needs both children inside the table; \"" +
                            node.str() + "\" is too deep");
    }
    return table.at(node.child(1)) - table.at(node);
}

Rational running_max(const MartingaleTable& table, const BitString& node) {
    if (node.size() > table.depth()) {
        throw DepthExceeded("node \"" + node.str() + "\" deeper than table depth " +
                            std::to_string(table.depth()));
    }
    Rational best = table.root();
    for (std::size_t n = 1; n <= node.size(); ++n) {
        const Rational& value = table.at(node.prefix(n));
        if (value > best) best = value;
    }
    return best;
}

namespace {

// Shared scan for the one-parameter sidedness checks. `favored` is the
// outcome whose value may strictly exceed the sibling's.
bool is_sided_toward(const MartingaleTable& table, int favored) {
    const auto& levels = table.levels();
    for (std::size_t n = 0; n + 1 < levels.size(); ++n) {
        for (std::size_t j = 0; j < levels[n].size(); ++j) {
            const Rational& left = levels[n + 1][2 * j];
            const Rational& right = levels[n + 1][2 * j + 1];
            if (favored == 0 ? left < right : right < left) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace

bool is_zero_sided(const MartingaleTable& table) { return is_sided_toward(table, 0); }

bool is_one_sided(const MartingaleTable& table) { return is_sided_toward(table, 1); }

bool is_f_sided(const MartingaleTable& table, const PredictionFunction& f) {
    const auto& levels = table.levels();
    for (std::size_t n = 0; n + 1 < levels.size(); ++n) {
        for (std::size_t j = 0; j < levels[n].size(); ++j) {
            const Rational& here = levels[n][j];
            const Rational& right = levels[n + 1][2 * j + 1];
            // Fair tables gain on exactly one side of a strict bet, so the
            // sign of the outcome-1 wager determines the favored side.
            if (right > here) {
                if (f(BitString::from_level_offset(n, j)) != 1) return false;
            } else if (right < here) {
                if (f(BitString::from_level_offset(n, j)) != 0) return false;
            }
        }
    }
    return true;
}

bool is_strictly_f_sided(const MartingaleTable& table, const PredictionFunction& f) {
    const auto& levels = table.levels();
    for (std::size_t n = 0; n + 1 < levels.size(); ++n) {
        for (std::size_t j = 0; j < levels[n].size(); ++j) {
            if (levels[n + 1][2 * j] == levels[n + 1][2 * j + 1]) {
                return false;
            }
        }
    }
    return is_f_sided(table, f);
}

bool is_separable_witness(const MartingaleTable& total,
                          const MartingaleTable& zero_part,
                          const MartingaleTable& one_part) {
    if (zero_part.depth() != total.depth() || one_part.depth() != total.depth()) {
        throw DepthMismatch("separability witness parts must match the total's depth");
    }
    if (!validate_martingale(zero_part).ok() || !validate_martingale(one_part).ok()) {
        return false;
    }
    if (!is_zero_sided(zero_part) || !is_one_sided(one_part)) {
        return false;
    }
    const auto& levels = total.levels();
    for (std::size_t n = 0; n < levels.size(); ++n) {
        for (std::size_t j = 0; j < levels[n].size(); ++j) {
            if (zero_part.at(n, j) + one_part.at(n, j) != levels[n][j]) {
                return false;
            }
        }
    }
    return true;
}

Rational ville_sum(const MartingaleTable& table, std::vector<BitString> nodes) {
    std::sort(nodes.begin(), nodes.end());
    // After sorting, any prefix pair must appear adjacently: if a is a prefix
    // of c and a <= b <= c, then b agrees with a on a's length, so a is a
    // prefix of b as well. Checking neighbors therefore covers all pairs.
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        if (nodes[i].is_prefix_of(nodes[i + 1])) {
            throw NotPrefixFree("\"" + nodes[i].str() + "\" is a prefix of \"" +
                                nodes[i + 1].str() + "\"");
        }
    }
    Rational sum(0);
    for (const BitString& node : nodes) {
        sum += pow2(-static_cast<long>(node.size())) * table.at(node);
    }
    return sum;
}

MartingaleTable mix(const std::vector<MartingaleTable>& tables,
                    const std::vector<Rational>& weights) {
    if (tables.empty() || tables.size() != weights.size()) {
        throw PreconditionViolated("mix needs matching nonempty table and weight lists");
    }
    for (const Rational& w : weights) {
        if (w <= 0) {
            throw PreconditionViolated("mix weights must be positive");
        }
    }
    std::size_t depth = tables[0].depth();
    for (const MartingaleTable& t : tables) {
        if (t.depth() != depth) {
            throw DepthMismatch("mix needs tables of equal depth");
        }
    }
    MartingaleTable result(depth);
    for (std::size_t n = 0; n <= depth; ++n) {
        for (std::size_t j = 0; j < (std::size_t{1} << n); ++j) {
            Rational sum(0);
            for (std::size_t i = 0; i < tables.size(); ++i) {
                sum += weights[i] * tables[i].at(n, j);
            }
            result.at(n, j) = sum;
        }
    }
    return result;
}

}  // namespace betkit
