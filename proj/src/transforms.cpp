#include "betkit/transforms.hpp"

#include <utility>

#include "betkit/errors.hpp"

namespace betkit {

MartingaleTable strictify(const MartingaleTable& table, const PredictionFunction& f) {
    if (!is_f_sided(table, f)) {
        throw NotFSided("strictify requires an f-sided table");
    }

    const std::size_t depth = table.depth();
    MartingaleTable companion(depth);
    companion.root() = 1;
    for (std::size_t level = 0; level < depth; ++level) {
        const std::size_t width = std::size_t{1} << level;
        for (std::size_t offset = 0; offset < width; ++offset) {
            const Rational& here = companion.at(level, offset);
            const int favored = f(BitString::from_level_offset(level, offset));
            const std::size_t favored_child = 2 * offset + static_cast<std::size_t>(favored);
            const std::size_t other_child = 2 * offset + static_cast<std::size_t>(1 - favored);
            companion.at(level + 1, favored_child) = here * Rational(3, 2);
            companion.at(level + 1, other_child) = here / 2;
        }
    }

    return mix({table, companion}, {Rational(1), Rational(1)});
}

SavingsTransform savings_transform(const MartingaleTable& table, const Rational& checkpoint) {
    ValidationReport report = validate_martingale(table);
    if (!report.ok()) {
        throw PreconditionViolated("savings_transform requires a valid table; first problem: " +
                                   report.problems.front());
    }
    if (!(checkpoint > table.root())) {
        throw InvalidCheckpoint("checkpoint " + format_rational(checkpoint) +
                                " must exceed the initial capital " +
                                format_rational(table.root()));
    }

    const std::size_t depth = table.depth();
    MartingaleTable active(depth);
    MartingaleTable reserve(depth);
    active.root() = table.root();
    reserve.root() = 0;

    for (std::size_t level = 0; level < depth; ++level) {
        const std::size_t width = std::size_t{1} << level;
        for (std::size_t offset = 0; offset < width; ++offset) {
            const Rational& active_here = active.at(level, offset);
            const Rational& reserve_here = reserve.at(level, offset);
            const Rational& table_here = table.at(level, offset);
            for (std::size_t child = 0; child < 2; ++child) {
                // The active part mirrors the input's proportional bet; when
                // the input is bankrupt there is no proportion to mirror and
                // the active part rides along unchanged.
                Rational active_child = active_here;
                if (table_here > 0) {
                    active_child =
                        active_here * table.at(level + 1, 2 * offset + child) / table_here;
                }
                Rational reserve_child = reserve_here;
                while (active_child >= checkpoint) {
                    reserve_child += active_child / 2;
                    active_child /= 2;
                }
                active.at(level + 1, 2 * offset + child) = std::move(active_child);
                reserve.at(level + 1, 2 * offset + child) = std::move(reserve_child);
            }
        }
    }

    MartingaleTable result = mix({active, reserve}, {Rational(1), Rational(1)});
    return SavingsTransform{std::move(result), std::move(reserve)};
}

}  // namespace betkit
