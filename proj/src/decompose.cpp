#include "betkit/decompose.hpp"

#include "betkit/errors.hpp"

namespace betkit {

ProductDecomposition product_decompose(const MartingaleTable& table) {
    ValidationReport report = validate_martingale(table);
    if (!report.ok()) {
        throw PreconditionViolated("product_decompose requires a valid table; first problem: " +
                                   report.problems.front());
    }

    const std::size_t depth = table.depth();
    MartingaleTable zero_sided(depth);
    MartingaleTable one_sided(depth);
    zero_sided.root() = table.root();
    one_sided.root() = 1;

    for (std::size_t level = 0; level < depth; ++level) {
        const std::size_t width = std::size_t{1} << level;
        for (std::size_t offset = 0; offset < width; ++offset) {
            const Rational& n_here = zero_sided.at(level, offset);
            const Rational& t_here = one_sided.at(level, offset);
            const Rational wager_m =
                table.at(level + 1, 2 * offset + 1) - table.at(level, offset);

            Rational wager_n = 0;
            Rational wager_t = 0;
            if (wager_m < 0 && t_here > 0) {
                wager_n = wager_m / t_here;
            } else if (wager_m > 0 && n_here > 0) {
                wager_t = wager_m / n_here;
            }

            zero_sided.at(level + 1, 2 * offset) = n_here - wager_n;
            zero_sided.at(level + 1, 2 * offset + 1) = n_here + wager_n;
            one_sided.at(level + 1, 2 * offset) = t_here - wager_t;
            one_sided.at(level + 1, 2 * offset + 1) = t_here + wager_t;
        }
    }

    return ProductDecomposition{std::move(zero_sided), std::move(one_sided)};
}

}  // namespace betkit
