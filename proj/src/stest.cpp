#include "betkit/stest.hpp"

#include <string>

#include "betkit/errors.hpp"

namespace betkit {

namespace {

constexpr long kBoundBits = 40;

}  // namespace

Rational dyadic_upper_bound_pow2_neg(const Rational& exponent) {
    if (exponent.get_den() == 1) {
        if (!exponent.get_num().fits_slong_p()) {
            throw EnumerationTooLarge("power-of-two exponent out of range");
        }
        return pow2(-exponent.get_num().get_si());
    }
    // 2^{-a/b} = 2^{(40 b - a)/b} / 2^40. When the numerator exponent is
    // negative the value is already below 2^{-40} and one grain suffices;
    // otherwise take the integer b-th root (rounded down) and add one grain,
    // which lands strictly above the irrational target.
    const Integer& a = exponent.get_num();
    const Integer& b = exponent.get_den();
    if (a < 0) {
        throw QOutOfRange("dyadic_upper_bound_pow2_neg expects a positive exponent");
    }
    if (!b.fits_ulong_p() || b.get_ui() > 4096) {
        throw EnumerationTooLarge("exponent denominator too large to certify");
    }
    Integer shifted = Integer(kBoundBits) * b - a;
    if (shifted < 0) {
        return pow2(-kBoundBits);
    }
    if (!shifted.fits_ulong_p()) {
        throw EnumerationTooLarge("power-of-two exponent out of range");
    }
    Integer radicand = Integer(1) << shifted.get_ui();
    Integer root;
    mpz_root(root.get_mpz_t(), radicand.get_mpz_t(), b.get_ui());
    Rational bound(root + 1, Integer(1) << kBoundBits);
    bound.canonicalize();
    return bound;
}

ValidationReport validate_stest(const STest& test) {
    ValidationReport report;
    auto add_problem = [&report](const std::string& text) {
        if (report.problems.size() < 20) {
            report.problems.push_back(text);
        } else {
            ++report.suppressed;
        }
    };

    if (!(test.s > 0 && test.s < 1)) {
        add_problem("parameter s = " + format_rational(test.s) +
                    " lies outside the open interval (0,1)");
        return report;
    }

    for (std::size_t k = 0; k < test.levels.size(); ++k) {
        Rational mass = 0;
        for (const BitString& member : test.levels[k]) {
            if (member.size() <= k) {
                add_problem("level " + std::to_string(k) + " contains \"" + member.str() +
                            "\" of length " + std::to_string(member.size()) +
                            ", not exceeding the level index");
            }
            mass += dyadic_upper_bound_pow2_neg(test.s *
                                                Rational(static_cast<unsigned long>(member.size())));
        }
        if (!(mass < pow2(-static_cast<long>(k)))) {
            add_problem("level " + std::to_string(k) + " mass bound " + format_rational(mass) +
                        " is not below 2^-" + std::to_string(k));
        }
    }
    return report;
}

ScaledStrategy n_sigma(const BitString& sigma, const Rational& q, std::size_t depth) {
    if (sigma.size() > depth) {
        throw DepthExceeded("n_sigma target \"" + sigma.str() + "\" is deeper than " +
                            std::to_string(depth));
    }
    if (q < 0) {
        throw QOutOfRange("n_sigma requires q >= 0, got " + format_rational(q));
    }

    ScaledStrategy result;
    result.target_exponent = -(q * Rational(static_cast<unsigned long>(sigma.size())));
    result.exponent_integral = (result.target_exponent.get_den() == 1);
    const Integer stored = floor_rational(result.target_exponent);
    if (!stored.fits_slong_p()) {
        throw EnumerationTooLarge("n_sigma exponent out of range");
    }
    result.stored_exponent = stored.get_si();

    MartingaleTable table(depth);
    table.root() = pow2(result.stored_exponent);
    for (std::size_t level = 0; level < depth; ++level) {
        const std::size_t width = std::size_t{1} << level;
        for (std::size_t offset = 0; offset < width; ++offset) {
            const Rational& here = table.at(level, offset);
            table.at(level + 1, 2 * offset) = here;
            table.at(level + 1, 2 * offset + 1) = here;
        }
        // Only the node sitting on sigma's path bets, and only when sigma's
        // next symbol is 0: all capital rides on that 0.
        if (level < sigma.size()) {
            const std::size_t on_path = sigma.prefix(level).level_offset();
            if (sigma.bit(level) == 0) {
                const Rational& here = table.at(level, on_path);
                table.at(level + 1, 2 * on_path) = 2 * here;
                table.at(level + 1, 2 * on_path + 1) = 0;
            }
        }
    }
    result.table = std::move(table);
    return result;
}

DimStrategy dim_strategy(const STest& test, const Rational& eps, std::size_t depth) {
    ValidationReport report = validate_stest(test);
    if (!report.ok()) {
        throw PreconditionViolated("dim_strategy requires a valid test; first problem: " +
                                   report.problems.front());
    }
    if (!(eps > 0 && eps < 1)) {
        throw EpsOutOfRange("dim_strategy requires eps in (0,1), got " + format_rational(eps));
    }
    if (test.levels.empty()) {
        throw TestExhausted("dim_strategy: no levels available");
    }

    long start_index = 1;
    while (!(pow2(-start_index) < eps / 2)) {
        ++start_index;
    }

    DimStrategy strategy;
    strategy.start_index = start_index;
    strategy.table = MartingaleTable(depth);
    for (std::size_t j = 0; j < test.levels.size(); ++j) {
        const Rational weight = pow2(-(start_index + static_cast<long>(j)));
        strategy.level_weights.push_back(weight);
        for (const BitString& member : test.levels[j]) {
            const ScaledStrategy component = n_sigma(member, test.s, depth);
            for (std::size_t level = 0; level <= depth; ++level) {
                const std::size_t width = std::size_t{1} << level;
                for (std::size_t offset = 0; offset < width; ++offset) {
                    strategy.table.at(level, offset) +=
                        weight * component.table.at(level, offset);
                }
            }
        }
    }
    return strategy;
}

}  // namespace betkit
