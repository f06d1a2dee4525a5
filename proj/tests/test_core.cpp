#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

#include "betkit/dyadic.hpp"
#include "betkit/errors.hpp"
#include "betkit/martingale.hpp"
#include "betkit/prediction.hpp"
#include "betkit/rational.hpp"
#include "betkit/rng.hpp"
#include "betkit/serialization.hpp"
#include "betkit/strategy_rule.hpp"
#include "betkit/trajectory.hpp"

#include "test_support.hpp"

using namespace betkit;
using namespace betkit::testing;

// ---------------------------------------------------------------------------
// Rational utilities
// ---------------------------------------------------------------------------

TEST_CASE("rational parse and format round trip in lowest terms") {
    CHECK(format_rational(parse_rational("3/2")) == "3/2");
    CHECK(format_rational(parse_rational("6/4")) == "3/2");
    CHECK(format_rational(parse_rational("-7/3")) == "-7/3");
    CHECK(format_rational(parse_rational("0")) == "0");
    CHECK(format_rational(parse_rational("5")) == "5");
    CHECK(parse_rational("3/2") == Rational(3) / 2);
    CHECK_THROWS_AS(parse_rational("abc"), ParseFailure);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseFailure);
    CHECK_THROWS_AS(parse_rational(""), ParseFailure);
}

TEST_CASE("pow2 and pow_rational are exact") {
    CHECK(pow2(0) == Rational(1));
    CHECK(pow2(10) == Rational(1024));
    CHECK(pow2(-3) == Rational(1) / 8);
    CHECK(pow_rational(parse_rational("3/2"), 3) == parse_rational("27/8"));
    CHECK(pow_rational(parse_rational("7/5"), 0) == Rational(1));
    CHECK(pow_rational(Rational(0), 4) == Rational(0));
}

TEST_CASE("compare_with_pow2 resolves fractional exponents exactly") {
    // (3/2)^2 = 9/4 > 2, so 3/2 > 2^(1/2); (5/4)^2 = 25/16 < 2.
    CHECK(compare_with_pow2(parse_rational("3/2"), 1, 2) == 1);
    CHECK(compare_with_pow2(parse_rational("5/4"), 1, 2) == -1);
    CHECK(compare_with_pow2(Rational(2), 1, 1) == 0);
    CHECK(compare_with_pow2(parse_rational("1/4"), -2, 1) == 0);
    // (1/3)^2 = 1/9 < 1/8 = 2^(-3), so 1/3 < 2^(-3/2).
    CHECK(compare_with_pow2(parse_rational("1/3"), -3, 2) == -1);
    CHECK(compare_with_pow2(parse_rational("3/2"), parse_rational("1/2")) == 1);
    CHECK(compare_with_pow2(parse_rational("5/4"), parse_rational("1/2")) == -1);
    CHECK(compare_with_pow2(Rational(8), Rational(3)) == 0);
    CHECK(compare_with_pow2(Rational(0), -100, 1) == -1);
}

TEST_CASE("floor_div and floor_rational round toward minus infinity") {
    CHECK(floor_div(Integer(7), Integer(2)) == Integer(3));
    CHECK(floor_div(Integer(-7), Integer(2)) == Integer(-4));
    CHECK(floor_div(Integer(7), Integer(-2)) == Integer(-4));
    CHECK(floor_div(Integer(-7), Integer(-2)) == Integer(3));
    CHECK(floor_rational(parse_rational("7/2")) == Integer(3));
    CHECK(floor_rational(parse_rational("-7/2")) == Integer(-4));
    CHECK(floor_rational(Rational(5)) == Integer(5));
    CHECK(floor_rational(Rational(-5)) == Integer(-5));
}

TEST_CASE("log2_approx matches double arithmetic on small values") {
    CHECK(log2_approx(Rational(8)) == doctest::Approx(3.0));
    CHECK(log2_approx(parse_rational("3/2")) == doctest::Approx(0.5849625007211562));
    CHECK(log2_approx(parse_rational("1/4")) == doctest::Approx(-2.0));
}

// ---------------------------------------------------------------------------
// Dyadic bounds
// ---------------------------------------------------------------------------

TEST_CASE("dyadic bounds straddle the target with directed rounding") {
    const Rational x = parse_rational("22/7");
    const DyadicBound down = from_rational(x, 40, Rounding::Down);
    const DyadicBound up = from_rational(x, 40, Rounding::Up);
    CHECK(compare(down, x) <= 0);
    CHECK(compare(up, x) >= 0);
    CHECK(compare(down, up) <= 0);
    CHECK(Rational(up.value() - down.value()) < pow2(-30));

    // Like-rounded powers stay on the same side of the exact power.
    const Rational exact = pow_rational(x, 5);
    CHECK(compare(pow(down, 5, 40, Rounding::Down), exact) <= 0);
    CHECK(compare(pow(up, 5, 40, Rounding::Up), exact) >= 0);

    // Dyadic inputs are represented exactly in both directions.
    const Rational half = parse_rational("3/8");
    CHECK(from_rational(half, 40, Rounding::Down).value() == half);
    CHECK(from_rational(half, 40, Rounding::Up).value() == half);
}

// ---------------------------------------------------------------------------
// Bit strings
// ---------------------------------------------------------------------------

TEST_CASE("bitstring parsing, indexing, and ordering") {
    const BitString s = BitString::parse("0101");
    CHECK(s.size() == 4);
    CHECK(s.bit(0) == 0);
    CHECK(s.bit(1) == 1);
    CHECK(s.str() == "0101");
    CHECK(s.count_zeros() == 2);
    CHECK(s.count_ones() == 2);
    CHECK_THROWS_AS(BitString::parse("012"), ParseFailure);

    CHECK(BitString::from_level_offset(3, 5).str() == "101");
    CHECK(BitString::from_level_offset(0, 0).empty());
    for (std::size_t offset = 0; offset < 16; ++offset) {
        const BitString node = BitString::from_level_offset(4, offset);
        CHECK(node.level_offset() == offset);
    }

    CHECK(BitString() < BitString::parse("0"));
    CHECK(BitString::parse("0") < BitString::parse("00"));
    CHECK(BitString::parse("00") < BitString::parse("01"));
    CHECK(BitString::parse("01") < BitString::parse("1"));

    CHECK(BitString::parse("01").is_prefix_of(BitString::parse("0110")));
    CHECK_FALSE(BitString::parse("10").is_prefix_of(BitString::parse("0110")));
    CHECK(BitString::parse("0110").prefix(2) == BitString::parse("01"));
    CHECK(BitString::parse("01").child(1) == BitString::parse("011"));

    BitString t = BitString::parse("10");
    t.append(1);
    CHECK(t.str() == "101");
    t.pop_back();
    CHECK(t.str() == "10");
}

// ---------------------------------------------------------------------------
// Table validation
// ---------------------------------------------------------------------------

TEST_CASE("validate_martingale accepts fair tables and reports violations") {
    CHECK(validate_martingale(make_table(1, {{"", "1"}, {"0", "3/2"}, {"1", "1/2"}})).ok());
    CHECK(validate_martingale(example_table()).ok());
    CHECK(validate_martingale(MartingaleTable::constant(4, parse_rational("5/7"))).ok());
    CHECK(validate_martingale(MartingaleTable(0)).ok());

    const ValidationReport unfair =
        validate_martingale(make_table(1, {{"", "1"}, {"0", "3/2"}, {"1", "3/4"}}));
    CHECK_FALSE(unfair.ok());
    CHECK(unfair.problems.size() == 1);

    MartingaleTable negative = MartingaleTable::constant(2, Rational(1));
    negative.at(BitString::parse("01")) = Rational(-1);
    negative.at(BitString::parse("00")) = Rational(3);
    CHECK_FALSE(validate_martingale(negative).ok());

    // Every level-5 node is unfair: 32 problems, capped at 20 messages.
    MartingaleTable capped = MartingaleTable::constant(6, Rational(1));
    for (std::size_t offset = 0; offset < 64; ++offset) {
        capped.at(6, offset) = Rational(2);
    }
    const ValidationReport report = validate_martingale(capped);
    CHECK_FALSE(report.ok());
    CHECK(report.problems.size() == 20);
    CHECK(report.suppressed == 12);
}

TEST_CASE("randomly split tables are always valid") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t depth = 1 + rng.next_below(8);
        const MartingaleTable table = random_table(rng, depth, Rational(1));
        CHECK(validate_martingale(table).ok());
        CHECK(table.root() == Rational(1));
    }
}

// ---------------------------------------------------------------------------
// Wagers and running maxima
// ---------------------------------------------------------------------------

TEST_CASE("wager reads the stake on outcome 1") {
    const MartingaleTable table = example_table();
    CHECK(wager(table, BitString()) == parse_rational("-1/2"));
    CHECK(wager(table, BitString::parse("0")) == parse_rational("1/2"));
    CHECK(wager(table, BitString::parse("1")) == Rational(0));
}

TEST_CASE("wager is antisymmetric between the two children") {
    SplitMix64 rng(12);
    const MartingaleTable table = random_table(rng, 6, Rational(1));
    for (std::size_t level = 0; level < 6; ++level) {
        for (std::size_t offset = 0; offset < (std::size_t{1} << level); ++offset) {
            const BitString node = BitString::from_level_offset(level, offset);
            const Rational stake = wager(table, node);
            CHECK(Rational(table.at(node.child(0)) - table.at(node)) == Rational(-stake));
        }
    }
}

TEST_CASE("running_max tracks the prefix chain") {
    const MartingaleTable table = example_table();
    CHECK(running_max(table, BitString()) == Rational(1));
    CHECK(running_max(table, BitString::parse("01")) == Rational(2));
    CHECK(running_max(table, BitString::parse("11")) == Rational(1));

    SplitMix64 rng(13);
    const MartingaleTable random = random_table(rng, 8, Rational(1));
    for (int trial = 0; trial < 40; ++trial) {
        const BitString node = BitString::from_level_offset(8, rng.next_below(256));
        Rational previous = running_max(random, BitString());
        for (std::size_t length = 1; length <= 8; ++length) {
            const Rational current = running_max(random, node.prefix(length));
            CHECK(current >= previous);
            CHECK(current >= random.at(node.prefix(length)));
            previous = current;
        }
    }
}

// ---------------------------------------------------------------------------
// Sidedness
// ---------------------------------------------------------------------------

TEST_CASE("sided increments are recognized on both sides") {
    SplitMix64 rng(14);
    const MartingaleTable zero_sided =
        random_sided_increment(rng, 6, PredictionFunction::constant(0), Rational(1));
    const MartingaleTable one_sided =
        random_sided_increment(rng, 6, PredictionFunction::constant(1), Rational(1));
    CHECK(is_zero_sided(zero_sided));
    CHECK_FALSE(is_zero_sided(one_sided));
    CHECK(is_one_sided(one_sided));
    CHECK_FALSE(is_one_sided(zero_sided));

    // A never-betting table is sided both ways, but not strictly.
    const MartingaleTable flat = MartingaleTable::constant(4, Rational(1));
    CHECK(is_zero_sided(flat));
    CHECK(is_one_sided(flat));
    CHECK_FALSE(is_strictly_f_sided(flat, PredictionFunction::constant(0)));
}

TEST_CASE("is_f_sided follows a table-backed predictor") {
    SplitMix64 rng(15);
    const PredictionFunction f = random_prediction(rng, 5);
    const MartingaleTable follows = random_sided_increment(rng, 5, f, Rational(1));
    const MartingaleTable strict = random_sided_increment(rng, 5, f, Rational(1), true);
    CHECK(is_f_sided(follows, f));
    CHECK(is_f_sided(strict, f));
    CHECK(is_strictly_f_sided(strict, f));
    CHECK(is_zero_sided(follows) == false);  // f flips somewhere at depth 5
}

TEST_CASE("sidedness is closed under mixing") {
    SplitMix64 rng(16);
    const MartingaleTable a =
        random_sided_increment(rng, 5, PredictionFunction::constant(0), Rational(1));
    const MartingaleTable b =
        random_sided_increment(rng, 5, PredictionFunction::constant(0), parse_rational("1/3"));
    CHECK(is_zero_sided(mix({a, b}, {parse_rational("2/5"), Rational(3)})));
}

// ---------------------------------------------------------------------------
// Separability witnesses
// ---------------------------------------------------------------------------

TEST_CASE("is_separable_witness checks parts and their sum") {
    SplitMix64 rng(17);
    const MartingaleTable zero_part =
        random_sided_increment(rng, 5, PredictionFunction::constant(0), Rational(1));
    const MartingaleTable one_part =
        random_sided_increment(rng, 5, PredictionFunction::constant(1), parse_rational("1/2"));
    const MartingaleTable total = mix({zero_part, one_part}, {Rational(1), Rational(1)});
    CHECK(is_separable_witness(total, zero_part, one_part));
    CHECK_FALSE(is_separable_witness(total, one_part, zero_part));

    // Halving both parts witnesses the halved mixture.
    const MartingaleTable half = mix({zero_part, one_part},
                                     {parse_rational("1/2"), parse_rational("1/2")});
    CHECK(is_separable_witness(half, mix({zero_part}, {parse_rational("1/2")}),
                               mix({one_part}, {parse_rational("1/2")})));

    // Constants are sided both ways, so constant splits always witness.
    const MartingaleTable flat = MartingaleTable::constant(3, Rational(2));
    CHECK(is_separable_witness(flat, MartingaleTable::constant(3, parse_rational("1/2")),
                               MartingaleTable::constant(3, parse_rational("3/2"))));

    // Sum mismatch is rejected.
    CHECK_FALSE(is_separable_witness(total, zero_part, zero_part));
    CHECK_THROWS_AS(
        is_separable_witness(MartingaleTable(3), MartingaleTable(2), MartingaleTable(3)),
        DepthMismatch);
}

// ---------------------------------------------------------------------------
// Ville sums over antichains
// ---------------------------------------------------------------------------

TEST_CASE("ville_sum frozen values") {
    CHECK(ville_sum(MartingaleTable::constant(2, Rational(1)), full_level(2)) == Rational(1));
    const MartingaleTable small = make_table(1, {{"", "1"}, {"0", "3/2"}, {"1", "1/2"}});
    CHECK(ville_sum(small, {BitString::parse("0")}) == parse_rational("3/4"));
    CHECK(ville_sum(small, {}) == Rational(0));
    CHECK_THROWS_AS(ville_sum(small, {BitString::parse("0"), BitString::parse("01")}),
                    NotPrefixFree);
    CHECK_THROWS_AS(ville_sum(small, {BitString::parse("00")}), DepthExceeded);
}

TEST_CASE("ville_sum never exceeds the root and covers exactly on full antichains") {
    SplitMix64 rng(18);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t depth = 1 + rng.next_below(8);
        const MartingaleTable table = random_table(rng, depth, parse_rational("7/5"));
        CHECK(ville_sum(table, random_prefix_free(rng, depth)) <= table.root());
        CHECK(ville_sum(table, random_full_antichain(rng, depth)) == table.root());
    }
}

// ---------------------------------------------------------------------------
// Mixtures
// ---------------------------------------------------------------------------

TEST_CASE("mix forms exact convex and conic combinations") {
    const MartingaleTable table = example_table();
    CHECK(mix({table}, {Rational(1)}) == table);
    CHECK(mix({MartingaleTable::constant(3, Rational(2)),
               MartingaleTable::constant(3, Rational(3))},
              {parse_rational("1/2"), parse_rational("1/3")}) ==
          MartingaleTable::constant(3, Rational(2)));

    CHECK_THROWS_AS(mix({}, {}), PreconditionViolated);
    CHECK_THROWS_AS(mix({table}, {Rational(1), Rational(1)}), PreconditionViolated);
    CHECK_THROWS_AS(mix({table}, {Rational(0)}), PreconditionViolated);
    CHECK_THROWS_AS(mix({table, MartingaleTable(3)}, {Rational(1), Rational(1)}),
                    DepthMismatch);
}

// ---------------------------------------------------------------------------
// Predictions
// ---------------------------------------------------------------------------

TEST_CASE("prediction kinds and guess counting") {
    const PredictionFunction zero = PredictionFunction::constant(0);
    CHECK(zero.is_constant());
    CHECK(zero.constant_bit() == 0);
    CHECK(zero(BitString::parse("0110")) == 0);

    SplitMix64 rng(19);
    const PredictionFunction table_f = random_prediction(rng, 4);
    CHECK(table_f.is_table());
    CHECK(table_f.depth() == 4);

    const PredictionFunction callable = PredictionFunction::from_callable(
        [](const BitString& prefix) { return prefix.size() % 2 == 0 ? 1 : 0; });
    CHECK(callable(BitString()) == 1);
    CHECK(callable(BitString::parse("0")) == 0);

    // Constant-0 predictor is correct exactly on the zeros of the path.
    const auto [correct, incorrect] = guess_counts(zero, BitString::parse("00101"));
    CHECK(correct == 3);
    CHECK(incorrect == 2);

    const auto [all_right, none_wrong] = guess_counts(callable, BitString::parse("10"));
    CHECK(all_right == 2);
    CHECK(none_wrong == 0);
}

// ---------------------------------------------------------------------------
// Trajectories and growth
// ---------------------------------------------------------------------------

TEST_CASE("evaluate reads capital along a path") {
    const CapitalTrajectory trajectory = evaluate(example_table(), BitString::parse("01"));
    CHECK(trajectory.capital ==
          std::vector<Rational>{Rational(1), parse_rational("3/2"), Rational(2)});
    CHECK_THROWS_AS(evaluate(example_table(), BitString::parse("000")), DepthExceeded);

    // All-in on ten zeros doubles ten times.
    const BitString zeros = BitString::from_level_offset(10, 0);
    const CapitalTrajectory doubling = evaluate(all_in_chain(10, zeros, Rational(1)), zeros);
    CHECK(doubling.capital.back() == Rational(1024));
}

TEST_CASE("growth_exponent frozen values and error cases") {
    const BitString zeros = BitString::from_level_offset(10, 0);
    const MartingaleTable chain = all_in_chain(10, zeros, Rational(1));
    CHECK(validate_martingale(chain).ok());
    const GrowthReport doubling = growth_exponent(evaluate(chain, zeros));
    CHECK(doubling.final_exponent == doctest::Approx(1.0));
    CHECK(doubling.max_exponent == doctest::Approx(1.0));

    const GrowthReport flat = growth_exponent(
        evaluate(MartingaleTable::constant(5, Rational(1)), BitString::parse("01011")));
    CHECK(flat.final_exponent == doctest::Approx(0.0));
    CHECK(flat.max_exponent == doctest::Approx(0.0));

    // Exponents measure absolute capital, not gain over the starting stake:
    // a constant capital of 3 reports log2(3) / n.
    const GrowthReport rich = growth_exponent(
        evaluate(MartingaleTable::constant(5, Rational(3)), BitString::parse("01011")));
    CHECK(rich.final_exponent == doctest::Approx(std::log2(3.0) / 5));
    CHECK(rich.max_exponent == doctest::Approx(std::log2(3.0)));

    const GrowthReport rate = growth_exponent(
        CapitalTrajectory{BitString::parse("0"), {Rational(1), parse_rational("3/2")}});
    CHECK(rate.final_exponent == doctest::Approx(0.5849625007211562));

    const GrowthReport ruin = growth_exponent(
        CapitalTrajectory{BitString::parse("1"), {Rational(1), Rational(0)}});
    CHECK(std::isinf(ruin.final_exponent));
    CHECK(ruin.final_exponent < 0);

    CHECK_THROWS_AS(
        growth_exponent(CapitalTrajectory{BitString(), {Rational(1)}}), PreconditionViolated);
    CHECK_THROWS_AS(
        growth_exponent(CapitalTrajectory{BitString::parse("1"), {Rational(0), Rational(1)}}),
        ZeroInitialCapital);
}

TEST_CASE("rules wrap tables and tables expand rules") {
    const MartingaleTable table = example_table();
    const StrategyRule rule = rule_from_table(table);
    const CapitalTrajectory via_rule = evaluate(rule, BitString::parse("01"));
    const CapitalTrajectory via_table = evaluate(table, BitString::parse("01"));
    CHECK(via_rule.capital == via_table.capital);
    CHECK(table_from_rule(rule, 2) == table);
    CHECK_THROWS_AS(evaluate(rule, BitString::parse("010")), DepthExceeded);
}

// ---------------------------------------------------------------------------
// Randomness
// ---------------------------------------------------------------------------

TEST_CASE("splitmix64 matches the reference sequence") {
    SplitMix64 rng(0);
    CHECK(rng.next() == 0xE220A8397B1DCDAFull);
    CHECK(rng.next() == 0x6E789E6AA1B965F4ull);
    CHECK(rng.next() == 0x06C45D188009454Full);

    SplitMix64 a(1234567891011ull);
    SplitMix64 b(1234567891011ull);
    for (int i = 0; i < 100; ++i) {
        const std::uint64_t bound = 1 + (i * 37) % 1000;
        const std::uint64_t draw = a.next_below(bound);
        CHECK(draw == b.next_below(bound));
        CHECK(draw < bound);
    }
}

TEST_CASE("biased_bits is deterministic with exact threshold edges") {
    const BitString first = biased_bits(parse_rational("7/10"), 42, 64);
    const BitString second = biased_bits(parse_rational("7/10"), 42, 64);
    CHECK(first == second);
    CHECK(first.size() == 64);

    CHECK(biased_bits(Rational(0), 7, 20).count_zeros() == 0);
    CHECK(biased_bits(Rational(1), 7, 20).count_zeros() == 20);

    // Frequency sanity on one pinned draw: 1400 +- 100 zeros out of 2000.
    const std::size_t zeros = biased_bits(parse_rational("7/10"), 42, 2000).count_zeros();
    CHECK(zeros > 1300);
    CHECK(zeros < 1500);

    CHECK_THROWS_AS(biased_bits(parse_rational("-1/10"), 1, 4), QOutOfRange);
    CHECK_THROWS_AS(biased_bits(parse_rational("11/10"), 1, 4), QOutOfRange);
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

TEST_CASE("table json round trip") {
    const MartingaleTable table = example_table();
    const Json document = table_to_json(table);
    CHECK(document["depth"] == 2);
    CHECK(document["values"][""] == "1");
    CHECK(document["values"]["01"] == "2");
    CHECK(table_from_json(document) == table);

    Json missing = document;
    missing["values"].erase("10");
    CHECK_THROWS_AS(table_from_json(missing), MissingEntry);

    Json extra = document;
    extra["values"]["000"] = "1";
    CHECK_THROWS_AS(table_from_json(extra), Error);

    Json malformed = document;
    malformed["values"]["11"] = "x";
    CHECK_THROWS_AS(table_from_json(malformed), ParseFailure);
}

TEST_CASE("prediction json round trip") {
    const Json constant = prediction_to_json(PredictionFunction::constant(1));
    CHECK(constant["constant"] == 1);
    CHECK(prediction_from_json(constant).constant_bit() == 1);

    SplitMix64 rng(20);
    const PredictionFunction f = random_prediction(rng, 3);
    const PredictionFunction g = prediction_from_json(prediction_to_json(f));
    for (std::size_t level = 0; level < 3; ++level) {
        for (std::size_t offset = 0; offset < (std::size_t{1} << level); ++offset) {
            const BitString node = BitString::from_level_offset(level, offset);
            CHECK(f(node) == g(node));
        }
    }
}

TEST_CASE("trajectory json and csv freeze the report format") {
    const CapitalTrajectory trajectory{
        BitString::parse("01"), {Rational(1), parse_rational("3/2"), Rational(2)}};
    const Json document = trajectory_to_json(trajectory);
    CHECK(document["path"] == "01");
    CHECK(document["capital"] == Json::array({"1", "3/2", "2"}));

    CHECK(trajectory_to_csv(trajectory) ==
          "n,capital,log2_exponent\n"
          "0,1,\n"
          "1,3/2,0.584962500721\n"
          "2,2,0.500000000000\n");

    const CapitalTrajectory ruin{BitString::parse("1"), {Rational(1), Rational(0)}};
    CHECK(trajectory_to_csv(ruin) ==
          "n,capital,log2_exponent\n"
          "0,1,\n"
          "1,0,-inf\n");
}

TEST_CASE("bits files round trip") {
    const std::string path = "core_bits_roundtrip.tmp";
    const BitString bits = biased_bits(parse_rational("1/3"), 9, 100);
    write_bits_file(path, bits);
    CHECK(read_bits_file(path) == bits);
    std::remove(path.c_str());
}

TEST_CASE("json file round trip is byte stable") {
    const std::string path = "core_json_roundtrip.tmp";
    const Json document = table_to_json(example_table());
    write_json_file(path, document);
    CHECK(read_json_file(path) == document);
    CHECK(json_to_string(document).back() == '\n');
    std::remove(path.c_str());
    CHECK_THROWS_AS(read_json_file("does_not_exist.tmp"), ParseFailure);
}
