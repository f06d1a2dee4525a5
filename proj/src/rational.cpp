#include "betkit/rational.hpp"

#include <cctype>
#include <cmath>

#include "betkit/errors.hpp"

namespace betkit {

namespace {

bool is_integer_literal(const std::string& text) {
    if (text.empty()) return false;
    std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (start == text.size()) return false;
    for (std::size_t i = start; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    std::size_t slash = text.find('/');
    std::string num_text = (slash == std::string::npos) ? text : text.substr(0, slash);
    std::string den_text = (slash == std::string::npos) ? "1" : text.substr(slash + 1);
    if (!is_integer_literal(num_text) || !is_integer_literal(den_text)) {
        throw ParseFailure("not a rational literal: \"" + text + "\"");
    }
    Integer num(num_text);
    Integer den(den_text);
    if (den == 0) {
        throw ParseFailure("zero denominator in rational literal: \"" + text + "\"");
    }
    Rational value(num, den);
    value.canonicalize();
    return value;
}

std::string format_rational(const Rational& value) {
    if (value.get_den() == 1) {
        return value.get_num().get_str();
    }
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational pow2(long exponent) {
    Rational result(1);
    if (exponent >= 0) {
        mpz_ui_pow_ui(result.get_num_mpz_t(), 2, static_cast<unsigned long>(exponent));
    } else {
        mpz_ui_pow_ui(result.get_den_mpz_t(), 2, static_cast<unsigned long>(-exponent));
    }
    return result;
}

Rational pow_rational(const Rational& base, unsigned long exponent) {
    Rational result;
    mpz_pow_ui(result.get_num_mpz_t(), base.get_num().get_mpz_t(), exponent);
    mpz_pow_ui(result.get_den_mpz_t(), base.get_den().get_mpz_t(), exponent);
    return result;
}

int compare_with_pow2(const Rational& value, const Integer& num, const Integer& den) {
    if (den <= 0) {
        throw ParseFailure("exponent denominator must be positive");
    }
    if (value <= 0) {
        return -1;  // 2^x is positive
    }
    if (!den.fits_ulong_p()) {
        throw EnumerationTooLarge("exponent denominator too large for exact comparison");
    }
    unsigned long d = den.get_ui();
    Integer lhs;
    Integer rhs;
    mpz_pow_ui(lhs.get_mpz_t(), value.get_num().get_mpz_t(), d);
    mpz_pow_ui(rhs.get_mpz_t(), value.get_den().get_mpz_t(), d);
    // value^den vs 2^num; move the power of two to whichever side keeps
    // exponents nonnegative.
    if (num >= 0) {
        if (!num.fits_ulong_p()) throw EnumerationTooLarge("exponent numerator too large");
        mpz_mul_2exp(rhs.get_mpz_t(), rhs.get_mpz_t(), num.get_ui());
    } else {
        Integer neg = -num;
        if (!neg.fits_ulong_p()) throw EnumerationTooLarge("exponent numerator too large");
        mpz_mul_2exp(lhs.get_mpz_t(), lhs.get_mpz_t(), neg.get_ui());
    }
    return mpz_cmp(lhs.get_mpz_t(), rhs.get_mpz_t());
}

int compare_with_pow2(const Rational& value, const Rational& exponent) {
    return compare_with_pow2(value, exponent.get_num(), exponent.get_den());
}

Integer floor_div(const Integer& num, const Integer& den) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

Integer floor_rational(const Rational& x) {
    return floor_div(x.get_num(), x.get_den());
}

double log2_approx(const Rational& x) {
    if (x <= 0) {
        throw ZeroInitialCapital("log2 of a nonpositive value");
    }
    // log2(p/q) = (log2(p_mant) + p_exp) - (log2(q_mant) + q_exp) with the
    // mantissas extracted at full double precision.
    signed long p_exp = 0;
    signed long q_exp = 0;
    double p_mant = mpz_get_d_2exp(&p_exp, x.get_num().get_mpz_t());
    double q_mant = mpz_get_d_2exp(&q_exp, x.get_den().get_mpz_t());
    return (std::log2(p_mant) + static_cast<double>(p_exp)) -
           (std::log2(q_mant) + static_cast<double>(q_exp));
}

}  // namespace betkit
