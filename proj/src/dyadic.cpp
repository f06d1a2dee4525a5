#include "betkit/dyadic.hpp"

#include "betkit/errors.hpp"

namespace betkit {

Rational DyadicBound::value() const {
    Rational result(mantissa);
    if (exponent >= 0) {
        result *= pow2(exponent);
    } else {
        result /= pow2(-exponent);
    }
    return result;
}

DyadicBound normalize(DyadicBound bound, unsigned precision_bits, Rounding rounding) {
    if (bound.mantissa <= 0) {
        throw PreconditionViolated("dyadic bounds must stay positive");
    }
    std::size_t bits = mpz_sizeinbase(bound.mantissa.get_mpz_t(), 2);
    if (bits <= precision_bits) {
        return bound;
    }
    unsigned long shift = static_cast<unsigned long>(bits - precision_bits);
    Integer trimmed;
    if (rounding == Rounding::Down) {
        mpz_fdiv_q_2exp(trimmed.get_mpz_t(), bound.mantissa.get_mpz_t(), shift);
    } else {
        mpz_cdiv_q_2exp(trimmed.get_mpz_t(), bound.mantissa.get_mpz_t(), shift);
    }
    return DyadicBound{trimmed, bound.exponent + static_cast<long>(shift)};
}

DyadicBound mul(const DyadicBound& a, const DyadicBound& b, unsigned precision_bits,
                Rounding rounding) {
    DyadicBound product{a.mantissa * b.mantissa, a.exponent + b.exponent};
    return normalize(std::move(product), precision_bits, rounding);
}

DyadicBound pow(const DyadicBound& base, unsigned long k, unsigned precision_bits,
                Rounding rounding) {
    DyadicBound result{Integer(1), 0};
    DyadicBound square = normalize(base, precision_bits, rounding);
    while (k > 0) {
        if (k & 1) {
            result = mul(result, square, precision_bits, rounding);
        }
        k >>= 1;
        if (k > 0) {
            square = mul(square, square, precision_bits, rounding);
        }
    }
    return result;
}

DyadicBound from_rational(const Rational& x, unsigned precision_bits,
                          Rounding rounding) {
    if (x <= 0) {
        throw PreconditionViolated("dyadic bounds must stay positive");
    }
    const Integer& num = x.get_num();
    const Integer& den = x.get_den();
    // Scale the numerator so the quotient carries `precision_bits` bits, then
    // divide with the requested rounding.
    long num_bits = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2));
    long den_bits = static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
    long shift = static_cast<long>(precision_bits) + den_bits - num_bits + 1;
    if (shift < 0) shift = 0;
    Integer scaled;
    mpz_mul_2exp(scaled.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(shift));
    Integer mantissa;
    if (rounding == Rounding::Down) {
        mpz_fdiv_q(mantissa.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
    } else {
        mpz_cdiv_q(mantissa.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
    }
    return normalize(DyadicBound{mantissa, -shift}, precision_bits, rounding);
}

int compare(const DyadicBound& a, const DyadicBound& b) {
    // Align exponents and compare mantissas exactly.
    Integer lhs = a.mantissa;
    Integer rhs = b.mantissa;
    long diff = a.exponent - b.exponent;
    if (diff > 0) {
        mpz_mul_2exp(lhs.get_mpz_t(), lhs.get_mpz_t(), static_cast<unsigned long>(diff));
    } else if (diff < 0) {
        mpz_mul_2exp(rhs.get_mpz_t(), rhs.get_mpz_t(), static_cast<unsigned long>(-diff));
    }
    return mpz_cmp(lhs.get_mpz_t(), rhs.get_mpz_t());
}

int compare(const DyadicBound& a, const Rational& x) {
    if (x <= 0) {
        return 1;
    }
    // mantissa * 2^e versus num/den: cross-multiply and shift the smaller side.
    Integer lhs = a.mantissa * x.get_den();
    Integer rhs = x.get_num();
    if (a.exponent > 0) {
        mpz_mul_2exp(lhs.get_mpz_t(), lhs.get_mpz_t(),
                     static_cast<unsigned long>(a.exponent));
    } else if (a.exponent < 0) {
        mpz_mul_2exp(rhs.get_mpz_t(), rhs.get_mpz_t(),
                     static_cast<unsigned long>(-a.exponent));
    }
    return mpz_cmp(lhs.get_mpz_t(), rhs.get_mpz_t());
}

}  // namespace betkit
