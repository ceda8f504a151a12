#include "edcslab/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace edcslab {

Rational rational_from_decimal(const std::string& text) {
    if (text.empty()) {
        throw std::invalid_argument("empty decimal literal");
    }
    BigInt numerator = 0;
    BigInt denominator = 1;
    bool seen_digit = false;
    bool seen_point = false;
    for (char c : text) {
        if (c == '.') {
            if (seen_point) {
                throw std::invalid_argument("malformed decimal literal: " + text);
            }
            seen_point = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            numerator = numerator * 10 + (c - '0');
            if (seen_point) {
                denominator *= 10;
            }
            seen_digit = true;
        } else {
            throw std::invalid_argument("malformed decimal literal: " + text);
        }
    }
    if (!seen_digit) {
        throw std::invalid_argument("malformed decimal literal: " + text);
    }
    return Rational(numerator, denominator);
}

BigInt rational_ceil(const Rational& x) {
    BigInt num = boost::multiprecision::numerator(x);
    BigInt den = boost::multiprecision::denominator(x);
    BigInt q = num / den;
    if (num % den != 0 && num > 0) {
        ++q;
    }
    return q;
}

std::string to_string(const Rational& x) {
    BigInt num = boost::multiprecision::numerator(x);
    BigInt den = boost::multiprecision::denominator(x);
    if (den == 1) {
        return num.str();
    }
    return num.str() + "/" + den.str();
}

}  // namespace edcslab
