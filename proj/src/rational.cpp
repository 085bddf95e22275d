#include "vpgmis/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace vpgmis {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");

    std::string s = text;
    bool negative = false;
    if (s[0] == '+' || s[0] == '-') {
        negative = (s[0] == '-');
        s.erase(0, 1);
    }
    if (s.empty()) throw std::invalid_argument("bad rational literal: " + text);

    const auto slash = s.find('/');
    if (slash != std::string::npos) {
        const std::string num = s.substr(0, slash);
        const std::string den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw std::invalid_argument("bad rational literal: " + text);
        BigInt q(den);
        if (q == 0) throw std::invalid_argument("zero denominator: " + text);
        Rational r(BigInt(num), q);
        return negative ? -r : r;
    }

    // Decimal form: digits [. digits] [e|E [+-] digits]
    std::string mantissa = s;
    long long exp10 = 0;
    const auto epos = s.find_first_of("eE");
    if (epos != std::string::npos) {
        mantissa = s.substr(0, epos);
        const std::string expart = s.substr(epos + 1);
        std::string digits = expart;
        bool expneg = false;
        if (!digits.empty() && (digits[0] == '+' || digits[0] == '-')) {
            expneg = (digits[0] == '-');
            digits.erase(0, 1);
        }
        if (!all_digits(digits))
            throw std::invalid_argument("bad rational literal: " + text);
        exp10 = std::strtoll(digits.c_str(), nullptr, 10);
        if (expneg) exp10 = -exp10;
        // A million decimal digits is already absurd; anything past that is
        // either a typo or an attempt to allocate the moon.
        if (exp10 > 1000000 || exp10 < -1000000)
            throw std::invalid_argument("exponent out of range: " + text);
    }

    std::string intpart = mantissa;
    std::string fracpart;
    const auto dot = mantissa.find('.');
    if (dot != std::string::npos) {
        intpart = mantissa.substr(0, dot);
        fracpart = mantissa.substr(dot + 1);
    }
    if (intpart.empty() && fracpart.empty())
        throw std::invalid_argument("bad rational literal: " + text);
    if (!intpart.empty() && !all_digits(intpart))
        throw std::invalid_argument("bad rational literal: " + text);
    if (!fracpart.empty() && !all_digits(fracpart))
        throw std::invalid_argument("bad rational literal: " + text);

    BigInt digits(intpart.empty() ? "0" : intpart);
    for (char ch : fracpart) {
        digits *= 10;
        digits += (ch - '0');
    }
    exp10 -= static_cast<long long>(fracpart.size());

    Rational r(digits);
    if (exp10 > 0) {
        BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(exp10));
        r *= Rational(scale);
    } else if (exp10 < 0) {
        BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(-exp10));
        r /= Rational(scale);
    }
    return negative ? -r : r;
}

}  // namespace vpgmis
