#include "axisfit/rational.hpp"

#include <cctype>

namespace axisfit {

Rational Rational::combined(const Rational& a, const Rational& b, bool subtract) {
    using I128 = __int128;
    I128 bn = subtract ? -static_cast<I128>(b.num_) : static_cast<I128>(b.num_);
    std::int64_t g = std::gcd(a.den_, b.den_);
    I128 num = static_cast<I128>(a.num_) * (b.den_ / g) + bn * (a.den_ / g);
    I128 den = static_cast<I128>(a.den_ / g) * b.den_;
    return Rational(checked_narrow(num), checked_narrow(den));
}

Rational operator*(const Rational& a, const Rational& b) {
    using I128 = __int128;
    std::int64_t g1 = std::gcd(a.num_ < 0 ? -a.num_ : a.num_, b.den_);
    std::int64_t g2 = std::gcd(b.num_ < 0 ? -b.num_ : b.num_, a.den_);
    I128 num = static_cast<I128>(a.num_ / g1) * (b.num_ / g2);
    I128 den = static_cast<I128>(a.den_ / g2) * (b.den_ / g1);
    return Rational(Rational::checked_narrow(num), Rational::checked_narrow(den));
}

Rational Rational::from_decimal(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("Rational: empty literal");
    std::size_t i = 0;
    bool negative = false;
    if (text[i] == '+' || text[i] == '-') {
        negative = text[i] == '-';
        ++i;
    }
    std::int64_t mantissa = 0;
    std::int64_t den = 1;
    bool saw_digit = false;
    bool saw_dot = false;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c == '.') {
            if (saw_dot) throw std::invalid_argument("Rational: malformed literal");
            saw_dot = true;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw std::invalid_argument("Rational: malformed literal");
        saw_digit = true;
        if (mantissa > (INT64_MAX - 9) / 10)
            throw std::overflow_error("Rational: literal too large");
        mantissa = mantissa * 10 + (c - '0');
        if (saw_dot) {
            if (den > INT64_MAX / 10)
                throw std::overflow_error("Rational: literal too precise");
            den *= 10;
        }
    }
    if (!saw_digit) throw std::invalid_argument("Rational: malformed literal");
    return Rational(negative ? -mantissa : mantissa, den);
}

std::string Rational::to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace axisfit
