#include "socrep/integer.hpp"

#include "socrep/errors.hpp"

#include <cctype>

namespace socrep {

namespace {

bool is_decimal(std::string_view text) {
    std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
    if (start == text.size()) return false;
    for (std::size_t i = start; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
    }
    return true;
}

}  // namespace

Integer parse_integer(std::string_view text) {
    if (!is_decimal(text)) {
        throw InvalidInput("not an integer: '" + std::string(text) + "'");
    }
    std::string digits(text[0] == '+' ? text.substr(1) : text);
    return Integer(digits);
}

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

std::string to_string(const Integer& value) { return value.str(); }

std::string to_string(const Rational& value) {
    if (denominator(value) == 1) return numerator(value).str();
    return numerator(value).str() + "/" + denominator(value).str();
}

int ceil_log2(const Integer& x) {
    if (x < 1) throw InvalidInput("ceil_log2 requires a positive argument");
    if (x == 1) return 0;
    Integer y = x - 1;
    return static_cast<int>(boost::multiprecision::msb(y)) + 1;
}

Integer pow2(int exponent) {
    Integer r = 1;
    r <<= exponent;
    return r;
}

bool is_power_of_two(const Integer& x) {
    return x > 0 && (x & (x - 1)) == 0;
}

Integer gcd(const Integer& a, const Integer& b) {
    return boost::multiprecision::gcd(a, b);
}

std::optional<int> lowest_bit(const Integer& x) {
    if (x == 0) return std::nullopt;
    return static_cast<int>(boost::multiprecision::lsb(x));
}

int popcount(const Integer& x) {
    return static_cast<int>(mpz_popcount(x.backend().data()));
}

std::optional<std::int64_t> to_int64(const Integer& x) {
    if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min()) {
        return std::nullopt;
    }
    return x.convert_to<std::int64_t>();
}

}  // namespace socrep
