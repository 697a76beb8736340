#include "vpec/errors.hpp"
#include "vpec/rational.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <cctype>
#include <cstdio>
#include <limits>

namespace vpec {

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) noexcept {
    std::uint64_t result = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && result > std::numeric_limits<std::uint64_t>::max() / base) {
            return std::numeric_limits<std::uint64_t>::max();
        }
        result *= base;
    }
    return result;
}

std::uint64_t checked_binomial(std::uint64_t n, std::uint64_t k) noexcept {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;
        if (result > std::numeric_limits<std::uint64_t>::max()) {
            return std::numeric_limits<std::uint64_t>::max();
        }
    }
    return static_cast<std::uint64_t>(result);
}

void require_budget(const std::string& what, std::uint64_t required, std::uint64_t budget) {
    if (required > budget) throw BudgetExceeded(what, required, budget);
}

std::string to_exact(const Rational& r) {
    const BigInt num = numerator(r);
    const BigInt den = denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::string to_decimal(const Rational& r, int digits) {
    using Dec = boost::multiprecision::cpp_dec_float_50;
    const Dec value = Dec(numerator(r)) / Dec(denominator(r));
    const auto as_long = static_cast<long double>(value);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*Lg", digits, as_long);
    return buf;
}

Rational parse_rational(std::string_view text) {
    auto parse_int = [&](std::string_view part) -> BigInt {
        if (part.empty()) throw ParseError("empty rational component in '" + std::string(text) + "'");
        std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (start == part.size()) throw ParseError("malformed rational '" + std::string(text) + "'");
        for (std::size_t i = start; i < part.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(part[i]))) {
                throw ParseError("malformed rational '" + std::string(text) +
                                 "' (expected p/q with integers)");
            }
        }
        return BigInt(std::string(part));
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    const BigInt num = parse_int(text.substr(0, slash));
    const BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

BigInt floor_of(const Rational& r) {
    BigInt q = numerator(r) / denominator(r);  // truncates toward zero
    if (r < 0 && Rational(q) != r) q -= 1;
    return q;
}

bool is_integer(const Rational& r) { return denominator(r) == 1; }

}  // namespace vpec
