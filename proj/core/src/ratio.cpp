#include "dcq/ratio.hpp"

#include <cctype>
#include <cmath>
#include <numeric>

namespace dcq {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

// Parses a run of decimal digits into an unsigned 128-bit value; throws on
// empty input or overflow.
unsigned __int128 parse_digits(std::string_view s, std::string_view whole) {
    if (!all_digits(s)) {
        throw Error(errc::parse_error, "invalid ratio literal '" + std::string(whole) + "'");
    }
    constexpr unsigned __int128 kMax = ~static_cast<unsigned __int128>(0);
    unsigned __int128 value = 0;
    for (char c : s) {
        unsigned digit = static_cast<unsigned>(c - '0');
        if (value > (kMax - digit) / 10) {
            throw Error(errc::overflow, "ratio literal '" + std::string(whole) + "' exceeds the wide-integer range");
        }
        value = value * 10 + digit;
    }
    return value;
}

Ratio reduced(unsigned __int128 num, unsigned __int128 den, std::string_view text) {
    if (den == 0) {
        throw Error(errc::parse_error, "zero denominator in '" + std::string(text) + "'");
    }
    // Euclid on 128-bit values; the result must land in 64 bits.
    unsigned __int128 a = num, b = den;
    while (b != 0) {
        unsigned __int128 t = a % b;
        a = b;
        b = t;
    }
    if (a != 0) {
        num /= a;
        den /= a;
    }
    constexpr unsigned __int128 kI64Max = static_cast<unsigned __int128>(INT64_MAX);
    if (num > kI64Max || den > kI64Max) {
        throw Error(errc::overflow, "ratio '" + std::string(text) + "' does not fit in 64-bit integers after reduction");
    }
    return Ratio::of(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

} // namespace

Ratio Ratio::parse(std::string_view text) {
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        unsigned __int128 num = parse_digits(text.substr(0, slash), text);
        unsigned __int128 den = parse_digits(text.substr(slash + 1), text);
        return reduced(num, den, text);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        if (frac.empty()) {
            throw Error(errc::parse_error, "invalid ratio literal '" + std::string(text) + "'");
        }
        unsigned __int128 num = whole.empty() ? 0 : parse_digits(whole, text);
        unsigned __int128 den = 1;
        constexpr unsigned __int128 kMax = ~static_cast<unsigned __int128>(0);
        for (char c : frac) {
            unsigned digit = static_cast<unsigned>(c - '0');
            if (!std::isdigit(static_cast<unsigned char>(c))) {
                throw Error(errc::parse_error, "invalid ratio literal '" + std::string(text) + "'");
            }
            if (den > kMax / 10 || num > (kMax - digit) / 10) {
                throw Error(errc::overflow, "ratio literal '" + std::string(text) + "' exceeds the wide-integer range");
            }
            num = num * 10 + digit;
            den *= 10;
        }
        return reduced(num, den, text);
    }
    // A bare integer can only be outside (0,1); parse it for the error path.
    unsigned __int128 num = parse_digits(text, text);
    return reduced(num, 1, text);
}

Ratio Ratio::of(std::int64_t num, std::int64_t den) {
    if (den <= 0 || num <= 0 || num >= den) {
        throw Error(errc::ratio_out_of_range,
                    "ratio " + std::to_string(num) + "/" + std::to_string(den) + " is not in (0,1)");
    }
    std::int64_t g = std::gcd(num, den);
    return Ratio(num / g, den / g);
}

double Ratio::log() const noexcept {
    // log1p form stays accurate when num/den is close to 1, where
    // log(num) - log(den) would cancel.
    return std::log1p(static_cast<double>(num_ - den_) / static_cast<double>(den_));
}

std::int64_t Ratio::floor_mul(std::int64_t n) const {
    if (n < 0) {
        throw Error(errc::domain_error, "floor index requested for negative n");
    }
    // num, n < 2^63, so the product always fits in 128 bits; literals that
    // would need more than 64 bits per component were rejected at parse time.
    __int128 prod = static_cast<__int128>(num_) * n;
    return static_cast<std::int64_t>(prod / den_);
}

std::string Ratio::str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
}

} // namespace dcq
