// src/residue.cpp

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "qrpat/arith.hpp"

namespace qrpat {

std::string to_string(Wide value) {
    if (value == 0) return "0";
    const bool negative = value < 0;
    // Work with negative magnitudes so the minimum value is representable.
    std::string digits;
    Wide cursor = negative ? value : -value;
    while (cursor != 0) {
        digits.push_back(static_cast<char>('0' - static_cast<int>(cursor % 10)));
        cursor /= 10;
    }
    if (negative) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

Wide gcd(Wide a, Wide b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        const Wide t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Modulus::Modulus(std::int64_t m) : m_(m) {
    if (m < 2) throw std::invalid_argument("modulus must be >= 2, got " + std::to_string(m));
}

ReducedFraction ReducedFraction::make(std::int64_t a, std::int64_t b) {
    if (b < 1) throw std::invalid_argument("fraction denominator must be positive");
    if (a < 0 || a > b) throw std::invalid_argument("fraction must lie in [0, 1]");
    if (gcd(a, b) != 1) {
        throw std::invalid_argument("fraction " + std::to_string(a) + "/" + std::to_string(b) + " is not reduced");
    }
    return ReducedFraction{a, b};
}

ReducedFraction ReducedFraction::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) throw std::invalid_argument("expected a/b, got '" + std::string(text) + "'");
    auto parse_part = [&](std::string_view part) {
        std::int64_t v = 0;
        const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (ec != std::errc{} || ptr != part.data() + part.size() || part.empty()) {
            throw std::invalid_argument("expected a/b, got '" + std::string(text) + "'");
        }
        return v;
    };
    return make(parse_part(text.substr(0, slash)), parse_part(text.substr(slash + 1)));
}

std::string ReducedFraction::str() const { return std::to_string(a) + "/" + std::to_string(b); }

std::int64_t qr_mod(std::int64_t x, const Modulus& m) {
    const Wide r = floor_mod(x, m.value());
    return static_cast<std::int64_t>(r * r % m.value());
}

std::int64_t balanced_residue(Wide v, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("balanced_residue: n must be positive");
    Wide r = floor_mod(v, n);
    if (2 * r >= n && n > 1) r -= n;  // tie 2r == n lands on -n/2
    return static_cast<std::int64_t>(r);
}

std::vector<ReducedFraction> farey_fractions(std::int64_t max_denominator) {
    if (max_denominator < 1) throw std::invalid_argument("farey_fractions: max_denominator must be >= 1");
    // Next-term recurrence: given neighbours a/b < c/d, the successor is
    // (k*c - a)/(k*d - b) with k = floor((n + b)/d).
    std::vector<ReducedFraction> out;
    std::int64_t a = 0, b = 1, c = 1, d = max_denominator;
    out.push_back({a, b});
    while (c <= max_denominator) {
        out.push_back({c, d});
        if (c == 1 && d == 1) break;
        const std::int64_t k = (max_denominator + b) / d;
        const std::int64_t next_c = k * c - a;
        const std::int64_t next_d = k * d - b;
        a = c;
        b = d;
        c = next_c;
        d = next_d;
    }
    return out;
}

std::int64_t lambda_value(std::int64_t n) {
    if (n < 2) throw std::invalid_argument("lambda_value: n must be >= 2");
    Wide l = 1;
    for (std::int64_t k = 2; k <= n; ++k) {
        l = l / gcd(l, k) * k;
        if (2 * l > INT64_MAX) throw std::overflow_error("lambda_value: result exceeds 64 bits");
    }
    return static_cast<std::int64_t>(2 * l);
}

}  // namespace qrpat
