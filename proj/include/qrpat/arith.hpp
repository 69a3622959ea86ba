// include/qrpat/arith.hpp: exact integer primitives shared by every module.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qrpat {

/// Signed 128-bit intermediate. Any product of two values below 2^63 fits.
using Wide = __int128;

/// Decimal rendering of a 128-bit integer.
std::string to_string(Wide value);

/// Non-negative remainder of `value` modulo `n` (n > 0).
inline Wide floor_mod(Wide value, Wide n) {
    Wide r = value % n;
    return r < 0 ? r + n : r;
}

/// Floor division for n > 0.
inline Wide floor_div(Wide value, Wide n) {
    return (value - floor_mod(value, n)) / n;
}

Wide gcd(Wide a, Wide b);

/// Plot modulus m >= 2.
class Modulus {
public:
    explicit Modulus(std::int64_t m);

    std::int64_t value() const noexcept { return m_; }
    operator std::int64_t() const noexcept { return m_; }

private:
    std::int64_t m_;
};

/// Irreducible fraction a/b with 0 <= a/b <= 1.
struct ReducedFraction {
    std::int64_t a = 0;
    std::int64_t b = 1;

    /// Validating factory; throws std::invalid_argument for unreduced or
    /// out-of-range input.
    static ReducedFraction make(std::int64_t a, std::int64_t b);

    /// Parses "a/b".
    static ReducedFraction parse(std::string_view text);

    friend bool operator==(const ReducedFraction&, const ReducedFraction&) = default;

    std::string str() const;
};

/// Orders fractions by denominator, then numerator.
struct DenominatorFirst {
    bool operator()(const ReducedFraction& lhs, const ReducedFraction& rhs) const noexcept {
        return lhs.b != rhs.b ? lhs.b < rhs.b : lhs.a < rhs.a;
    }
};

/// x^2 mod m, computed without overflow for any int64 x.
std::int64_t qr_mod(std::int64_t x, const Modulus& m);

/// Representative r of v mod n with -n/2 <= r <= n/2. For even n the tie
/// v = n/2 (mod n) maps to -n/2, so that (v - r)/n rounds halves upward.
std::int64_t balanced_residue(Wide v, std::int64_t n);

/// Reduced fractions in [0, 1] with denominator <= max_denominator, ascending.
std::vector<ReducedFraction> farey_fractions(std::int64_t max_denominator);

/// 2 * lcm(2, 3, ..., n). Throws std::overflow_error past int64.
std::int64_t lambda_value(std::int64_t n);

/// b' = b for odd b, b/2 for even b.
inline std::int64_t reduced_denominator(std::int64_t b) { return b % 2 == 0 ? b / 2 : b; }

/// c = b / b'.
inline std::int64_t parity_factor(std::int64_t b) { return b % 2 == 0 ? 2 : 1; }

}  // namespace qrpat
