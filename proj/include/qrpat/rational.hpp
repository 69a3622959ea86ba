// include/qrpat/rational.hpp: exact rationals over 128-bit integers.

#pragma once

#include <compare>
#include <string>

#include "qrpat/arith.hpp"

namespace qrpat {

/// Exact rational num/den, always reduced with den > 0.
///
/// Arithmetic is checked: any intermediate that would leave the 128-bit
/// range throws std::overflow_error instead of wrapping. Magnitudes used by
/// the predictor (numerators up to b^2 * m with m < 2^62) stay well inside.
class Rational {
public:
    Rational() = default;
    Rational(Wide num);  // NOLINT(google-explicit-constructor)
    Rational(Wide num, Wide den);

    Wide num() const noexcept { return num_; }
    Wide den() const noexcept { return den_; }

    bool is_integer() const noexcept { return den_ == 1; }

    /// Largest integer not above the value.
    Wide floor() const noexcept { return floor_div(num_, den_); }

    /// Representative in [0, m) of the Q-congruence class mod m.
    Rational mod(Wide m) const;

    /// Representative in [0, 1).
    Rational frac() const { return mod(1); }

    double to_double() const noexcept;
    std::string str() const;

    friend Rational operator+(const Rational& lhs, const Rational& rhs);
    friend Rational operator-(const Rational& lhs, const Rational& rhs);
    friend Rational operator*(const Rational& lhs, const Rational& rhs);
    friend Rational operator/(const Rational& lhs, const Rational& rhs);
    Rational operator-() const;

    Rational& operator+=(const Rational& rhs) { return *this = *this + rhs; }
    Rational& operator-=(const Rational& rhs) { return *this = *this - rhs; }
    Rational& operator*=(const Rational& rhs) { return *this = *this * rhs; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

private:
    Wide num_ = 0;
    Wide den_ = 1;
};

/// True iff (s - t)/m is an integer.
bool q_congruent(const Rational& s, const Rational& t, const Modulus& m);

}  // namespace qrpat
