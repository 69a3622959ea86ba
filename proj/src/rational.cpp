// src/rational.cpp

#include "qrpat/rational.hpp"

#include <stdexcept>

namespace qrpat {
namespace {

Wide checked_mul(Wide a, Wide b) {
    Wide out;
    if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("rational: multiplication overflow");
    return out;
}

Wide checked_add(Wide a, Wide b) {
    Wide out;
    if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("rational: addition overflow");
    return out;
}

}  // namespace

Rational::Rational(Wide num) : num_(num), den_(1) {}

Rational::Rational(Wide num, Wide den) {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const Wide g = gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

Rational Rational::mod(Wide m) const {
    if (m <= 0) throw std::invalid_argument("rational: modulus must be positive");
    // num/den mod m == (num mod m*den)/den
    return Rational(floor_mod(num_, checked_mul(m, den_)), den_);
}

double Rational::to_double() const noexcept {
    // Split off the integer part to keep precision for large numerators.
    const Wide whole = floor();
    const Wide rest = num_ - whole * den_;
    return static_cast<double>(whole) + static_cast<double>(rest) / static_cast<double>(den_);
}

std::string Rational::str() const {
    if (den_ == 1) return to_string(num_);
    return to_string(num_) + "/" + to_string(den_);
}

Rational operator+(const Rational& lhs, const Rational& rhs) {
    const Wide g = gcd(lhs.den_, rhs.den_);
    const Wide l = lhs.den_ / g;
    const Wide r = rhs.den_ / g;
    return Rational(checked_add(checked_mul(lhs.num_, r), checked_mul(rhs.num_, l)), checked_mul(lhs.den_, r));
}

Rational operator-(const Rational& lhs, const Rational& rhs) { return lhs + (-rhs); }

Rational operator*(const Rational& lhs, const Rational& rhs) {
    const Wide g1 = gcd(lhs.num_, rhs.den_);
    const Wide g2 = gcd(rhs.num_, lhs.den_);
    return Rational(checked_mul(lhs.num_ / g1, rhs.num_ / g2), checked_mul(lhs.den_ / g2, rhs.den_ / g1));
}

Rational operator/(const Rational& lhs, const Rational& rhs) {
    if (rhs.num_ == 0) throw std::domain_error("rational: division by zero");
    return lhs * Rational(rhs.den_, rhs.num_);
}

Rational Rational::operator-() const {
    Rational out;
    out.num_ = -num_;
    out.den_ = den_;
    return out;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const Rational diff = lhs - rhs;
    return diff.num_ <=> Wide{0};
}

bool q_congruent(const Rational& s, const Rational& t, const Modulus& m) {
    const Rational diff = s - t;
    return diff.is_integer() && diff.num() % m.value() == 0;
}

}  // namespace qrpat
