// src/equivalence.cpp

#include "qrpat/equivalence.hpp"

#include <stdexcept>
#include <string>

#include "qrpat/predictor.hpp"

namespace qrpat {
namespace {

void require_lambda(std::int64_t lambda) {
    if (lambda < 4 || lambda % 2 != 0) {
        throw std::invalid_argument("lambda must be even and >= 4, got " + std::to_string(lambda));
    }
}

void require_room(const Modulus& m, std::int64_t max_denominator) {
    if (max_denominator < 1) throw std::invalid_argument("max_denominator must be >= 1");
    if (Wide{m.value()} <= Wide{max_denominator} * max_denominator) {
        throw std::invalid_argument("modulus " + std::to_string(m.value()) + " must exceed max_denominator^2");
    }
}

// beta mod c*b from the full fraction parameters.
std::int64_t beta_prime_of(const Modulus& m, const ReducedFraction& f) {
    const FractionParams p = fraction_params(m, f);
    return static_cast<std::int64_t>(floor_mod(p.beta, p.c * f.b));
}

// Extended Euclid: returns g and x with a*x = g (mod b).
std::pair<Wide, Wide> ext_gcd(Wide a, Wide b) {
    Wide old_r = a, r = b, old_x = 1, x = 0;
    while (r != 0) {
        const Wide q = floor_div(old_r, r);
        old_r -= q * r;
        std::swap(old_r, r);
        old_x -= q * x;
        std::swap(old_x, x);
    }
    return {old_r, old_x};
}

}  // namespace

bool in_denominator_set(std::int64_t lambda, std::int64_t b) {
    if (b < 1) return false;
    return b % 2 == 1 ? lambda % b == 0 : lambda % (2 * b) == 0;
}

DenominatorSet denominator_set(std::int64_t lambda, std::int64_t max_b) {
    require_lambda(lambda);
    DenominatorSet out{lambda, {}};
    for (std::int64_t b = 1; b <= max_b; ++b) {
        if (in_denominator_set(lambda, b)) out.members.insert(b);
    }
    return out;
}

BetaSignature beta_signature(const Modulus& m, std::int64_t max_denominator) {
    require_room(m, max_denominator);
    BetaSignature sig{m, max_denominator, {}};
    for (const ReducedFraction& f : farey_fractions(max_denominator)) sig.entries.emplace(f, beta_prime_of(m, f));
    return sig;
}

EquivalenceResult layouts_equivalent(const Modulus& m1, const Modulus& m2, std::int64_t lambda,
                                     std::int64_t max_denominator) {
    const DenominatorSet dens = denominator_set(lambda, max_denominator);
    const BetaSignature s1 = beta_signature(m1, max_denominator);
    const BetaSignature s2 = beta_signature(m2, max_denominator);
    // Entries iterate in (b, a) order, so the first mismatch is the witness.
    for (const auto& [frac, beta_prime] : s1.entries) {
        if (!dens.contains(frac.b)) continue;
        if (s2.entries.at(frac) != beta_prime) return {false, frac};
    }
    return {true, std::nullopt};
}

std::int64_t bundle_parameter(const Modulus& m, std::int64_t lambda) {
    require_lambda(lambda);
    std::int64_t s = m.value() % lambda;
    if (2 * s > lambda) s -= lambda;
    return s;
}

std::pair<Rational, Rational> normalized_vertex(const ReducedFraction& frac, std::int64_t beta_prime, std::int64_t k) {
    const Wide b = frac.b;
    const Rational y(Wide{beta_prime} + Wide{parity_factor(frac.b)} * b * k, b * b);
    return {Rational(frac.a, frac.b), y.frac()};
}

bool on_bundle_line(const Rational& X, const Rational& Y, const BundleLine& line) {
    return (Y + Rational(line.s) * X * X - Rational(2 * Wide{line.n}) * X).is_integer();
}

std::optional<std::int64_t> smallest_solution(std::int64_t coeff, std::int64_t rhs, std::int64_t period) {
    if (period < 1) throw std::invalid_argument("smallest_solution: period must be positive");
    const auto [g, inv] = ext_gcd(floor_mod(coeff, period), period);
    if (floor_mod(rhs, g) != 0) return std::nullopt;
    const Wide step = period / g;
    Wide n = floor_mod(Wide{inv} * (floor_mod(rhs, period) / g), step);
    if (2 * n > step) n -= step;
    return static_cast<std::int64_t>(n);
}

std::vector<VertexLine> vertex_on_bundle(const Modulus& m, std::int64_t lambda, const ReducedFraction& frac) {
    return vertex_on_bundle(m, lambda, frac, bundle_parameter(m, lambda));
}

std::vector<VertexLine> vertex_on_bundle(const Modulus& m, std::int64_t lambda, const ReducedFraction& frac,
                                         std::int64_t s) {
    require_lambda(lambda);
    if (floor_mod(Wide{s} - m.value(), lambda) != 0) {
        throw std::invalid_argument("vertex_on_bundle: s must be congruent to m modulo lambda");
    }
    const ReducedFraction f = ReducedFraction::make(frac.a, frac.b);
    if (!in_denominator_set(lambda, f.b)) {
        throw std::domain_error("vertex_on_bundle: denominator " + std::to_string(f.b) +
                                " is outside the denominator set of lambda " + std::to_string(lambda));
    }
    require_room(m, f.b);

    const std::int64_t b = f.b;
    const std::int64_t c = parity_factor(b);
    const std::int64_t bp = reduced_denominator(b);
    const std::int64_t beta_prime = beta_prime_of(m, f);
    // beta' + s a^2 = t c b because s = m (mod c b).
    const Wide shifted = Wide{beta_prime} + Wide{s} * f.a * f.a;
    if (floor_mod(shifted, Wide{c} * b) != 0) throw std::logic_error("vertex_on_bundle: beta' and s disagree mod cb");
    const Wide t = shifted / (Wide{c} * b);

    std::vector<VertexLine> out;
    for (std::int64_t k = 0; k < bp; ++k) {
        // b^2 | c b (t + k) - 2 n a b  <=>  2 a n = c (t + k) (mod b)
        const auto rhs = static_cast<std::int64_t>(floor_mod(Wide{c} * (t + k), b));
        const std::optional<std::int64_t> n = smallest_solution(floor_mod(2 * Wide{f.a}, b), rhs, b);
        if (!n) throw std::logic_error("vertex_on_bundle: line congruence has no solution");
        const auto [X, Y] = normalized_vertex(f, beta_prime, k);
        if (!on_bundle_line(X, Y, {s, *n})) throw std::logic_error("vertex_on_bundle: membership check failed");
        out.push_back({k, *n});
    }
    return out;
}

}  // namespace qrpat
