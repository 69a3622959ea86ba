// src/predictor.cpp

#include "qrpat/predictor.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qrpat {

FractionParams fraction_params(const Modulus& m, const ReducedFraction& frac) {
    const ReducedFraction f = ReducedFraction::make(frac.a, frac.b);
    const Wide b = f.b;
    const Wide b2 = b * b;
    if (Wide{m.value()} <= b2) {
        throw std::invalid_argument("fraction_params: modulus " + std::to_string(m.value()) +
                                    " must exceed b^2 = " + to_string(b2));
    }

    FractionParams p{m, f};
    p.b_prime = reduced_denominator(f.b);
    p.c = parity_factor(f.b);

    const Wide am = Wide{f.a} * m.value();
    p.alpha = balanced_residue(am, f.b);
    p.x0 = static_cast<std::int64_t>((am - p.alpha) / b);
    // a^2 m - 2 a alpha, reduced mod b^2 before it can grow.
    const Wide a2 = Wide{f.a} * f.a;
    const Wide beta = floor_mod(a2 % b2 * (m.value() % b2) - 2 * Wide{f.a} * p.alpha, b2);
    p.beta = static_cast<std::int64_t>(beta);
    p.r0 = qr_mod(p.x0, m);
    return p;
}

bool verify_prop1(const FractionParams& params) {
    const Wide b = params.frac.b;
    const Wide alpha = params.alpha;
    return b * b * params.r0 == Wide{params.beta} * params.m.value() + alpha * alpha;
}

std::vector<std::int64_t> canonical_offsets(std::int64_t b_prime) {
    if (b_prime < 1) throw std::invalid_argument("canonical_offsets: b' must be positive");
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(b_prime));
    for (std::int64_t i = 1 - (b_prime + 1) / 2; i <= b_prime / 2; ++i) out.push_back(i);
    return out;
}

ParabolaFamily parabola_family(const FractionParams& params) {
    const std::int64_t m = params.m.value();
    const std::int64_t a = params.frac.a;
    const std::int64_t b = params.frac.b;
    const std::int64_t bp = params.b_prime;
    const std::int64_t two_over_c = 2 / params.c;

    ParabolaFamily family{params, {}};
    const Rational vertex_x(Wide{a} * m, b);
    for (const std::int64_t i : canonical_offsets(bp)) {
        Parabola p;
        p.params = params;
        p.i = i;
        p.a_prime = static_cast<std::int64_t>(floor_mod(Wide{two_over_c} * i * a, bp));
        p.A = bp * bp;
        p.B = 2 * bp * i - two_over_c * params.alpha;
        p.C = qr_mod(params.x0 + i, params.m);
        p.vertex_x = vertex_x;
        // P_i(j_v) = r_i - (i - alpha/b)^2
        const Rational shift(Wide{i} * b - params.alpha, b);
        p.vertex_y = (Rational(p.C) - shift * shift).mod(m);
        family.members.push_back(std::move(p));
    }
    return family;
}

ResiduePoint evaluate_parabola(const Parabola& p, std::int64_t j) {
    const std::int64_t m = p.params.m.value();
    const Wide x = Wide{p.params.x0} + p.i + Wide{j} * p.params.b_prime;
    if (x < 0 || x >= m) {
        throw std::out_of_range("evaluate_parabola: j = " + std::to_string(j) + " puts x outside [0, m)");
    }
    // A j^2 = (b' j)^2, reduced before squaring.
    const Wide t = floor_mod(Wide{p.params.b_prime} * j, m);
    const Wide r = (t * t % m + floor_mod(p.B, m) * floor_mod(j, m) % m + p.C) % m;
    return {static_cast<std::int64_t>(x), static_cast<std::int64_t>(r)};
}

std::vector<ResiduePoint> residues_near(const Modulus& m, const ReducedFraction& frac, std::int64_t window) {
    if (window < 0 || 2 * Wide{window} >= m.value()) {
        throw std::invalid_argument("residues_near: window must satisfy 0 <= window < m/2");
    }
    const Wide b = frac.b;
    const Wide x0 = floor_div(2 * Wide{frac.a} * m.value() + b, 2 * b);
    const Wide lo = std::max<Wide>(0, x0 - window);
    const Wide hi = std::min<Wide>(m.value() - 1, x0 + window);
    std::vector<ResiduePoint> out;
    for (Wide x = lo; x <= hi; ++x) {
        const auto xi = static_cast<std::int64_t>(x);
        out.push_back({xi, qr_mod(xi, m)});
    }
    return out;
}

FamilyCheck check_family_structure(const ParabolaFamily& family) {
    const FractionParams& params = family.params;
    const Wide m = params.m.value();
    const Wide b = params.frac.b;
    const Rational vertex_x(Wide{params.frac.a} * m, b);
    const Rational unit(m, b * b);
    const Rational gap(m, params.b_prime);

    FamilyCheck check;
    check.count_ok = static_cast<std::int64_t>(family.members.size()) == params.b_prime;
    check.abscissa_ok = std::all_of(family.members.begin(), family.members.end(),
                                    [&](const Parabola& p) { return p.vertex_x == vertex_x; });
    check.lattice_ok = std::all_of(family.members.begin(), family.members.end(), [&](const Parabola& p) {
        return p.vertex_y >= Rational(0) && p.vertex_y < Rational(m) && (p.vertex_y / unit).is_integer();
    });
    check.closed_form_ok = std::all_of(family.members.begin(), family.members.end(), [&](const Parabola& p) {
        const Rational expected = (Rational(params.beta) * unit + Rational(p.a_prime) * gap).mod(m);
        return p.vertex_y == expected;
    });

    std::vector<Rational> ys;
    for (const Parabola& p : family.members) ys.push_back(p.vertex_y);
    std::sort(ys.begin(), ys.end());
    check.gaps_ok = !ys.empty();
    for (std::size_t k = 0; k < ys.size() && check.gaps_ok; ++k) {
        const Rational next = k + 1 < ys.size() ? ys[k + 1] : ys.front() + Rational(m);
        check.gaps_ok = next - ys[k] == gap;
    }
    return check;
}

int count_covering_parabolas(const ParabolaFamily& family, const ResiduePoint& point) {
    const FractionParams& params = family.params;
    int hits = 0;
    for (const Parabola& p : family.members) {
        const Wide offset = Wide{point.x} - params.x0 - p.i;
        if (floor_mod(offset, params.b_prime) != 0) continue;
        const auto j = static_cast<std::int64_t>(offset / params.b_prime);
        if (evaluate_parabola(p, j) == point) ++hits;
    }
    return hits;
}

}  // namespace qrpat
