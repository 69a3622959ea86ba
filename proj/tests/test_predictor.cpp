#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "oracles.hpp"
#include "qrpat/predictor.hpp"

using namespace qrpat;

namespace {

// Vertex of A j^2 + B j + C over the reals, as (x, y mod m) in lattice
// coordinates: j_v = -B/(2A), y = C - B^2/(4A), x = x0 + i + j_v b'.
std::pair<Rational, Rational> calculus_vertex(const Parabola& p) {
    const Rational jv = Rational(-p.B, 2 * Wide{p.A});
    const Rational y = Rational(p.C) - Rational(Wide{p.B} * p.B, 4 * Wide{p.A});
    const Rational x = Rational(p.params.x0 + p.i) + jv * Rational(p.params.b_prime);
    return {x, y.mod(p.params.m.value())};
}

}  // namespace

TEST_CASE("fraction_params worked examples") {
    SUBCASE("20171, 1/3") {
        const FractionParams p = fraction_params(Modulus(20171), {1, 3});
        CHECK(p.b_prime == 3);
        CHECK(p.c == 1);
        CHECK(p.alpha == -1);
        CHECK(p.x0 == 6724);
        CHECK(p.beta == 4);
        CHECK(p.r0 == 8965);
        CHECK(9 * 8965 == 4 * 20171 + 1);
        CHECK(verify_prop1(p));
    }
    SUBCASE("415, 1/4") {
        const FractionParams p = fraction_params(Modulus(415), {1, 4});
        CHECK(p.b_prime == 2);
        CHECK(p.c == 2);
        CHECK(p.alpha == -1);
        CHECK(p.x0 == 104);
        CHECK(p.beta == 1);
        CHECK(p.r0 == 26);
        CHECK(verify_prop1(p));
    }
    SUBCASE("zero fraction") {
        const FractionParams p = fraction_params(Modulus(977), {0, 1});
        CHECK(p.b_prime == 1);
        CHECK(p.c == 1);
        CHECK(p.alpha == 0);
        CHECK(p.x0 == 0);
        CHECK(p.beta == 0);
        CHECK(p.r0 == 0);
        CHECK(verify_prop1(p));
    }
}

TEST_CASE("fraction_params rejects bad input") {
    CHECK_THROWS_AS(fraction_params(Modulus(49), {1, 7}), std::invalid_argument);
    CHECK_THROWS_AS(fraction_params(Modulus(10), {1, 7}), std::invalid_argument);
    CHECK_THROWS_AS(fraction_params(Modulus(1000), {2, 4}), std::invalid_argument);
    CHECK_NOTHROW(fraction_params(Modulus(50), {1, 7}));
}

TEST_CASE("fraction_params agrees with rounding and direct squaring") {
    oracle::Rng rng(10);
    for (int t = 0; t < 2000; ++t) {
        const auto [a, b] = rng.fraction(30);
        const std::int64_t m = rng.uniform(b * b + 1, 1'000'000'000);
        const FractionParams p = fraction_params(Modulus(m), ReducedFraction::make(a, b));
        CHECK(p.x0 == oracle::nearest_x(a, b, m));
        CHECK(p.r0 == oracle::square_mod(p.x0, m));
        CHECK(p.b_prime * p.c == b);
        CHECK(p.beta >= 0);
        CHECK(p.beta < b * b);
        CHECK(verify_prop1(p));
    }
}

TEST_CASE("fraction_params is exact near 2^62") {
    const std::int64_t m = (std::int64_t{1} << 62) - 57;
    for (const auto& f : farey_fractions(30)) {
        const FractionParams p = fraction_params(Modulus(m), f);
        CHECK(p.x0 == oracle::nearest_x(f.a, f.b, m));
        CHECK(p.r0 == oracle::square_mod(p.x0, m));
        CHECK(verify_prop1(p));
        CHECK(check_family_structure(parabola_family(p)).ok());
    }
}

TEST_CASE("canonical offsets cover Z_b' once") {
    CHECK(canonical_offsets(1) == std::vector<std::int64_t>{0});
    CHECK(canonical_offsets(2) == std::vector<std::int64_t>{0, 1});
    CHECK(canonical_offsets(3) == std::vector<std::int64_t>{-1, 0, 1});
    CHECK(canonical_offsets(4) == std::vector<std::int64_t>{-1, 0, 1, 2});
    for (std::int64_t bp = 1; bp <= 20; ++bp) {
        const auto offs = canonical_offsets(bp);
        REQUIRE(static_cast<std::int64_t>(offs.size()) == bp);
        std::vector<std::int64_t> classes;
        for (auto i : offs) {
            CHECK(2 * std::abs(i) <= bp);
            classes.push_back(((i % bp) + bp) % bp);
        }
        std::sort(classes.begin(), classes.end());
        std::vector<std::int64_t> all(static_cast<std::size_t>(bp));
        std::iota(all.begin(), all.end(), 0);
        CHECK(classes == all);
    }
}

TEST_CASE("parabola_family worked examples") {
    SUBCASE("20171, 1/3") {
        const std::int64_t m = 20171;
        const ParabolaFamily fam = parabola_family(fraction_params(Modulus(m), {1, 3}));
        REQUIRE(fam.members.size() == 3);
        std::vector<Rational> ys;
        for (const auto& p : fam.members) {
            CHECK(p.vertex_x == Rational(m, 3));
            ys.push_back(p.vertex_y);
        }
        std::sort(ys.begin(), ys.end());
        CHECK(ys == std::vector<Rational>{Rational(m, 9), Rational(4 * m, 9), Rational(7 * m, 9)});
        CHECK(check_family_structure(fam).ok());
    }
    SUBCASE("zero fraction") {
        const ParabolaFamily fam = parabola_family(fraction_params(Modulus(977), {0, 1}));
        REQUIRE(fam.members.size() == 1);
        const Parabola& p = fam.members[0];
        CHECK(p.A == 1);
        CHECK(p.B == 0);
        CHECK(p.C == 0);
        CHECK(p.vertex_x == Rational(0));
        CHECK(p.vertex_y == Rational(0));
    }
    SUBCASE("415, 1/4") {
        const ParabolaFamily fam = parabola_family(fraction_params(Modulus(415), {1, 4}));
        REQUIRE(fam.members.size() == 2);
        std::vector<Rational> ys{fam.members[0].vertex_y, fam.members[1].vertex_y};
        std::sort(ys.begin(), ys.end());
        CHECK(ys == std::vector<Rational>{Rational(415, 16), Rational(3735, 16)});
        CHECK(ys[1] - ys[0] == Rational(415, 2));
        CHECK(check_family_structure(fam).ok());
    }
}

TEST_CASE("vertices match the calculus vertex of each parabola") {
    oracle::Rng rng(11);
    for (int t = 0; t < 300; ++t) {
        const auto [a, b] = rng.fraction(30);
        const std::int64_t m = rng.uniform(b * b + 1, 1'000'000'000);
        const ParabolaFamily fam = parabola_family(fraction_params(Modulus(m), ReducedFraction::make(a, b)));
        for (const Parabola& p : fam.members) {
            const auto [x, y] = calculus_vertex(p);
            CHECK(p.vertex_x == x);
            CHECK(p.vertex_y == y);
        }
    }
}

TEST_CASE("family structure over random moduli") {
    oracle::Rng rng(12);
    for (int t = 0; t < 500; ++t) {
        const auto [a, b] = rng.fraction(30);
        const std::int64_t m = rng.uniform(b * b + 1, 1'000'000'000);
        const ParabolaFamily fam = parabola_family(fraction_params(Modulus(m), ReducedFraction::make(a, b)));
        CHECK(static_cast<std::int64_t>(fam.members.size()) == (b % 2 ? b : b / 2));
        const FamilyCheck check = check_family_structure(fam);
        CHECK(check.count_ok);
        CHECK(check.abscissa_ok);
        CHECK(check.lattice_ok);
        CHECK(check.gaps_ok);
        CHECK(check.closed_form_ok);
    }
}

TEST_CASE("a' runs over Z_b'") {
    for (const auto& f : farey_fractions(16)) {
        const ParabolaFamily fam = parabola_family(fraction_params(Modulus(100003), f));
        std::vector<std::int64_t> aps;
        for (const auto& p : fam.members) aps.push_back(p.a_prime);
        std::sort(aps.begin(), aps.end());
        std::vector<std::int64_t> all(fam.members.size());
        std::iota(all.begin(), all.end(), 0);
        CHECK(aps == all);
    }
}

TEST_CASE("evaluate_parabola") {
    const ParabolaFamily fam = parabola_family(fraction_params(Modulus(20171), {1, 3}));
    const Parabola& p = fam.members[1];
    REQUIRE(p.i == 0);
    CHECK(p.B == 2);
    CHECK(evaluate_parabola(p, 0) == ResiduePoint{6724, 8965});
    CHECK(evaluate_parabola(p, 1) == ResiduePoint{6727, 8976});
    CHECK(9 + 2 + 8965 == 8976);

    const ParabolaFamily zero = parabola_family(fraction_params(Modulus(977), {0, 1}));
    for (std::int64_t j = 0; j < 977; j += 37) {
        CHECK(evaluate_parabola(zero.members[0], j) == ResiduePoint{j, j * j % 977});
    }
    CHECK_THROWS_AS(evaluate_parabola(zero.members[0], -1), std::out_of_range);
    CHECK_THROWS_AS(evaluate_parabola(zero.members[0], 977), std::out_of_range);
}

TEST_CASE("parabola congruence on random lattice points") {
    oracle::Rng rng(13);
    for (int t = 0; t < 500; ++t) {
        const auto [a, b] = rng.fraction(30);
        const std::int64_t m = rng.uniform(std::max<std::int64_t>(1000, b * b + 1), 1'000'000'000);
        const ParabolaFamily fam = parabola_family(fraction_params(Modulus(m), ReducedFraction::make(a, b)));
        const Parabola& p = fam.members[static_cast<std::size_t>(rng.uniform(0, fam.members.size() - 1))];
        const std::int64_t bp = p.params.b_prime;
        const std::int64_t base = p.params.x0 + p.i;
        // j anywhere that keeps x in [0, m)
        const std::int64_t jlo = (base >= 0 ? -(base / bp) : (-base + bp - 1) / bp);
        const std::int64_t jhi = (m - 1 - base) / bp;
        const std::int64_t j = rng.uniform(jlo, jhi);
        const ResiduePoint pt = evaluate_parabola(p, j);
        CHECK(pt.x == base + j * bp);
        CHECK(pt.r == oracle::square_mod(pt.x, m));
    }
}

TEST_CASE("residues_near") {
    const auto pts = residues_near(Modulus(20171), {1, 3}, 3);
    REQUIRE(pts.size() == 7);
    CHECK(pts.front().x == 6721);
    CHECK(pts[3] == ResiduePoint{6724, 8965});
    CHECK(pts.back() == ResiduePoint{6727, 8976});

    const auto zero = residues_near(Modulus(977), {0, 1}, 2);
    CHECK(zero == std::vector<ResiduePoint>{{0, 0}, {1, 1}, {2, 4}});

    CHECK_THROWS_AS(residues_near(Modulus(100), {1, 3}, 50), std::invalid_argument);
    CHECK_NOTHROW(residues_near(Modulus(101), {1, 3}, 50));
}

TEST_CASE("every nearby residue lies on exactly one parabola (exhaustive, small m)") {
    for (std::int64_t m = 2; m < 600; ++m) {
        for (const auto& f : farey_fractions(24)) {
            if (f.b * f.b >= m) continue;
            const ParabolaFamily fam = parabola_family(fraction_params(Modulus(m), f));
            const std::int64_t window = std::min(4 * fam.params.b_prime, (m - 1) / 2);
            for (const ResiduePoint& pt : residues_near(Modulus(m), f, window)) {
                REQUIRE(pt.r == oracle::square_mod(pt.x, m));
                CHECK(count_covering_parabolas(fam, pt) == 1);
            }
        }
    }
}
