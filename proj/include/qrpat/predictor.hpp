// include/qrpat/predictor.hpp: acute-parabola families near x = (a/b) m.
//
// For a modulus m and a reduced fraction a/b, the residues of the integers
// x = x0 + i + j*b' (x0 the nearest integer to a*m/b) are the integer points
// of b' parabolas in j:
//
//     r = b'^2 j^2 + (2 b' i - (2/c) alpha) j + r_i   (mod m)
//
// whose vertices all sit at x = a*m/b, at ordinates that are multiples of
// m/b^2 spaced exactly m/b' apart.

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qrpat/arith.hpp"
#include "qrpat/rational.hpp"

namespace qrpat {

struct FractionParams {
    Modulus m{2};
    ReducedFraction frac;
    std::int64_t b_prime = 1;
    std::int64_t c = 1;
    std::int64_t alpha = 0;  ///< balanced residue of a*m mod b
    std::int64_t beta = 0;   ///< in [0, b^2)
    std::int64_t x0 = 0;     ///< nearest integer to a*m/b, halves rounded up
    std::int64_t r0 = 0;     ///< x0^2 mod m
};

struct Parabola {
    FractionParams params;
    std::int64_t i = 0;        ///< lattice offset, canonical range
    std::int64_t a_prime = 0;  ///< (2/c) i a mod b'; vertex sits at beta m/b^2 + a' m/b'
    std::int64_t A = 1;        ///< b'^2
    std::int64_t B = 0;        ///< 2 b' i - (2/c) alpha
    std::int64_t C = 0;        ///< (x0 + i)^2 mod m
    Rational vertex_x;         ///< a*m/b
    Rational vertex_y;         ///< in [0, m)
};

struct ParabolaFamily {
    FractionParams params;
    std::vector<Parabola> members;  ///< ordered by i ascending
};

struct ResiduePoint {
    std::int64_t x = 0;
    std::int64_t r = 0;
    friend bool operator==(const ResiduePoint&, const ResiduePoint&) = default;
};

/// Requires m > b^2. Throws std::invalid_argument otherwise.
FractionParams fraction_params(const Modulus& m, const ReducedFraction& frac);

/// Checks b^2 r0 == beta m + alpha^2 exactly.
bool verify_prop1(const FractionParams& params);

/// Canonical offsets i in {-ceil(b'/2)+1, ..., floor(b'/2)}.
std::vector<std::int64_t> canonical_offsets(std::int64_t b_prime);

ParabolaFamily parabola_family(const FractionParams& params);

/// Lattice point x = x0 + i + j b' and its residue from the parabola
/// coefficients. Throws std::out_of_range when x falls outside [0, m).
ResiduePoint evaluate_parabola(const Parabola& p, std::int64_t j);

/// Brute-force residues (x, x^2 mod m) for |x - x0| <= window, x in [0, m).
/// x0 is recomputed by rounding, independent of fraction_params.
/// Requires window < m/2.
std::vector<ResiduePoint> residues_near(const Modulus& m, const ReducedFraction& frac, std::int64_t window);

/// Outcome of the structural checks on one family.
struct FamilyCheck {
    bool count_ok = false;      ///< b' members
    bool abscissa_ok = false;   ///< every vertex_x == a m / b
    bool lattice_ok = false;    ///< every vertex_y is a multiple of m/b^2 in [0, m)
    bool gaps_ok = false;       ///< cyclic gaps all equal m/b'
    bool closed_form_ok = false;///< vertex_y == beta m/b^2 + a' m/b' (mod m)

    bool ok() const noexcept { return count_ok && abscissa_ok && lattice_ok && gaps_ok && closed_form_ok; }
};

FamilyCheck check_family_structure(const ParabolaFamily& family);

/// Number of (member, j) pairs that reproduce `point` exactly.
int count_covering_parabolas(const ParabolaFamily& family, const ResiduePoint& point);

}  // namespace qrpat
