// include/qrpat/equivalence.hpp: layout fingerprints and the bundle of lines
// through parabola vertices.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "qrpat/arith.hpp"
#include "qrpat/rational.hpp"

namespace qrpat {

/// beta' = beta mod c*b for every reduced a/b with b <= max_denominator.
/// Two moduli with identical signatures place every parabola family at the
/// same vertical positions.
struct BetaSignature {
    Modulus m{2};
    std::int64_t max_denominator = 1;
    std::map<ReducedFraction, std::int64_t, DenominatorFirst> entries;
};

/// Denominators b with b | lambda (odd b) or 2b | lambda (even b).
struct DenominatorSet {
    std::int64_t lambda = 4;
    std::set<std::int64_t> members;

    bool contains(std::int64_t b) const { return members.count(b) != 0; }
};

/// A curve Y = 2nX - sX^2 (mod 1).
struct BundleLine {
    std::int64_t s = 0;
    std::int64_t n = 0;
};

struct VertexLine {
    std::int64_t k = 0;  ///< vertex index in Z_{b'}
    std::int64_t n = 0;  ///< line index, minimal |n|, ties to positive
};

struct EquivalenceResult {
    bool equivalent = true;
    std::optional<ReducedFraction> witness;  ///< smallest (b, a) mismatch
};

/// Whether b belongs to the denominator set of lambda.
bool in_denominator_set(std::int64_t lambda, std::int64_t b);

/// Requires even lambda >= 4.
DenominatorSet denominator_set(std::int64_t lambda, std::int64_t max_b);

/// Requires m > max_denominator^2.
BetaSignature beta_signature(const Modulus& m, std::int64_t max_denominator);

/// Compares signatures over the denominators of denominator_set(lambda, max_denominator).
EquivalenceResult layouts_equivalent(const Modulus& m1, const Modulus& m2, std::int64_t lambda,
                                     std::int64_t max_denominator);

/// Balanced representative s of m mod lambda, -lambda/2 < s <= lambda/2.
std::int64_t bundle_parameter(const Modulus& m, std::int64_t lambda);

/// Vertex (a/b, (beta' + c b k)/b^2 mod 1) for vertex index k.
std::pair<Rational, Rational> normalized_vertex(const ReducedFraction& frac, std::int64_t beta_prime, std::int64_t k);

/// Exact test that Y + s X^2 - 2 n X is an integer.
bool on_bundle_line(const Rational& X, const Rational& Y, const BundleLine& line);

/// Line index n for each vertex k in Z_{b'} of the family a/b, using
/// s = bundle_parameter(m, lambda). Throws std::domain_error if b is not in
/// the denominator set of lambda.
std::vector<VertexLine> vertex_on_bundle(const Modulus& m, std::int64_t lambda, const ReducedFraction& frac);

/// Same, with an explicit representative s (must satisfy s = m mod lambda).
std::vector<VertexLine> vertex_on_bundle(const Modulus& m, std::int64_t lambda, const ReducedFraction& frac,
                                         std::int64_t s);

/// Representative of the solution class of coeff*n = rhs (mod period) with
/// smallest |n|, ties to positive; nullopt when unsolvable.
std::optional<std::int64_t> smallest_solution(std::int64_t coeff, std::int64_t rhs, std::int64_t period);

}  // namespace qrpat
