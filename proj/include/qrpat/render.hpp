// include/qrpat/render.hpp: deterministic raster and vector output.
//
// All membership math happens in exact arithmetic before anything is turned
// into a coordinate; doubles appear only in Scene coordinates for SVG output.

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qrpat/arith.hpp"
#include "qrpat/rational.hpp"

namespace qrpat {

/// Raised when an output or input file cannot be accessed.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Row-major grayscale raster, origin top-left.
struct Canvas {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;

    Canvas() = default;
    Canvas(int w, int h, std::uint8_t fill);

    std::uint8_t at(int x, int y) const { return pixels[static_cast<std::size_t>(y) * width + x]; }
    std::uint8_t& at(int x, int y) { return pixels[static_cast<std::size_t>(y) * width + x]; }

    friend bool operator==(const Canvas&, const Canvas&) = default;
};

struct ScenePoint {
    double x = 0;
    double y = 0;
};

struct Polyline {
    std::int64_t n = 0;  ///< bundle line index
    std::vector<ScenePoint> points;
};

struct VertexMarker {
    ReducedFraction frac;
    std::int64_t k = 0;
    Rational x;                    ///< a/b
    Rational y;                    ///< in [0, 1)
    std::optional<std::int64_t> n; ///< set when b is in the denominator set
};

/// Normalized plot: X = x/m, Y = (x^2 mod m)/m.
struct Scene {
    int width = 800;
    int height = 800;
    std::int64_t modulus = 0;
    std::int64_t lambda = 0;
    std::int64_t s = 0;
    std::vector<ScenePoint> points;
    std::vector<Polyline> curves;         ///< n ascending, wrap-split
    std::vector<VertexMarker> markers;    ///< (b, a, k) ascending
    std::vector<std::int64_t> skipped_denominators;  ///< b <= D outside the denominator set
};

/// Black residue points on white. In half-range mode only x < m/2 is drawn
/// and that interval spans the full width. Residue 0 is the bottom row.
Canvas render_scatter(const Modulus& m, int width, int height, bool half_range);

/// Gray levels of (x^2 + y^2) mod m sampled at x = floor(u m / size).
Canvas render_sum_squares(const Modulus& m, int size, unsigned threads = 1);

/// Scatter points, vertex markers for every a/b with b <= max_denominator
/// and the bundle curves through them. Markers and curves alone are
/// produced when `include_points` is false.
Scene overlay_predictions(const Modulus& m, std::int64_t max_denominator, std::int64_t lambda, int width,
                          int height, bool include_points = true);

/// Binary PGM (P5, maxval 255).
std::string encode_pgm(const Canvas& canvas);
Canvas decode_pgm(const std::string& bytes);
void write_pgm(const Canvas& canvas, const std::filesystem::path& path);
Canvas read_pgm(const std::filesystem::path& path);

/// SVG 1.1 document; coordinates carry exactly six decimals.
std::string encode_svg(const Scene& scene);
void write_svg(const Scene& scene, const std::filesystem::path& path);

}  // namespace qrpat
