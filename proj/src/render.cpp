// src/render.cpp

#include "qrpat/render.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <sstream>

#include "qrpat/equivalence.hpp"
#include "qrpat/parallel.hpp"
#include "qrpat/predictor.hpp"

namespace qrpat {
namespace {

void require_dims(int width, int height, int min) {
    if (width < min || height < min) {
        throw std::invalid_argument("canvas dimensions must be at least " + std::to_string(min) + "x" +
                                    std::to_string(min));
    }
}

void append_fixed(std::string& out, double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 6);
    out.append(buf, res.ptr);
}

// Samples per unit of X; steeper curves wrap more often and need more.
int curve_samples(std::int64_t n, std::int64_t s) {
    const std::int64_t slope = 2 * std::abs(n) + 2 * std::abs(s);
    return 512 * static_cast<int>(std::min<std::int64_t>(16, 1 + slope / 32));
}

Polyline trace_line(std::int64_t n, std::int64_t s, std::vector<Polyline>& out) {
    const int samples = curve_samples(n, s);
    Polyline current{n, {}};
    double prev_floor = 0;
    for (int k = 0; k <= samples; ++k) {
        const double X = static_cast<double>(k) / samples;
        const double u = 2.0 * static_cast<double>(n) * X - static_cast<double>(s) * X * X;
        const double f = std::floor(u);
        if (k > 0 && f != prev_floor) {
            if (current.points.size() > 1) out.push_back(std::move(current));
            current = Polyline{n, {}};
        }
        current.points.push_back({X, u - f});
        prev_floor = f;
    }
    return current;
}

}  // namespace

Canvas::Canvas(int w, int h, std::uint8_t fill)
    : width(w), height(h), pixels(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), fill) {}

Canvas render_scatter(const Modulus& m, int width, int height, bool half_range) {
    require_dims(width, height, 16);
    Canvas canvas(width, height, 255);
    const Wide mod = m.value();
    const Wide count = half_range ? (mod + 1) / 2 : mod;
    for (Wide x = 0; x < count; ++x) {
        const Wide r = x * x % mod;
        const auto col = static_cast<int>((half_range ? 2 * x : x) * width / mod);
        const auto row = height - 1 - static_cast<int>(r * height / mod);
        canvas.at(col, row) = 0;
    }
    return canvas;
}

Canvas render_sum_squares(const Modulus& m, int size, unsigned threads) {
    if (size < 2) throw std::invalid_argument("render_sum_squares: size must be >= 2");
    Canvas canvas(size, size, 0);
    const Wide mod = m.value();
    std::vector<Wide> sq(static_cast<std::size_t>(size));
    for (int u = 0; u < size; ++u) {
        const Wide x = Wide{u} * mod / size;
        sq[static_cast<std::size_t>(u)] = x * x % mod;
    }
    parallel_for(static_cast<std::size_t>(size), threads, [&](std::size_t v) {
        for (int u = 0; u < size; ++u) {
            const Wide f = (sq[static_cast<std::size_t>(u)] + sq[v]) % mod;
            canvas.at(u, static_cast<int>(v)) = static_cast<std::uint8_t>(f * 255 / (mod - 1));
        }
    });
    return canvas;
}

Scene overlay_predictions(const Modulus& m, std::int64_t max_denominator, std::int64_t lambda, int width,
                          int height, bool include_points) {
    require_dims(width, height, 16);
    const DenominatorSet dens = denominator_set(lambda, max_denominator);
    Scene scene;
    scene.width = width;
    scene.height = height;
    scene.modulus = m.value();
    scene.lambda = lambda;
    scene.s = bundle_parameter(m, lambda);

    const double md = static_cast<double>(m.value());
    if (include_points) scene.points.reserve(static_cast<std::size_t>(m.value()));
    for (std::int64_t x = 0; include_points && x < m.value(); ++x) {
        scene.points.push_back({static_cast<double>(x) / md, static_cast<double>(qr_mod(x, m)) / md});
    }

    std::vector<ReducedFraction> fracs = farey_fractions(max_denominator);
    std::sort(fracs.begin(), fracs.end(), DenominatorFirst{});
    const BetaSignature sig = beta_signature(m, max_denominator);
    std::int64_t max_abs_n = 0;
    for (const ReducedFraction& f : fracs) {
        const std::int64_t beta_prime = sig.entries.at(f);
        std::vector<VertexLine> lines;
        if (dens.contains(f.b)) {
            lines = vertex_on_bundle(m, lambda, f, scene.s);
        } else if (scene.skipped_denominators.empty() || scene.skipped_denominators.back() != f.b) {
            scene.skipped_denominators.push_back(f.b);
        }
        for (std::int64_t k = 0; k < reduced_denominator(f.b); ++k) {
            auto [X, Y] = normalized_vertex(f, beta_prime, k);
            VertexMarker marker{f, k, X, Y, std::nullopt};
            if (!lines.empty()) {
                marker.n = lines[static_cast<std::size_t>(k)].n;
                max_abs_n = std::max(max_abs_n, std::abs(*marker.n));
            }
            scene.markers.push_back(std::move(marker));
        }
    }

    for (std::int64_t n = -max_abs_n; n <= max_abs_n; ++n) {
        Polyline tail = trace_line(n, scene.s, scene.curves);
        if (tail.points.size() > 1) scene.curves.push_back(std::move(tail));
    }
    return scene;
}

std::string encode_pgm(const Canvas& canvas) {
    std::string out = "P5\n" + std::to_string(canvas.width) + " " + std::to_string(canvas.height) + "\n255\n";
    out.append(canvas.pixels.begin(), canvas.pixels.end());
    return out;
}

Canvas decode_pgm(const std::string& bytes) {
    std::istringstream in(bytes);
    std::string magic;
    int width = 0, height = 0, maxval = 0;
    in >> magic >> width >> height >> maxval;
    if (!in || magic != "P5" || maxval != 255 || width <= 0 || height <= 0) {
        throw std::invalid_argument("decode_pgm: unsupported or malformed header");
    }
    in.get();  // single whitespace byte before the raster
    Canvas canvas(width, height, 0);
    in.read(reinterpret_cast<char*>(canvas.pixels.data()), static_cast<std::streamsize>(canvas.pixels.size()));
    if (in.gcount() != static_cast<std::streamsize>(canvas.pixels.size())) {
        throw std::invalid_argument("decode_pgm: truncated raster");
    }
    return canvas;
}

namespace {

void write_bytes(const std::string& bytes, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.close();
    if (!out) throw IoError("failed writing '" + path.string() + "'");
}

}  // namespace

void write_pgm(const Canvas& canvas, const std::filesystem::path& path) { write_bytes(encode_pgm(canvas), path); }

Canvas read_pgm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
    const std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return decode_pgm(bytes);
}

std::string encode_svg(const Scene& scene) {
    const double w = scene.width;
    const double h = scene.height;
    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + std::to_string(scene.width) +
           "\" height=\"" + std::to_string(scene.height) + "\" viewBox=\"0 0 " + std::to_string(scene.width) + " " +
           std::to_string(scene.height) + "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    out += "<g id=\"points\" fill=\"black\">\n";
    for (const ScenePoint& p : scene.points) {
        out += "<rect x=\"";
        append_fixed(out, p.x * w);
        out += "\" y=\"";
        append_fixed(out, (1.0 - p.y) * h - 1.0);
        out += "\" width=\"1\" height=\"1\"/>\n";
    }
    out += "</g>\n";

    out += "<g id=\"curves\" fill=\"none\" stroke=\"gray\" stroke-width=\"0.5\">\n";
    for (const Polyline& line : scene.curves) {
        out += "<polyline data-n=\"" + std::to_string(line.n) + "\" points=\"";
        for (std::size_t k = 0; k < line.points.size(); ++k) {
            if (k) out += ' ';
            append_fixed(out, line.points[k].x * w);
            out += ',';
            append_fixed(out, (1.0 - line.points[k].y) * h);
        }
        out += "\"/>\n";
    }
    out += "</g>\n";

    out += "<g id=\"markers\" fill=\"none\" stroke=\"black\" stroke-width=\"1\">\n";
    for (const VertexMarker& v : scene.markers) {
        out += "<circle data-fraction=\"" + v.frac.str() + "\" data-k=\"" + std::to_string(v.k) + "\" cx=\"";
        append_fixed(out, v.x.to_double() * w);
        out += "\" cy=\"";
        append_fixed(out, (1.0 - v.y.to_double()) * h);
        out += "\" r=\"3\"/>\n";
    }
    out += "</g>\n</svg>\n";
    return out;
}

void write_svg(const Scene& scene, const std::filesystem::path& path) { write_bytes(encode_svg(scene), path); }

}  // namespace qrpat
