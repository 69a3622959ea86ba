// tools/cli.cpp

#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <json.hpp>
#include <optional>
#include <set>

#include "qrpat/equivalence.hpp"
#include "qrpat/parallel.hpp"
#include "qrpat/predictor.hpp"
#include "qrpat/render.hpp"

namespace qrpat::cli {
namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// SVG output materializes one point per residue.
constexpr std::int64_t kMaxSceneModulus = 20'000'000;

json exact(Wide v) {
    if (v >= INT64_MIN && v <= INT64_MAX) return static_cast<std::int64_t>(v);
    return to_string(v);
}

json fraction_json(const ReducedFraction& f) { return {{"a", f.a}, {"b", f.b}}; }

void require(bool ok, const std::string& message) {
    if (!ok) throw UsageError(message);
}

Modulus modulus_arg(std::int64_t m) {
    require(m >= 2, "--modulus must be >= 2");
    return Modulus(m);
}

void require_room(std::int64_t m, std::int64_t b, const char* what) {
    require(b >= 1, std::string(what) + " must be >= 1");
    require(Wide{m} > Wide{b} * b, "modulus " + std::to_string(m) + " must exceed " + what + "^2 = " +
                                       to_string(Wide{b} * b));
}

std::int64_t lambda_arg(std::int64_t n) {
    require(n >= 2, "--lambda-n must be >= 2");
    try {
        return lambda_value(n);
    } catch (const std::overflow_error&) {
        throw UsageError("--lambda-n " + std::to_string(n) + " overflows 64-bit lambda");
    }
}

json predict_json(const Modulus& m, const ReducedFraction& f) {
    const FractionParams p = fraction_params(m, f);
    const ParabolaFamily family = parabola_family(p);
    json vertices = json::array();
    json coefficients = json::array();
    for (const Parabola& par : family.members) {
        vertices.push_back({{"i", par.i},
                            {"a_prime", par.a_prime},
                            {"x", par.vertex_x.str()},
                            {"x_num", exact(par.vertex_x.num())},
                            {"x_den", exact(par.vertex_x.den())},
                            {"y_num", exact(par.vertex_y.num())},
                            {"y_den", exact(par.vertex_y.den())}});
        coefficients.push_back({{"i", par.i}, {"A", par.A}, {"B", par.B}, {"C", par.C}});
    }
    return {{"modulus", m.value()}, {"fraction", fraction_json(f)}, {"b_prime", p.b_prime},
            {"c", p.c},             {"alpha", p.alpha},              {"beta", p.beta},
            {"x0", p.x0},           {"r0", p.r0},                    {"vertices", vertices},
            {"coefficients", coefficients}};
}

void print_predict_text(const json& j, std::ostream& out) {
    out << "m=" << j["modulus"] << " a/b=" << j["fraction"]["a"] << '/' << j["fraction"]["b"]
        << " b'=" << j["b_prime"] << " c=" << j["c"] << " alpha=" << j["alpha"] << " beta=" << j["beta"]
        << " x0=" << j["x0"] << " r0=" << j["r0"] << '\n';
    for (std::size_t k = 0; k < j["vertices"].size(); ++k) {
        const json& v = j["vertices"][k];
        const json& c = j["coefficients"][k];
        out << "  i=" << v["i"] << " a'=" << v["a_prime"] << " vertex=(" << v["x"].get<std::string>() << ", "
            << v["y_num"] << '/' << v["y_den"] << ")  r = " << c["A"] << " j^2 + " << c["B"] << " j + " << c["C"]
            << '\n';
    }
}

struct FractionReport {
    bool prop1 = false;
    FamilyCheck structure;
    std::int64_t points = 0;
    std::int64_t uncovered = 0;
};

FractionReport verify_fraction(const Modulus& m, const ReducedFraction& f, std::optional<std::int64_t> window) {
    FractionReport report;
    const FractionParams p = fraction_params(m, f);
    report.prop1 = verify_prop1(p);
    const ParabolaFamily family = parabola_family(p);
    report.structure = check_family_structure(family);
    const std::int64_t w = window ? *window : std::min(3 * p.b_prime, (m.value() - 1) / 2);
    for (const ResiduePoint& pt : residues_near(m, f, w)) {
        ++report.points;
        if (count_covering_parabolas(family, pt) != 1) ++report.uncovered;
    }
    return report;
}

int cmd_verify(const Modulus& m, std::int64_t max_denominator, std::optional<std::int64_t> window,
               std::ostream& out) {
    const std::vector<ReducedFraction> fracs = farey_fractions(max_denominator);
    std::vector<FractionReport> reports(fracs.size());
    parallel_for(fracs.size(), worker_count(static_cast<unsigned>(fracs.size())),
                 [&](std::size_t k) { reports[k] = verify_fraction(m, fracs[k], window); });

    std::int64_t prop1_fail = 0, structure_fail = 0, coverage_fail = 0, points = 0;
    json failures = json::array();
    for (std::size_t k = 0; k < fracs.size(); ++k) {
        const FractionReport& r = reports[k];
        points += r.points;
        auto fail = [&](const char* check) { failures.push_back({{"fraction", fracs[k].str()}, {"check", check}}); };
        if (!r.prop1) ++prop1_fail, fail("prop1");
        if (!r.structure.ok()) ++structure_fail, fail("structure");
        if (r.uncovered) ++coverage_fail, fail("coverage");
    }
    const auto n = static_cast<std::int64_t>(fracs.size());
    const bool passed = failures.empty();
    json report = {{"modulus", m.value()},
                   {"max_denominator", max_denominator},
                   {"window", window ? json(*window) : json(nullptr)},
                   {"fractions", n},
                   {"checks",
                    {{"prop1", {{"passed", n - prop1_fail}, {"failed", prop1_fail}}},
                     {"structure", {{"passed", n - structure_fail}, {"failed", structure_fail}}},
                     {"coverage", {{"passed", n - coverage_fail}, {"failed", coverage_fail}, {"points", points}}}}},
                   {"failures", failures},
                   {"passed", passed}};
    out << report.dump(2) << '\n';
    return passed ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Quadratic-residue plot patterns: prediction, verification and rendering", "qrpat"};
    app.require_subcommand(1);

    std::int64_t modulus = 0;
    std::string out_path;

    auto* plot = app.add_subcommand("plot", "Scatter plot of x^2 mod m as binary PGM");
    int plot_width = 800, plot_height = 800;
    bool half = true;
    plot->add_option("--modulus", modulus, "Modulus m")->required();
    plot->add_option("--width", plot_width, "Image width in pixels")->capture_default_str();
    plot->add_option("--height", plot_height, "Image height in pixels")->capture_default_str();
    plot->add_flag("--half,!--full", half, "Plot only 0 <= x < m/2 (default) or the full range");
    plot->add_option("--out", out_path, "Output .pgm path")->required();

    auto* grid = app.add_subcommand("grid", "Gray levels of (x^2 + y^2) mod m as binary PGM");
    std::optional<int> grid_size;
    grid->add_option("--modulus", modulus, "Modulus m")->required();
    grid->add_option("--size", grid_size, "Image side in pixels (default min(m, 1024))");
    grid->add_option("--out", out_path, "Output .pgm path")->required();

    auto* predict = app.add_subcommand("predict", "Parabola parameters and vertices for fractions a/b");
    std::string fraction_text;
    std::optional<std::int64_t> predict_max;
    bool as_json = false;
    predict->add_option("--modulus", modulus, "Modulus m")->required();
    auto* frac_opt = predict->add_option("--fraction", fraction_text, "Reduced fraction a/b in [0, 1]");
    auto* max_opt = predict->add_option("--max-denominator", predict_max, "Every reduced a/b with b <= D");
    frac_opt->excludes(max_opt);
    predict->add_flag("--json", as_json, "Emit JSON");

    auto* verify = app.add_subcommand("verify", "Batch check of predictions against direct squaring");
    std::int64_t verify_max = 9;
    std::optional<std::int64_t> window;
    verify->add_option("--modulus", modulus, "Modulus m")->required();
    verify->add_option("--max-denominator", verify_max, "Largest denominator checked")->capture_default_str();
    verify->add_option("--window", window, "Half-width |x - x0| of the brute-force scan (default 3b')");

    auto* equiv = app.add_subcommand("equiv", "Compare parabola layouts of two moduli");
    std::int64_t m1 = 0, m2 = 0, lambda_n = 9;
    std::optional<std::int64_t> equiv_max;
    equiv->add_option("--m1", m1, "First modulus")->required();
    equiv->add_option("--m2", m2, "Second modulus")->required();
    equiv->add_option("--lambda-n", lambda_n, "n in Lambda(n) = 2 lcm(2..n)")->capture_default_str();
    equiv->add_option("--max-denominator", equiv_max, "Largest denominator compared (default 2n)");

    auto* bundle = app.add_subcommand("bundle", "Bundle-of-lines parameter, line indices and SVG overlay");
    std::int64_t bundle_max = 9;
    int svg_width = 800, svg_height = 800;
    bundle->add_option("--modulus", modulus, "Modulus m")->required();
    bundle->add_option("--lambda-n", lambda_n, "n in Lambda(n) = 2 lcm(2..n)")->capture_default_str();
    bundle->add_option("--max-denominator", bundle_max, "Largest denominator marked")->capture_default_str();
    bundle->add_option("--out", out_path, "Output .svg path");
    bundle->add_option("--width", svg_width, "SVG width")->capture_default_str();
    bundle->add_option("--height", svg_height, "SVG height")->capture_default_str();

    std::vector<std::string> argv_store{"qrpat"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (std::string& s : argv_store) argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (plot->parsed()) {
            const Modulus m = modulus_arg(modulus);
            require(plot_width >= 16 && plot_height >= 16, "--width and --height must be >= 16");
            write_pgm(render_scatter(m, plot_width, plot_height, half), out_path);
            out << json{{"output", out_path}, {"width", plot_width}, {"height", plot_height}}.dump() << '\n';
            return kOk;
        }
        if (grid->parsed()) {
            const Modulus m = modulus_arg(modulus);
            const int size = grid_size ? *grid_size : static_cast<int>(std::min<std::int64_t>(m.value(), 1024));
            require(size >= 2, "--size must be >= 2");
            write_pgm(render_sum_squares(m, size, worker_count(static_cast<unsigned>(size))), out_path);
            out << json{{"output", out_path}, {"size", size}}.dump() << '\n';
            return kOk;
        }
        if (predict->parsed()) {
            const Modulus m = modulus_arg(modulus);
            require(frac_opt->count() + max_opt->count() == 1, "predict needs --fraction or --max-denominator");
            std::vector<ReducedFraction> fracs;
            if (frac_opt->count()) {
                try {
                    fracs.push_back(ReducedFraction::parse(fraction_text));
                } catch (const std::invalid_argument& e) {
                    throw UsageError(e.what());
                }
            } else {
                fracs = farey_fractions(std::max<std::int64_t>(*predict_max, 1));
            }
            for (const ReducedFraction& f : fracs) require_room(m.value(), f.b, "b");
            if (max_opt->count()) require_room(m.value(), *predict_max, "--max-denominator");

            json result = json::array();
            for (const ReducedFraction& f : fracs) result.push_back(predict_json(m, f));
            if (frac_opt->count()) result = result[0];
            if (as_json) {
                out << result.dump(2) << '\n';
            } else if (result.is_array()) {
                for (const json& j : result) print_predict_text(j, out);
            } else {
                print_predict_text(result, out);
            }
            return kOk;
        }
        if (verify->parsed()) {
            const Modulus m = modulus_arg(modulus);
            require_room(m.value(), verify_max, "--max-denominator");
            if (window) require(*window >= 0 && 2 * Wide{*window} < m.value(), "--window must satisfy 0 <= J < m/2");
            return cmd_verify(m, verify_max, window, out);
        }
        if (equiv->parsed()) {
            require(m1 >= 2 && m2 >= 2, "--m1 and --m2 must be >= 2");
            const Modulus a(m1);
            const Modulus b(m2);
            const std::int64_t lambda = lambda_arg(lambda_n);
            const std::int64_t max_d = equiv_max ? *equiv_max : 2 * lambda_n;
            require_room(a.value(), max_d, "--max-denominator");
            require_room(b.value(), max_d, "--max-denominator");

            const EquivalenceResult verdict = layouts_equivalent(a, b, lambda, max_d);
            const DenominatorSet dens = denominator_set(lambda, max_d);
            json witness = nullptr;
            if (verdict.witness) {
                const BetaSignature s1 = beta_signature(a, max_d);
                const BetaSignature s2 = beta_signature(b, max_d);
                witness = {{"a", verdict.witness->a},
                           {"b", verdict.witness->b},
                           {"beta_prime_m1", s1.entries.at(*verdict.witness)},
                           {"beta_prime_m2", s2.entries.at(*verdict.witness)}};
            }
            out << json{{"m1", a.value()},
                        {"m2", b.value()},
                        {"lambda_n", lambda_n},
                        {"lambda", lambda},
                        {"max_denominator", max_d},
                        {"denominators", std::vector<std::int64_t>(dens.members.begin(), dens.members.end())},
                        {"equivalent", verdict.equivalent},
                        {"witness", witness}}
                       .dump(2)
                << '\n';
            return kOk;
        }
        if (bundle->parsed()) {
            const Modulus m = modulus_arg(modulus);
            const std::int64_t lambda = lambda_arg(lambda_n);
            require_room(m.value(), bundle_max, "--max-denominator");
            require(svg_width >= 16 && svg_height >= 16, "--width and --height must be >= 16");
            const bool with_svg = !out_path.empty();
            require(!with_svg || m.value() <= kMaxSceneModulus,
                    "SVG output is limited to moduli <= " + std::to_string(kMaxSceneModulus));

            const Scene scene = overlay_predictions(m, bundle_max, lambda, svg_width, svg_height, with_svg);
            if (!scene.skipped_denominators.empty()) {
                err << "warning: denominators";
                for (std::int64_t b : scene.skipped_denominators) err << ' ' << b;
                err << " are outside the denominator set of lambda " << lambda
                    << "; their vertices are marked without a bundle line\n";
            }
            std::set<std::int64_t> lines;
            json vertices = json::array();
            for (const VertexMarker& v : scene.markers) {
                if (!v.n) continue;
                lines.insert(*v.n);
                vertices.push_back({{"a", v.frac.a},
                                    {"b", v.frac.b},
                                    {"k", v.k},
                                    {"n", *v.n},
                                    {"x_num", exact(v.x.num())},
                                    {"x_den", exact(v.x.den())},
                                    {"y_num", exact(v.y.num())},
                                    {"y_den", exact(v.y.den())}});
            }
            if (with_svg) write_svg(scene, out_path);
            out << json{{"modulus", m.value()},
                        {"lambda_n", lambda_n},
                        {"lambda", lambda},
                        {"s", scene.s},
                        {"max_denominator", bundle_max},
                        {"lines", std::vector<std::int64_t>(lines.begin(), lines.end())},
                        {"skipped_denominators", scene.skipped_denominators},
                        {"vertices", vertices},
                        {"output", with_svg ? json(out_path) : json(nullptr)}}
                       .dump(2)
                << '\n';
            return kOk;
        }
        return kUsage;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kIo;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kVerificationFailed;
    }
}

}  // namespace qrpat::cli
