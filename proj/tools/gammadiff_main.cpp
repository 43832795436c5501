// Command-line front end: per-theorem verification reports, direct search
// over the coefficient body, extremal-function evaluation, and figure
// regeneration (lune boundary and image domains) as SVG/CSV.

#include <gammadiff/classes.hpp>
#include <gammadiff/functionals.hpp>
#include <gammadiff/render.hpp>
#include <gammadiff/report.hpp>
#include <gammadiff/verify.hpp>

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#ifdef _WIN32
#include <io.h>
#define GAMMADIFF_ISATTY _isatty(1)
#else
#include <unistd.h>
#define GAMMADIFF_ISATTY isatty(1)
#endif

namespace {

using namespace gammadiff;

constexpr int exit_usage = 64;

struct GlobalFlags {
    bool json = false;
    bool csv = false;
    bool strict = false;
    std::uint64_t seed = 12345;
    double tolerance = 0.0;  // 0 = keep the per-check defaults
    std::string out_path;
};

bool use_color() { return GAMMADIFF_ISATTY && std::getenv("NO_COLOR") == nullptr; }

void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty())
        std::fputs(content.c_str(), stdout);
    else
        write_text_file(out_path, content);
}

VerifyOptions make_options(const GlobalFlags& flags, int grid) {
    VerifyOptions opt;
    opt.grid = grid;
    opt.seed = flags.seed;
    if (flags.tolerance > 0.0) {
        opt.tol_closed = flags.tolerance;
        opt.tol_oracle = flags.tolerance;
    }
    return opt;
}

int run_verify(const GlobalFlags& flags, const std::string& theorem, int grid) {
    const VerifyOptions opt = make_options(flags, grid);
    std::vector<VerificationReport> reports;
    for (const auto& spec : theorem_table())
        if (theorem == "all" || theorem == spec.id) reports.push_back(verify_theorem(spec, opt));

    if (flags.json)
        emit(report_json(reports, opt, flags.strict), flags.out_path);
    else if (flags.csv)
        emit(report_csv(reports), flags.out_path);
    else
        emit(report_text(reports, flags.out_path.empty() && use_color()), flags.out_path);
    return report_exit_code(reports, flags.strict);
}

int run_search(const GlobalFlags& flags, const std::string& class_name, int grid) {
    const auto cls = class_from_name(class_name);
    const SearchResult result = search_class(*cls, grid);
    const ClassSpec& spec = class_spec(*cls);
    const double lemma_upper = spec.psi_scale * psi_plus_bound(spec.psi);
    const double lemma_lower = -spec.psi_scale * psi_minus_bound(spec.psi);
    const double err_max = std::abs(result.max_value - lemma_upper);
    const double err_min = std::abs(result.min_value - lemma_lower);
    const bool agree = err_max <= 1e-6 && err_min <= 1e-6;

    const auto point_json = [](JsonWriter& json, const char* name, const BodyMaximum& pt) {
        json.key(name).begin_object();
        json.key("value").value(pt.value);
        json.key("x").value(pt.x);
        json.key("rho").value(pt.rho);
        json.key("phi").value(pt.phi);
        json.key("c1_re").value(pt.c1.real());
        json.key("c1_im").value(pt.c1.imag());
        json.key("c2_re").value(pt.c2.real());
        json.key("c2_im").value(pt.c2.imag());
        json.end_object();
    };

    if (flags.json) {
        JsonWriter json;
        json.begin_object();
        json.key("schema").value(1);
        json.key("class").value(spec.name);
        json.key("grid").value(grid);
        json.key("min").value(result.min_value);
        json.key("max").value(result.max_value);
        point_json(json, "argmin", result.min_point);
        point_json(json, "argmax", result.max_point);
        json.key("lemma_route").begin_object();
        json.key("upper").value(lemma_upper);
        json.key("lower").value(lemma_lower);
        json.end_object();
        json.key("dual_path_agreement").value(agree);
        json.end_object();
        emit(json.str() + "\n", flags.out_path);
    } else if (flags.csv) {
        std::string csv = "class,kind,value,x,rho,phi,c1_re,c1_im,c2_re,c2_im\r\n";
        const auto row = [&csv, &spec](const char* kind, const BodyMaximum& pt) {
            csv += std::string(spec.name) + "," + kind + "," + format_number(pt.value) + "," +
                   format_number(pt.x) + "," + format_number(pt.rho) + "," +
                   format_number(pt.phi) + "," + format_number(pt.c1.real()) + "," +
                   format_number(pt.c1.imag()) + "," + format_number(pt.c2.real()) + "," +
                   format_number(pt.c2.imag()) + "\r\n";
        };
        row("min", result.min_point);
        row("max", result.max_point);
        emit(csv, flags.out_path);
    } else {
        std::string text = std::string("class ") + spec.name + " (grid " + std::to_string(grid) +
                           ")\n";
        text += "  empirical min " + format_number(result.min_value, 12) + " at c1 = " +
                format_number(result.min_point.c1.real(), 9) + ", c2 = " +
                format_number(result.min_point.c2.real(), 9) + "\n";
        text += "  empirical max " + format_number(result.max_value, 12) + " at c1 = " +
                format_number(result.max_point.c1.real(), 9) + ", c2 = " +
                format_number(result.max_point.c2.real(), 9) + "\n";
        text += "  lemma route   [" + format_number(lemma_lower, 12) + ", " +
                format_number(lemma_upper, 12) + "]\n";
        text += std::string("  dual-path agreement (1e-6): ") + (agree ? "yes" : "NO") + "\n";
        emit(text, flags.out_path);
    }
    return agree ? 0 : 1;
}

int run_extremal(const GlobalFlags& flags, const std::string& name, int order,
                 std::optional<double> param) {
    const ExtremalId id = *extremal_from_name(name);
    const TruncatedSeries f = extremal(id, order, param);
    const GammaPair closed = gamma_pair_of(f);
    const auto gammas = inv_log_coeffs_series(f, 2);
    const double pipeline_diff = std::max(std::abs(closed.gamma1 - gammas[0]),
                                          std::abs(closed.gamma2 - gammas[1]));
    const bool consistent = pipeline_diff <= 1e-10;
    const double value = moduli_diff(closed);

    if (flags.json) {
        JsonWriter json;
        json.begin_object();
        json.key("schema").value(1);
        json.key("name").value(name);
        json.key("class").value(class_name(extremal_class(id)));
        json.key("order").value(order);
        if (id == ExtremalId::f6)
            json.key("generator_param").value(param.value_or(extremal_f6_default_param));
        json.key("a2_re").value(f.coeff(2).real());
        json.key("a2_im").value(f.coeff(2).imag());
        json.key("a3_re").value(f.coeff(3).real());
        json.key("a3_im").value(f.coeff(3).imag());
        json.key("gamma1_re").value(closed.gamma1.real());
        json.key("gamma1_im").value(closed.gamma1.imag());
        json.key("gamma2_re").value(closed.gamma2.real());
        json.key("gamma2_im").value(closed.gamma2.imag());
        json.key("moduli_diff").value(value);
        json.key("pipeline_consistent").value(consistent);
        json.key("coefficients").begin_array();
        for (int k = 0; k <= order; ++k) {
            json.begin_object();
            json.key("n").value(k);
            json.key("re").value(f.coeff(k).real());
            json.key("im").value(f.coeff(k).imag());
            json.end_object();
        }
        json.end_array();
        json.end_object();
        emit(json.str() + "\n", flags.out_path);
    } else if (flags.csv) {
        std::string csv = "n,re,im\r\n";
        for (int k = 0; k <= order; ++k)
            csv += std::to_string(k) + "," + format_number(f.coeff(k).real()) + "," +
                   format_number(f.coeff(k).imag()) + "\r\n";
        emit(csv, flags.out_path);
    } else {
        std::string text = name + " (order " + std::to_string(order) + ")\n";
        if (id == ExtremalId::f6)
            text += "  generator parameter A = " +
                    format_number(param.value_or(extremal_f6_default_param), 12) + "\n";
        text += "  a2 = " + format_number(f.coeff(2).real(), 12) + ", a3 = " +
                format_number(f.coeff(3).real(), 12) + "\n";
        text += "  Gamma1 = " + format_number(closed.gamma1.real(), 12) + ", Gamma2 = " +
                format_number(closed.gamma2.real(), 12) + "\n";
        text += "  |Gamma2| - |Gamma1| = " + format_number(value, 12) + "\n";
        text += std::string("  series-route cross-check (1e-10): ") +
                (consistent ? "ok" : "MISMATCH") + "\n";
        emit(text, flags.out_path);
    }
    return consistent ? 0 : 1;
}

int run_render_lune(const GlobalFlags& flags, const std::string& out_base, int samples) {
    const LuneCurves curves = lune_boundary(samples);
    const std::string metadata = lune_metadata_json(curves, samples);
    write_text_file(out_base + ".svg",
                    curves_svg({curves.right_lobe, curves.left_lobe}, metadata));
    write_text_file(out_base + ".csv", curves_csv({curves.right_lobe, curves.left_lobe}));
    const bool ok = curves.boundary_residual_max < 1e-9 && curves.vertex_miss_max < 1e-9;

    if (flags.json) {
        emit(metadata + "\n", flags.out_path);
    } else {
        std::string text = "lune boundary -> " + out_base + ".svg, " + out_base + ".csv\n";
        text += "  boundary residual max " + format_number(curves.boundary_residual_max, 6) +
                " (tol 1e-9)\n";
        text += "  vertex miss max       " + format_number(curves.vertex_miss_max, 6) +
                " (tol 1e-9)\n";
        emit(text, flags.out_path);
    }
    return ok ? 0 : 1;
}

int run_render_image(const GlobalFlags& flags, const std::string& name, double radius,
                     const std::string& out_base, int samples, std::optional<double> param) {
    const ExtremalId id = *extremal_from_name(name);
    const double f6_param = param.value_or(extremal_f6_default_param);
    ImageCurve curve;
    try {
        curve = image_curve(id, radius, samples, f6_param);
    } catch (const std::runtime_error& err) {
        std::fprintf(stderr, "error: %s\n", err.what());
        return 1;
    }
    const std::string metadata = image_metadata_json(curve, f6_param);
    write_text_file(out_base + ".svg", curves_svg({curve.points}, metadata));
    write_text_file(out_base + ".csv", curves_csv({curve.points}));

    if (flags.json) {
        emit(metadata + "\n", flags.out_path);
    } else {
        emit("image of |z| = " + format_number(radius, 6) + " under " + name + " -> " +
                 out_base + ".svg, " + out_base + ".csv\n",
             flags.out_path);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sharp-bound verification for inverse logarithmic coefficients of starlike "
                 "and convex function classes"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalFlags flags;
    app.add_flag("--json", flags.json, "emit machine-readable JSON");
    app.add_flag("--csv", flags.csv, "emit CSV");
    app.add_flag("--strict", flags.strict, "escalate known flagged discrepancies to failures");
    app.add_option("--seed", flags.seed, "seed for randomized soundness sampling");
    app.add_option("--tolerance", flags.tolerance,
                   "override comparison tolerances (closed form 1e-6, oracle 1e-4)")
        ->check(CLI::PositiveNumber);
    app.add_option("--out", flags.out_path, "write the report to a file instead of stdout");

    auto* verify_cmd = app.add_subcommand("verify", "verify claimed sharp bounds per theorem");
    std::string theorem = "all";
    int verify_grid = 96;
    verify_cmd->add_option("--theorem", theorem, "theorem id")
        ->check(CLI::IsMember({"1.1", "1.2", "1.3", "1.4", "all"}));
    verify_cmd->add_option("--grid", verify_grid, "oracle grid resolution")
        ->check(CLI::Range(32, 1024));

    auto* search_cmd =
        app.add_subcommand("search", "empirical extrema of |Gamma2| - |Gamma1| over the body");
    std::string search_class_name;
    int search_grid = 96;
    search_cmd->add_option("--class", search_class_name, "function class")
        ->required()
        ->check(CLI::IsMember({"starlike_symmetric", "convex_symmetric", "starlike_lune",
                               "convex_lune"}));
    search_cmd->add_option("--grid", search_grid, "grid resolution")->check(CLI::Range(32, 1024));

    auto* extremal_cmd = app.add_subcommand("extremal", "series of a named extremal function");
    std::string extremal_name_arg;
    int extremal_order = 12;
    double param_a = -1.0;
    extremal_cmd->add_option("--name", extremal_name_arg, "f1..f6")
        ->required()
        ->check(CLI::IsMember({"f1", "f2", "f3", "f4", "f5", "f6"}));
    extremal_cmd->add_option("--order", extremal_order, "truncation order")
        ->check(CLI::Range(3, 20000));
    extremal_cmd->add_option("--param-a", param_a, "generator parameter A for f6 (default 6/7)")
        ->check(CLI::Range(0.0, 1.0));

    auto* lune_cmd = app.add_subcommand("render-lune", "lune boundary as SVG + CSV");
    std::string lune_out;
    int lune_samples = 720;
    lune_cmd->add_option("--out", lune_out, "output base path (.svg and .csv are appended)")
        ->required();
    lune_cmd->add_option("--samples", lune_samples, "boundary samples (multiple of 4)")
        ->check(CLI::Range(64, 1 << 20));

    auto* image_cmd = app.add_subcommand("render-image", "extremal image domain as SVG + CSV");
    std::string image_name, image_out;
    double image_radius = 0.0;
    int image_samples = 512;
    double image_param_a = -1.0;
    image_cmd->add_option("--name", image_name, "f1..f6")
        ->required()
        ->check(CLI::IsMember({"f1", "f2", "f3", "f4", "f5", "f6"}));
    image_cmd->add_option("--radius", image_radius, "circle radius (at most 0.995)")
        ->required()
        ->check(CLI::Range(1e-6, 0.995));
    image_cmd->add_option("--out", image_out, "output base path (.svg and .csv are appended)")
        ->required();
    image_cmd->add_option("--samples", image_samples, "circle samples")
        ->check(CLI::Range(64, 65536));
    image_cmd->add_option("--param-a", image_param_a, "generator parameter A for f6")
        ->check(CLI::Range(0.0, 1.0));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        std::fprintf(stderr, "run with --help for usage\n");
        return exit_usage;
    }

    // render-lune needs the vertex samples on the curve
    if (lune_cmd->parsed() && lune_samples % 4 != 0) {
        std::fprintf(stderr, "error: --samples must be a multiple of 4\n");
        return exit_usage;
    }

    try {
        if (verify_cmd->parsed()) return run_verify(flags, theorem, verify_grid);
        if (search_cmd->parsed()) return run_search(flags, search_class_name, search_grid);
        if (extremal_cmd->parsed())
            return run_extremal(flags, extremal_name_arg, extremal_order,
                                param_a >= 0.0 ? std::optional<double>(param_a) : std::nullopt);
        if (lune_cmd->parsed()) return run_render_lune(flags, lune_out, lune_samples);
        if (image_cmd->parsed())
            return run_render_image(flags, image_name, image_radius, image_out, image_samples,
                                    image_param_a >= 0.0 ? std::optional<double>(image_param_a)
                                                         : std::nullopt);
    } catch (const std::exception& err) {
        std::fprintf(stderr, "error: %s\n", err.what());
        return 1;
    }
    return exit_usage;
}
