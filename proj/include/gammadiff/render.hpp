#pragma once

#include <gammadiff/classes.hpp>
#include <gammadiff/json_writer.hpp>
#include <gammadiff/truncated_series.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gammadiff {

/// q(z) = z + sqrt(1 + z^2) with the principal square root (q(0) = 1).
inline Complex lune_map(Complex z) { return z + std::sqrt(1.0 + z * z); }

struct CurvePoint {
    double theta;
    Complex w;
};

struct LuneCurves {
    std::vector<CurvePoint> right_lobe;  // closed: last point repeats the first
    std::vector<CurvePoint> left_lobe;   // reflection through the origin
    double boundary_residual_max;        // max over vertices of ||w^2-1| - 2|w||
    double vertex_miss_max;              // worst miss of i, -i, 1+sqrt(2), 1-sqrt(2)
};

/// Boundary of the lune |w^2 - 1| <= 2|w|: the unit circle mapped through q
/// traces the right lobe, reflection through the origin gives the left one.
/// On the circle 1 + z^2 = 2 cos(theta) e^{i theta}; the cosine is snapped to
/// zero near the vertices so the curve passes through +-i exactly.
inline LuneCurves lune_boundary(int samples = 720) {
    if (samples < 64) throw std::invalid_argument("lune_boundary: need samples >= 64");
    if (samples % 4 != 0)
        throw std::invalid_argument("lune_boundary: samples must be a multiple of 4 so the "
                                    "vertices land on the curve");
    LuneCurves curves;
    curves.right_lobe.reserve(static_cast<size_t>(samples) + 1);
    curves.left_lobe.reserve(static_cast<size_t>(samples) + 1);

    for (int k = 0; k <= samples; ++k) {
        const double theta = 2.0 * M_PI * static_cast<double>(k % samples) / samples;
        const Complex z = std::polar(1.0, theta);
        double c = std::cos(theta);
        if (std::abs(c) < 1e-14) c = 0.0;
        const Complex u = 2.0 * c * z;  // 1 + z^2, assembled stably
        const Complex w = z + std::sqrt(u);
        curves.right_lobe.push_back({theta, w});
        curves.left_lobe.push_back({theta, -w});
    }

    double residual = 0.0;
    for (const auto& pt : curves.right_lobe)
        residual = std::max(residual,
                            std::abs(std::abs(pt.w * pt.w - 1.0) - 2.0 * std::abs(pt.w)));
    curves.boundary_residual_max = residual;

    const std::array<Complex, 4> targets = {Complex(0.0, 1.0), Complex(0.0, -1.0),
                                            Complex(1.0 + std::sqrt(2.0), 0.0),
                                            Complex(1.0 - std::sqrt(2.0), 0.0)};
    double miss_max = 0.0;
    for (const Complex target : targets) {
        double miss = std::numeric_limits<double>::infinity();
        for (const auto& pt : curves.right_lobe) miss = std::min(miss, std::abs(pt.w - target));
        for (const auto& pt : curves.left_lobe) miss = std::min(miss, std::abs(pt.w - target));
        miss_max = std::max(miss_max, miss);
    }
    curves.vertex_miss_max = miss_max;
    return curves;
}

// ---------------------------------------------------------------------------
// Quadrature for the integral representations of the extremal maps.

namespace detail {

struct GaussNode {
    double x;  // node in [0, 1]
    double w;  // weight on [0, 1]
};

/// 16-point Gauss-Legendre rule on [0, 1]; nodes found once by Newton on the
/// Legendre polynomial.
inline const std::array<GaussNode, 16>& gauss16() {
    static const std::array<GaussNode, 16> nodes = [] {
        constexpr int n = 16;
        std::array<GaussNode, 16> out{};
        for (int i = 0; i < n; ++i) {
            double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = x;
                for (int k = 2; k <= n; ++k) {
                    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                const double dp = n * (x * p1 - p0) / (x * x - 1.0);
                const double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-16) break;
            }
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            const double dp = n * (x * p1 - p0) / (x * x - 1.0);
            out[static_cast<size_t>(i)] = {0.5 * (x + 1.0), 1.0 / ((1.0 - x * x) * dp * dp)};
        }
        return out;
    }();
    return nodes;
}

template <class G>
Complex gauss_panel(G& g, double a, double b) {
    Complex acc = 0.0;
    for (const auto& node : gauss16()) acc += node.w * g(a + (b - a) * node.x);
    return (b - a) * acc;
}

/// Composite Gauss on [0, 1], doubling panels until two successive composite
/// values agree within tol.
template <class G>
Complex integrate01(G g, double tol, const char* what) {
    Complex prev = gauss_panel(g, 0.0, 1.0);
    for (int panels = 2; panels <= 4096; panels *= 2) {
        Complex cur = 0.0;
        for (int j = 0; j < panels; ++j)
            cur += gauss_panel(g, static_cast<double>(j) / panels,
                               static_cast<double>(j + 1) / panels);
        if (std::abs(cur - prev) <= tol * (1.0 + std::abs(cur))) return cur;
        prev = cur;
    }
    throw std::runtime_error(std::string("quadrature failed to converge for ") + what);
}

/// (v(t) - 1)/t for the lune relation v = w + sqrt(1 + w^2), written as
/// w/t + (w^2/t) / (1 + sqrt(1 + w^2)) to stay stable near t = 0.
inline Complex lune_ray_integrand(Complex w_over_t, Complex w) {
    return w_over_t + w * w_over_t / (1.0 + std::sqrt(1.0 + w * w));
}

inline Complex blaschke_w(double a, Complex t) { return (a * t + t * t) / (1.0 + a * t); }

inline Complex blaschke_w_over_t(double a, Complex t) { return (a + t) / (1.0 + a * t); }

/// exp of the inner lune integral for w(t) = t^2, in closed form:
/// sqrt(2) exp((z^2 - 1 + sqrt(1 + z^4))/2) / sqrt(1 + sqrt(1 + z^4)).
inline Complex lune_inner_exp_closed(Complex z) {
    const Complex root = std::sqrt(1.0 + z * z * z * z);
    return std::sqrt(2.0) * std::exp(0.5 * (z * z - 1.0 + root)) / std::sqrt(root + 1.0);
}

}  // namespace detail

/// Closed-form value of f3.
inline Complex extremal_f3_closed(Complex z) { return z * detail::lune_inner_exp_closed(z); }

/// Extremal map value by adaptive composite Gauss quadrature of its integral
/// representation along the ray from 0 to z. Supports f3..f6 (f3 mostly for
/// cross-checking the closed form). Throws on non-convergence.
inline Complex extremal_value_quadrature(ExtremalId id, Complex z,
                                         double f6_param = extremal_f6_default_param,
                                         double tol = 1e-10) {
    // int_0^target (v(t) - 1)/t dt as target * int_0^1 ... ds
    const auto ray_exponent = [](auto w_fn, auto w_over_t_fn, Complex target, double ray_tol) {
        return detail::integrate01(
            [&](double s) {
                const Complex t = s * target;
                return detail::lune_ray_integrand(w_over_t_fn(t), w_fn(t)) * target;
            },
            ray_tol, "the lune ray integral");
    };
    const auto square = [](Complex t) { return t * t; };
    const auto identity_fn = [](Complex t) { return t; };
    const double a = f6_param;
    const auto w6 = [a](Complex t) { return detail::blaschke_w(a, t); };
    const auto w6_over_t = [a](Complex t) { return detail::blaschke_w_over_t(a, t); };

    switch (id) {
        case ExtremalId::f3:
            return z * std::exp(ray_exponent(square, identity_fn, z, tol));
        case ExtremalId::f4: {
            const double a4 = extremal_f4_param;
            return z * std::exp(ray_exponent(
                           [a4](Complex t) { return detail::blaschke_w(a4, t); },
                           [a4](Complex t) { return detail::blaschke_w_over_t(a4, t); }, z, tol));
        }
        case ExtremalId::f5:
            // f5' has the closed form of f3/z
            return detail::integrate01(
                [&](double s) { return detail::lune_inner_exp_closed(s * z) * z; }, tol,
                "the outer integral of f5");
        case ExtremalId::f6:
            return detail::integrate01(
                [&](double s) {
                    const Complex zeta = s * z;
                    return std::exp(ray_exponent(w6, w6_over_t, zeta, 0.01 * tol)) * z;
                },
                tol, "the outer integral of f6");
        default:
            throw std::invalid_argument(
                "extremal_value_quadrature: only f3..f6 have integral representations here");
    }
}

/// Point value of an extremal map: closed forms for f1, f2, f3; quadrature of
/// the integral representations for f4, f5, f6.
inline Complex extremal_value(ExtremalId id, Complex z,
                              double f6_param = extremal_f6_default_param,
                              double tol = 1e-10) {
    switch (id) {
        case ExtremalId::f1:
            return z / (1.0 - z * z);
        case ExtremalId::f2:
            return 0.5 * (std::log(1.0 + z) - std::log(1.0 - z));
        case ExtremalId::f3:
            return extremal_f3_closed(z);
        default:
            return extremal_value_quadrature(id, z, f6_param, tol);
    }
}

struct ImageCurve {
    ExtremalId id;
    double radius;
    std::vector<CurvePoint> points;  // closed
};

/// Image of the circle |z| = radius under the named extremal map.
inline ImageCurve image_curve(ExtremalId id, double radius, int samples = 512,
                              double f6_param = extremal_f6_default_param, double tol = 1e-10) {
    if (!(radius > 0.0 && radius <= 0.995))
        throw std::invalid_argument("image_curve: radius must lie in (0, 0.995]");
    if (samples < 64) throw std::invalid_argument("image_curve: need samples >= 64");
    ImageCurve curve{id, radius, {}};
    curve.points.reserve(static_cast<size_t>(samples) + 1);
    for (int k = 0; k <= samples; ++k) {
        const double theta = 2.0 * M_PI * static_cast<double>(k % samples) / samples;
        const Complex z = std::polar(radius, theta);
        try {
            curve.points.push_back({theta, extremal_value(id, z, f6_param, tol)});
        } catch (const std::runtime_error& err) {
            throw std::runtime_error(std::string(err.what()) + " at theta = " +
                                     format_number(theta, 10));
        }
    }
    return curve;
}

// ---------------------------------------------------------------------------
// File output: RFC 4180 CSV (theta, re, im) and SVG 1.1 with a metadata block.

inline std::string curves_csv(const std::vector<std::vector<CurvePoint>>& curves) {
    std::string out = "theta,re,im\r\n";
    for (const auto& curve : curves)
        for (const auto& pt : curve)
            out += format_number(pt.theta) + "," + format_number(pt.w.real()) + "," +
                   format_number(pt.w.imag()) + "\r\n";
    return out;
}

inline std::string curves_svg(const std::vector<std::vector<CurvePoint>>& curves,
                              const std::string& metadata_json) {
    double min_x = std::numeric_limits<double>::infinity(), max_x = -min_x;
    double min_y = min_x, max_y = max_x;
    for (const auto& curve : curves)
        for (const auto& pt : curve) {
            min_x = std::min(min_x, pt.w.real());
            max_x = std::max(max_x, pt.w.real());
            min_y = std::min(min_y, pt.w.imag());
            max_y = std::max(max_y, pt.w.imag());
        }
    const double margin = 0.05 * std::max(max_x - min_x, max_y - min_y);
    const double x0 = min_x - margin, y0 = -(max_y + margin);
    const double width = (max_x - min_x) + 2.0 * margin, height = (max_y - min_y) + 2.0 * margin;
    const double stroke = 0.004 * std::max(width, height);

    static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};
    const auto num = [](double v) { return format_number(v, 10); };

    std::string svg = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"640\" "
           "height=\"640\" viewBox=\"" +
           num(x0) + " " + num(y0) + " " + num(width) + " " + num(height) + "\">\n";
    if (!metadata_json.empty()) svg += "  <metadata>" + metadata_json + "</metadata>\n";
    size_t color = 0;
    for (const auto& curve : curves) {
        svg += "  <polyline fill=\"none\" stroke=\"" + std::string(palette[color % 4]) +
               "\" stroke-width=\"" + num(stroke) + "\" points=\"";
        for (size_t i = 0; i < curve.size(); ++i) {
            if (i) svg += ' ';
            svg += num(curve[i].w.real()) + "," + num(-curve[i].w.imag());
        }
        svg += "\"/>\n";
        ++color;
    }
    svg += "</svg>\n";
    return svg;
}

inline void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

inline std::string lune_metadata_json(const LuneCurves& curves, int samples) {
    JsonWriter json;
    json.begin_object();
    json.key("kind").value("lune_boundary");
    json.key("samples").value(samples);
    json.key("boundary_residual_max").value(curves.boundary_residual_max);
    json.key("vertex_miss_max").value(curves.vertex_miss_max);
    json.key("checks_pass").value(curves.boundary_residual_max < 1e-9 &&
                                  curves.vertex_miss_max < 1e-9);
    json.end_object();
    return json.str();
}

inline std::string image_metadata_json(const ImageCurve& curve, double f6_param) {
    JsonWriter json;
    json.begin_object();
    json.key("kind").value("image_domain");
    json.key("map").value(extremal_name(curve.id));
    json.key("radius").value(curve.radius);
    json.key("samples").value(static_cast<std::int64_t>(curve.points.size() - 1));
    if (curve.id == ExtremalId::f6) json.key("generator_param").value(f6_param);
    json.end_object();
    return json.str();
}

}  // namespace gammadiff
