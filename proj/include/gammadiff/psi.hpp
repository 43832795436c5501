#pragma once

#include <gammadiff/caratheodory.hpp>
#include <gammadiff/truncated_series.hpp>

#include <algorithm>
#include <cmath>
#include <future>
#include <stdexcept>
#include <thread>
#include <vector>

namespace gammadiff {

/// Coefficient triple of the functional
///   Psi_plus(c1, c2) = |B2 c1^2 + B3 c2| - |B1 c1|,   Psi_minus = -Psi_plus,
/// with B1 > 0, B2 complex, B3 real. B4 = |4 B2 + 2 B3| is always recomputed.
struct PsiCoeffs {
    double b1;
    Complex b2;
    double b3;

    PsiCoeffs(double b1_, Complex b2_, double b3_) : b1(b1_), b2(b2_), b3(b3_) {
        if (!(b1 > 0.0))
            throw std::domain_error("PsiCoeffs: B1 must be positive, got " + std::to_string(b1));
    }

    double b4() const { return std::abs(4.0 * b2 + 2.0 * b3); }
};

inline double psi_plus_value(Complex c1, Complex c2, const PsiCoeffs& b) {
    return std::abs(b.b2 * c1 * c1 + b.b3 * c2) - std::abs(b.b1 * c1);
}

inline double psi_minus_value(Complex c1, Complex c2, const PsiCoeffs& b) {
    return -psi_plus_value(c1, c2, b);
}

/// Sharp maximum of Psi_plus over the coefficient body:
///   |4B2 + 2B3| - 2B1   if |2B2 + B3| >= |B3| + B1,
///   2|B3|               otherwise.
inline double psi_plus_bound(const PsiCoeffs& b) {
    if (std::abs(2.0 * b.b2 + b.b3) >= std::abs(b.b3) + b.b1) return b.b4() - 2.0 * b.b1;
    return 2.0 * std::abs(b.b3);
}

/// Sharp maximum of Psi_minus over the coefficient body, cases checked in
/// the listed order (overlaps resolve to the first matching case):
///   2B1 - B4                          if B1 >= B4 + 2|B3|,
///   2B1 sqrt(2|B3| / (B4 + 2|B3|))    if B1^2 <= 2|B3| (B4 + 2|B3|),
///   2|B3| + B1^2 / (B4 + 2|B3|)       otherwise.
inline double psi_minus_bound(const PsiCoeffs& b) {
    const double b4 = b.b4();
    const double abs_b3 = std::abs(b.b3);
    const double denom = b4 + 2.0 * abs_b3;
    if (b.b1 >= denom) return 2.0 * b.b1 - b4;
    if (denom == 0.0)
        throw std::domain_error("psi_minus_bound: degenerate coefficients (B3 = 0, B4 = 0) "
                                "with the first case guard failing");
    if (b.b1 * b.b1 <= 2.0 * abs_b3 * denom) return 2.0 * b.b1 * std::sqrt(2.0 * abs_b3 / denom);
    return 2.0 * abs_b3 + b.b1 * b.b1 / denom;
}

/// Result of a maximization over the coefficient body in the rotation-reduced
/// parametrization zeta1 = x in [0,1], zeta2 = rho e^{i phi}.
struct BodyMaximum {
    double value = 0.0;
    double x = 0.0;
    double rho = 0.0;
    double phi = 0.0;
    Complex c1;
    Complex c2;
    std::vector<double> round_values;  // best value after each refinement round
};

namespace detail {

inline Complex polar_unit(double phi) { return Complex(std::cos(phi), std::sin(phi)); }

inline double wrap_angle(double phi) {
    const double two_pi = 2.0 * M_PI;
    double r = std::fmod(phi, two_pi);
    if (r < 0.0) r += two_pi;
    return r;
}

template <class F>
BodyMaximum scan_slice(F& value_at, int i_begin, int i_end, int nx, int nrho, int nphi) {
    BodyMaximum best;
    bool first = true;
    for (int i = i_begin; i < i_end; ++i) {
        const double x = static_cast<double>(i) / static_cast<double>(nx - 1);
        for (int j = 0; j < nrho; ++j) {
            const double rho = static_cast<double>(j) / static_cast<double>(nrho - 1);
            for (int k = 0; k < nphi; ++k) {
                const double phi = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(nphi);
                const double v = value_at(x, rho * polar_unit(phi));
                // ascending scan + strict improvement = lexicographically
                // smallest (x, rho, phi) among ties
                if (first || v > best.value) {
                    best.value = v;
                    best.x = x;
                    best.rho = rho;
                    best.phi = phi;
                    first = false;
                }
            }
        }
    }
    return best;
}

}  // namespace detail

/// Maximize value_at(x, zeta2) over x in [0,1] and zeta2 in the closed unit
/// disk: a coarse grid scan (parallel over x-slices, merged deterministically
/// in x order) followed by refinement rounds with halving step. The grid
/// parameter g spans an (g x g/2 x g) lattice in (x, rho, phi).
template <class F>
BodyMaximum maximize_over_body(F value_at, int grid = 96, int refine = 40,
                               double initial_step = 0.05) {
    if (grid < 32) throw std::invalid_argument("maximize_over_body: grid must be >= 32");
    const int nx = grid, nrho = grid / 2, nphi = grid;

    unsigned workers = std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    workers = std::min<unsigned>(workers, 8);

    BodyMaximum best;
    if (workers <= 1) {
        best = detail::scan_slice(value_at, 0, nx, nx, nrho, nphi);
    } else {
        std::vector<std::future<BodyMaximum>> parts;
        const int chunk = (nx + static_cast<int>(workers) - 1) / static_cast<int>(workers);
        for (int begin = 0; begin < nx; begin += chunk) {
            const int end = std::min(nx, begin + chunk);
            parts.push_back(std::async(std::launch::async, [&value_at, begin, end, nx, nrho, nphi] {
                return detail::scan_slice(value_at, begin, end, nx, nrho, nphi);
            }));
        }
        bool first = true;
        for (auto& part : parts) {
            const BodyMaximum candidate = part.get();
            if (first || candidate.value > best.value) {
                best = candidate;
                first = false;
            }
        }
    }

    // Refinement. The maximizers sit in curved valleys of (x, rho): following
    // them with joint coordinate moves stalls, because near the valley floor
    // every single-coordinate step loses value. Instead each probe of x fully
    // re-optimizes zeta2 = rho e^{i phi} by a warm-started pattern search with
    // its own halving schedule, and x itself is walked with halving steps.
    const auto optimize_zeta2 = [&value_at](double x, double& rho, double& phi) {
        double best_v = value_at(x, rho * detail::polar_unit(phi));
        double step = 0.05;
        for (int round = 0; round < 32; ++round) {
            bool sweep_improved = true;
            for (int sweep = 0; sweep < 32 && sweep_improved; ++sweep) {
                sweep_improved = false;
                for (int coord = 0; coord < 2; ++coord) {
                    for (int move = 0; move < 512; ++move) {
                        bool moved = false;
                        for (const double sign : {-1.0, +1.0}) {
                            double rho2 = rho, phi2 = phi;
                            if (coord == 0) rho2 = std::clamp(rho + sign * step, 0.0, 1.0);
                            else phi2 = detail::wrap_angle(phi + sign * step);
                            const double v = value_at(x, rho2 * detail::polar_unit(phi2));
                            if (v > best_v) {
                                best_v = v;
                                rho = rho2;
                                phi = phi2;
                                moved = true;
                            }
                        }
                        if (!moved) break;
                        sweep_improved = true;
                    }
                }
            }
            step *= 0.5;
        }
        return best_v;
    };

    best.value = optimize_zeta2(best.x, best.rho, best.phi);
    double step = initial_step;
    best.round_values.reserve(static_cast<size_t>(refine));
    for (int round = 0; round < refine; ++round) {
        for (int move = 0; move < 256; ++move) {
            bool moved = false;
            for (const double sign : {-1.0, +1.0}) {
                const double x2 = std::clamp(best.x + sign * step, 0.0, 1.0);
                double rho2 = best.rho, phi2 = best.phi;
                const double v = optimize_zeta2(x2, rho2, phi2);
                if (v > best.value) {
                    best.value = v;
                    best.x = x2;
                    best.rho = rho2;
                    best.phi = phi2;
                    moved = true;
                }
            }
            if (!moved) break;
        }
        best.round_values.push_back(best.value);
        step *= 0.5;
    }

    const auto [c1, c2] = to_coeffs({best.x, best.rho * detail::polar_unit(best.phi)});
    best.c1 = c1;
    best.c2 = c2;
    return best;
}

enum class PsiSign { plus, minus };

/// Brute-force maximum of Psi_plus (or Psi_minus) over the coefficient body.
/// The functionals satisfy Psi(e^{i t} c1, e^{2 i t} c2) = Psi(c1, c2), so the
/// search fixes zeta1 = x real in [0, 1] without loss. Deterministic for fixed
/// inputs.
inline BodyMaximum oracle_max(const PsiCoeffs& b, PsiSign sign, int grid = 96, int refine = 40) {
    const auto value_at = [&b, sign](double x, Complex zeta2) {
        const auto [c1, c2] = to_coeffs({x, zeta2});
        return sign == PsiSign::plus ? psi_plus_value(c1, c2, b) : psi_minus_value(c1, c2, b);
    };
    return maximize_over_body(value_at, grid, refine);
}

}  // namespace gammadiff
