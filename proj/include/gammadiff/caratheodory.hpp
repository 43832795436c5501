#pragma once

#include <gammadiff/truncated_series.hpp>

#include <cmath>
#include <stdexcept>
#include <utility>

namespace gammadiff {

/// Schur parameters for the first two coefficients of a function with
/// positive real part, p(z) = 1 + c1 z + c2 z^2 + ... with p(0) = 1.
/// Both parameters range over the closed unit disk and together they sweep
/// exactly the attainable set of (c1, c2):
///   c1 = 2 zeta1,   c2 = 2 zeta1^2 + 2 (1 - |zeta1|^2) zeta2.
struct CaratheodoryPoint {
    Complex zeta1;
    Complex zeta2;
};

namespace detail {
inline void require_in_closed_disk(Complex zeta, const char* name) {
    if (std::abs(zeta) > 1.0 + 1e-12)
        throw std::domain_error(std::string(name) + " outside the closed unit disk, |" + name +
                                "| = " + std::to_string(std::abs(zeta)));
}
}  // namespace detail

/// First two coefficients (c1, c2) generated by a parameter point.
inline std::pair<Complex, Complex> to_coeffs(const CaratheodoryPoint& pt) {
    detail::require_in_closed_disk(pt.zeta1, "zeta1");
    detail::require_in_closed_disk(pt.zeta2, "zeta2");
    const Complex c1 = 2.0 * pt.zeta1;
    const double r1 = std::norm(pt.zeta1);
    const Complex c2 = 2.0 * pt.zeta1 * pt.zeta1 + 2.0 * (1.0 - r1) * pt.zeta2;
    return {c1, c2};
}

/// Whether (c1, c2) lies in the two-coefficient body:
/// |c1| <= 2 and |c2 - c1^2/2| <= 2 - |c1|^2/2.
inline bool in_coefficient_body(Complex c1, Complex c2, double tol = 1e-9) {
    if (std::abs(c1) > 2.0 + tol) return false;
    return std::abs(c2 - c1 * c1 * 0.5) <= 2.0 - std::norm(c1) * 0.5 + tol;
}

/// Series of (1 + 2Az + z^2) / (1 - z^2) for 0 <= A <= 1. Its coefficients
/// are c_{2k} = 2 and c_{2k+1} = 2A (k >= 1), so c1 = 2A and c2 = 2; the
/// function has positive real part on the disk for the whole parameter range.
inline TruncatedSeries rational_p(double a, int order) {
    if (!(a >= 0.0 && a <= 1.0))
        throw std::domain_error("rational_p: parameter must lie in [0, 1], got " +
                                std::to_string(a));
    TruncatedSeries numerator(order);
    numerator.set_coeff(0, 1.0);
    numerator.set_coeff(1, 2.0 * a);
    numerator.set_coeff(2, 1.0);
    TruncatedSeries denominator(order);
    denominator.set_coeff(0, 1.0);
    denominator.set_coeff(2, -1.0);
    return numerator * reciprocal(denominator);
}

/// Series of the positive-real-part function realizing a parameter point:
/// p = (1 + w)/(1 - w) with the degree-2 Blaschke-type Schwarz function
/// w(z) = z (zeta1 + zeta2 z) / (1 + conj(zeta1) zeta2 z).
inline TruncatedSeries schur_p(const CaratheodoryPoint& pt, int order) {
    detail::require_in_closed_disk(pt.zeta1, "zeta1");
    detail::require_in_closed_disk(pt.zeta2, "zeta2");
    TruncatedSeries numerator(order);
    numerator.set_coeff(1, pt.zeta1);
    numerator.set_coeff(2, pt.zeta2);
    TruncatedSeries denominator(order);
    denominator.set_coeff(0, 1.0);
    denominator.set_coeff(1, std::conj(pt.zeta1) * pt.zeta2);
    const TruncatedSeries w = numerator * reciprocal(denominator);
    return (1.0 + w) * reciprocal(1.0 - w);
}

/// Schwarz transfer w = (p - 1)/(p + 1) for p with constant term 1; the
/// result has vanishing constant term.
inline TruncatedSeries schwarz_from_p(const TruncatedSeries& p) {
    if (std::abs(p.coeff(0) - 1.0) > 1e-12)
        throw std::invalid_argument("schwarz_from_p: constant term of p must be 1");
    return (p - 1.0) * reciprocal(p + 1.0);
}

}  // namespace gammadiff
