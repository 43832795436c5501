#pragma once

#include <gammadiff/truncated_series.hpp>

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gammadiff {

/// First two logarithmic coefficients of the inverse map,
///   log(f^{-1}(w) / w) = 2 sum_n Gamma_n w^n.
struct GammaPair {
    Complex gamma1;
    Complex gamma2;
};

/// Inverse-map coefficients from f(f^{-1}(w)) = w:
///   A2 = -a2,  A3 = 2 a2^2 - a3.
inline std::pair<Complex, Complex> inverse_coeffs(Complex a2, Complex a3) {
    return {-a2, 2.0 * a2 * a2 - a3};
}

/// Closed forms for the first two inverse logarithmic coefficients:
///   Gamma1 = -a2/2,  Gamma2 = -a3/2 + 3 a2^2 / 4.
inline GammaPair inv_log_coeffs(Complex a2, Complex a3) {
    return {-0.5 * a2, -0.5 * a3 + 0.75 * a2 * a2};
}

/// The target functional |Gamma2| - |Gamma1|.
inline double moduli_diff(const GammaPair& g) {
    return std::abs(g.gamma2) - std::abs(g.gamma1);
}

namespace detail {
inline void require_normalized(const TruncatedSeries& f, const char* op) {
    if (std::abs(f.coeff(0)) > 1e-12 || std::abs(f.coeff(1) - 1.0) > 1e-12)
        throw std::invalid_argument(std::string(op) +
                                    ": series must be normalized (c0 = 0, c1 = 1)");
}
}  // namespace detail

/// Gamma_1..Gamma_n_max through the series pipeline: revert f, divide by w,
/// take half the log coefficients. Independent of the closed forms above.
inline std::vector<Complex> inv_log_coeffs_series(const TruncatedSeries& f, int n_max) {
    detail::require_normalized(f, "inv_log_coeffs_series");
    if (n_max < 1 || n_max >= f.order())
        throw std::invalid_argument("inv_log_coeffs_series: need 1 <= n_max < order");
    const TruncatedSeries lg = log_series(shift_down(revert(f)));
    std::vector<Complex> gammas(static_cast<size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) gammas[static_cast<size_t>(n - 1)] = 0.5 * lg.coeff(n);
    return gammas;
}

/// gamma_1..gamma_n_max of log(f(z)/z) = 2 sum_n gamma_n z^n.
inline std::vector<Complex> log_coeffs_series(const TruncatedSeries& f, int n_max) {
    detail::require_normalized(f, "log_coeffs_series");
    if (n_max < 1 || n_max >= f.order())
        throw std::invalid_argument("log_coeffs_series: need 1 <= n_max < order");
    const TruncatedSeries lg = log_series(shift_down(f));
    std::vector<Complex> gammas(static_cast<size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) gammas[static_cast<size_t>(n - 1)] = 0.5 * lg.coeff(n);
    return gammas;
}

/// Gamma pair of a normalized series via the closed forms.
inline GammaPair gamma_pair_of(const TruncatedSeries& f) {
    detail::require_normalized(f, "gamma_pair_of");
    return inv_log_coeffs(f.coeff(2), f.coeff(3));
}

}  // namespace gammadiff
