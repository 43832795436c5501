#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gammadiff {

using Complex = std::complex<double>;

namespace detail {
using LongComplex = std::complex<long double>;

inline LongComplex widen(Complex z) {
    return LongComplex(static_cast<long double>(z.real()), static_cast<long double>(z.imag()));
}

inline Complex narrow(LongComplex z) {
    return Complex(static_cast<double>(z.real()), static_cast<double>(z.imag()));
}
}  // namespace detail

/// Formal power series over complex coefficients, truncated at a fixed degree.
///
/// A series of order N stores the coefficients c0..cN and every operation is
/// exact through degree N: all cross terms of degree <= N are accounted for,
/// higher-degree information is simply absent. The interface trades in
/// double-precision complex values; the carrier keeps extended-precision
/// intermediates because reversion coefficients grow into the 1e6 range and
/// the roundtrip cancellations would otherwise lose half the mantissa.
///
/// Values are immutable in spirit: all operations are pure functions returning
/// fresh series, so instances can be shared freely across threads.
class TruncatedSeries {
public:
    static constexpr int min_order = 2;

    explicit TruncatedSeries(int order) : coeffs_(static_cast<size_t>(checked_order(order)) + 1) {}

    static TruncatedSeries from_coeffs(const std::vector<Complex>& coeffs) {
        TruncatedSeries s(static_cast<int>(coeffs.size()) - 1);
        for (size_t k = 0; k < coeffs.size(); ++k) s.coeffs_[k] = detail::widen(coeffs[k]);
        return s;
    }

    static TruncatedSeries zero(int order) { return TruncatedSeries(order); }

    static TruncatedSeries constant(Complex value, int order) {
        TruncatedSeries s(order);
        s.coeffs_[0] = detail::widen(value);
        return s;
    }

    /// The series z.
    static TruncatedSeries identity(int order) {
        TruncatedSeries s(order);
        s.coeffs_[1] = 1.0L;
        return s;
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    Complex coeff(int k) const { return detail::narrow(lcoeff(k)); }

    void set_coeff(int k, Complex value) { set_lcoeff(k, detail::widen(value)); }

    std::vector<Complex> coeffs() const {
        std::vector<Complex> out(coeffs_.size());
        for (size_t k = 0; k < coeffs_.size(); ++k) out[k] = detail::narrow(coeffs_[k]);
        return out;
    }

    // Extended-precision access; used by the arithmetic kernels.
    detail::LongComplex lcoeff(int k) const {
        check_index(k);
        return coeffs_[static_cast<size_t>(k)];
    }

    void set_lcoeff(int k, detail::LongComplex value) {
        check_index(k);
        coeffs_[static_cast<size_t>(k)] = value;
    }

private:
    static int checked_order(int order) {
        if (order < min_order)
            throw std::invalid_argument("TruncatedSeries: order must be >= 2, got " +
                                        std::to_string(order));
        return order;
    }

    void check_index(int k) const {
        if (k < 0 || k > order())
            throw std::out_of_range("TruncatedSeries: coefficient index " + std::to_string(k) +
                                    " outside 0.." + std::to_string(order()));
    }

    std::vector<detail::LongComplex> coeffs_;
};

namespace detail {

inline void require_equal_orders(const TruncatedSeries& a, const TruncatedSeries& b,
                                 const char* op) {
    if (a.order() != b.order())
        throw std::invalid_argument(std::string(op) + ": order mismatch (" +
                                    std::to_string(a.order()) + " vs " +
                                    std::to_string(b.order()) + ")");
}

}  // namespace detail

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    detail::require_equal_orders(a, b, "add");
    TruncatedSeries r(a.order());
    for (int k = 0; k <= a.order(); ++k) r.set_lcoeff(k, a.lcoeff(k) + b.lcoeff(k));
    return r;
}

inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    detail::require_equal_orders(a, b, "sub");
    TruncatedSeries r(a.order());
    for (int k = 0; k <= a.order(); ++k) r.set_lcoeff(k, a.lcoeff(k) - b.lcoeff(k));
    return r;
}

inline TruncatedSeries operator-(const TruncatedSeries& a) {
    TruncatedSeries r(a.order());
    for (int k = 0; k <= a.order(); ++k) r.set_lcoeff(k, -a.lcoeff(k));
    return r;
}

/// Cauchy product truncated at the common order.
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    detail::require_equal_orders(a, b, "mul");
    const int n = a.order();
    TruncatedSeries r(n);
    for (int k = 0; k <= n; ++k) {
        detail::LongComplex acc(0.0L, 0.0L);
        for (int j = 0; j <= k; ++j) acc += a.lcoeff(j) * b.lcoeff(k - j);
        r.set_lcoeff(k, acc);
    }
    return r;
}

inline TruncatedSeries operator*(const TruncatedSeries& a, Complex scale) {
    const auto w = detail::widen(scale);
    TruncatedSeries r(a.order());
    for (int k = 0; k <= a.order(); ++k) r.set_lcoeff(k, a.lcoeff(k) * w);
    return r;
}

inline TruncatedSeries operator*(Complex scale, const TruncatedSeries& a) { return a * scale; }

inline TruncatedSeries operator+(const TruncatedSeries& a, Complex c0) {
    TruncatedSeries r = a;
    r.set_lcoeff(0, r.lcoeff(0) + detail::widen(c0));
    return r;
}

inline TruncatedSeries operator+(Complex c0, const TruncatedSeries& a) { return a + c0; }

inline TruncatedSeries operator-(const TruncatedSeries& a, Complex c0) { return a + (-c0); }

inline TruncatedSeries operator-(Complex c0, const TruncatedSeries& a) { return (-a) + c0; }

/// Copy of s truncated (or zero-padded) to a new order.
inline TruncatedSeries resized(const TruncatedSeries& s, int order) {
    TruncatedSeries r(order);
    const int top = std::min(order, s.order());
    for (int k = 0; k <= top; ++k) r.set_lcoeff(k, s.lcoeff(k));
    return r;
}

/// z * s; the former top coefficient falls past the truncation degree.
inline TruncatedSeries shift_up(const TruncatedSeries& s) {
    TruncatedSeries r(s.order());
    for (int k = s.order(); k >= 1; --k) r.set_lcoeff(k, s.lcoeff(k - 1));
    return r;
}

/// s / z for series with vanishing constant term. The top coefficient of the
/// result is zero-filled: degree N of s/z would need the degree N+1 term of s.
inline TruncatedSeries shift_down(const TruncatedSeries& s) {
    if (std::abs(s.coeff(0)) > 1e-12)
        throw std::invalid_argument("shift_down: nonzero constant term");
    TruncatedSeries r(s.order());
    for (int k = 0; k < s.order(); ++k) r.set_lcoeff(k, s.lcoeff(k + 1));
    return r;
}

/// Termwise derivative. Exact through degree N-1; the degree-N slot is
/// zero-filled since it would require the degree N+1 coefficient of s.
inline TruncatedSeries derivative(const TruncatedSeries& s) {
    TruncatedSeries r(s.order());
    for (int k = 0; k < s.order(); ++k)
        r.set_lcoeff(k, static_cast<long double>(k + 1) * s.lcoeff(k + 1));
    return r;
}

/// Antiderivative with zero constant term. The degree N+1 coefficient of the
/// exact antiderivative (s_N / (N+1)) is discarded to keep the order fixed.
inline TruncatedSeries integrate0(const TruncatedSeries& s) {
    TruncatedSeries r(s.order());
    for (int k = 1; k <= s.order(); ++k)
        r.set_lcoeff(k, s.lcoeff(k - 1) / static_cast<long double>(k));
    return r;
}

/// outer(inner(z)) exact to the common order; requires inner(0) = 0.
inline TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
    detail::require_equal_orders(outer, inner, "compose");
    if (std::abs(inner.coeff(0)) != 0.0)
        throw std::invalid_argument("compose: inner series must have zero constant term");
    const int n = outer.order();
    // Horner accumulation: r <- r*inner + outer_k, from the top coefficient down.
    TruncatedSeries r = TruncatedSeries(n);
    r.set_lcoeff(0, outer.lcoeff(n));
    for (int k = n - 1; k >= 0; --k) {
        r = r * inner;
        r.set_lcoeff(0, r.lcoeff(0) + outer.lcoeff(k));
    }
    return r;
}

/// 1/s for series with nonzero constant term.
inline TruncatedSeries reciprocal(const TruncatedSeries& s) {
    if (std::abs(s.coeff(0)) == 0.0)
        throw std::invalid_argument("reciprocal: zero constant term");
    const int n = s.order();
    TruncatedSeries r(n);
    const detail::LongComplex inv0 = 1.0L / s.lcoeff(0);
    r.set_lcoeff(0, inv0);
    for (int k = 1; k <= n; ++k) {
        detail::LongComplex acc(0.0L, 0.0L);
        for (int j = 1; j <= k; ++j) acc += s.lcoeff(j) * r.lcoeff(k - j);
        r.set_lcoeff(k, -inv0 * acc);
    }
    return r;
}

/// exp(s) for s with zero constant term, via (exp s)' = s' * exp s:
///   e_k = (1/k) * sum_{j=1..k} j * s_j * e_{k-j},  e_0 = 1.
inline TruncatedSeries exp_series(const TruncatedSeries& s) {
    if (std::abs(s.coeff(0)) != 0.0)
        throw std::invalid_argument("exp_series: constant term must be zero");
    const int n = s.order();
    TruncatedSeries e(n);
    e.set_lcoeff(0, 1.0L);
    for (int k = 1; k <= n; ++k) {
        detail::LongComplex acc(0.0L, 0.0L);
        for (int j = 1; j <= k; ++j)
            acc += static_cast<long double>(j) * s.lcoeff(j) * e.lcoeff(k - j);
        e.set_lcoeff(k, acc / static_cast<long double>(k));
    }
    return e;
}

/// log(s) for s with constant term 1, via (log s)' = s'/s:
///   l_k = s_k - (1/k) * sum_{j=1..k-1} j * l_j * s_{k-j},  l_0 = 0.
inline TruncatedSeries log_series(const TruncatedSeries& s) {
    if (std::abs(s.coeff(0) - 1.0) > 1e-12)
        throw std::invalid_argument("log_series: constant term must be 1");
    const int n = s.order();
    TruncatedSeries l(n);
    for (int k = 1; k <= n; ++k) {
        detail::LongComplex acc = s.lcoeff(k) * static_cast<long double>(k);
        for (int j = 1; j < k; ++j)
            acc -= static_cast<long double>(j) * l.lcoeff(j) * s.lcoeff(k - j);
        l.set_lcoeff(k, acc / static_cast<long double>(k));
    }
    return l;
}

/// The square root with t(0) = +1, for s with constant term 1:
///   t_k = (s_k - sum_{j=1..k-1} t_j t_{k-j}) / 2.
inline TruncatedSeries sqrt_series(const TruncatedSeries& s) {
    if (std::abs(s.coeff(0) - 1.0) > 1e-12)
        throw std::invalid_argument("sqrt_series: constant term must be 1 (branch with value +1)");
    const int n = s.order();
    TruncatedSeries t(n);
    t.set_lcoeff(0, 1.0L);
    for (int k = 1; k <= n; ++k) {
        detail::LongComplex acc = s.lcoeff(k);
        for (int j = 1; j < k; ++j) acc -= t.lcoeff(j) * t.lcoeff(k - j);
        t.set_lcoeff(k, acc / 2.0L);
    }
    return t;
}

/// Compositional inverse: the series F with F(s(z)) = z through degree N.
/// Requires s = z + a2 z^2 + ...; solved degree by degree, adjusting F_m by
/// the degree-m defect of F(s(z)).
inline TruncatedSeries revert(const TruncatedSeries& s) {
    if (std::abs(s.coeff(0)) != 0.0 || std::abs(s.coeff(1) - 1.0) > 1e-12)
        throw std::invalid_argument("revert: series must be normalized (c0 = 0, c1 = 1)");
    const int n = s.order();
    TruncatedSeries f = TruncatedSeries::identity(n);
    for (int m = 2; m <= n; ++m) {
        const TruncatedSeries g = compose(f, s);
        f.set_lcoeff(m, f.lcoeff(m) - g.lcoeff(m));
    }
    return f;
}

/// Horner evaluation of the truncated polynomial at a point.
inline Complex evaluate(const TruncatedSeries& s, Complex z) {
    const detail::LongComplex zl = detail::widen(z);
    detail::LongComplex acc = s.lcoeff(s.order());
    for (int k = s.order() - 1; k >= 0; --k) acc = acc * zl + s.lcoeff(k);
    return detail::narrow(acc);
}

}  // namespace gammadiff
