#pragma once

#include <gammadiff/caratheodory.hpp>
#include <gammadiff/psi.hpp>
#include <gammadiff/truncated_series.hpp>

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace gammadiff {

/// The four function classes under study. Each one transfers Caratheodory
/// data (c1, c2) to the function coefficients (a2, a3) through its defining
/// relation, and reduces |Gamma2| - |Gamma1| to scale * Psi_plus(c1, c2).
enum class FunctionClass {
    starlike_symmetric,  // Re[ 2 z f' / (f(z) - f(-z)) ] > 0
    convex_symmetric,    // Re[ 2 (z f')' / (f(z) - f(-z))' ] > 0
    starlike_lune,       // z f'/f ranges in |w^2 - 1| <= 2|w|
    convex_lune,         // 1 + z f''/f' ranges in |w^2 - 1| <= 2|w|
};

struct ClassSpec {
    FunctionClass tag;
    const char* name;
    double psi_scale;
    PsiCoeffs psi;
    bool lune;
    bool convex;
};

inline const ClassSpec& class_spec(FunctionClass cls) {
    static const ClassSpec table[] = {
        {FunctionClass::starlike_symmetric, "starlike_symmetric", 1.0 / 16.0,
         PsiCoeffs(4.0, 3.0, -4.0), false, false},
        {FunctionClass::convex_symmetric, "convex_symmetric", 1.0 / 192.0,
         PsiCoeffs(24.0, 9.0, -16.0), false, true},
        {FunctionClass::starlike_lune, "starlike_lune", 1.0 / 32.0, PsiCoeffs(8.0, 5.0, -4.0),
         true, false},
        {FunctionClass::convex_lune, "convex_lune", 1.0 / 192.0, PsiCoeffs(24.0, 7.0, -8.0), true,
         true},
    };
    return table[static_cast<size_t>(cls)];
}

inline const char* class_name(FunctionClass cls) { return class_spec(cls).name; }

inline std::optional<FunctionClass> class_from_name(const std::string& name) {
    for (const FunctionClass cls :
         {FunctionClass::starlike_symmetric, FunctionClass::convex_symmetric,
          FunctionClass::starlike_lune, FunctionClass::convex_lune})
        if (name == class_spec(cls).name) return cls;
    return std::nullopt;
}

/// (a2, a3) from the first two coefficients of the generating function p.
inline std::pair<Complex, Complex> coeffs_from_p(FunctionClass cls, Complex c1, Complex c2) {
    switch (cls) {
        case FunctionClass::starlike_symmetric:
            return {0.5 * c1, 0.5 * c2};
        case FunctionClass::convex_symmetric:
            return {0.25 * c1, c2 / 6.0};
        case FunctionClass::starlike_lune:
            return {0.5 * c1, c1 * c1 / 16.0 + 0.25 * c2};
        case FunctionClass::convex_lune:
            return {0.25 * c1, c1 * c1 / 48.0 + c2 / 12.0};
    }
    throw std::logic_error("coeffs_from_p: unreachable");
}

namespace detail {

// 2 z f'(z) = p(z) (f(z) - f(-z)); matching z^n with g_m = 2 a_m (m odd):
//   odd n:  (2n - 2) a_n = sum_{j=1..n-1} p_j g_{n-j}
//   even n:      2n a_n  = sum_{j=1..n-1} p_j g_{n-j}
inline TruncatedSeries solve_starlike_symmetric(const TruncatedSeries& p, int order) {
    TruncatedSeries f = TruncatedSeries::identity(order);
    for (int n = 2; n <= order; ++n) {
        LongComplex acc(0.0L, 0.0L);
        for (int j = 1; j <= n - 1; ++j) {
            const int m = n - j;
            if (m % 2 == 1) acc += widen(p.coeff(j)) * 2.0L * f.lcoeff(m);
        }
        const long double denom = (n % 2 == 1) ? 2.0L * n - 2.0L : 2.0L * n;
        f.set_lcoeff(n, acc / denom);
    }
    return f;
}

// 2 (z f')' = p(z) (f(z) - f(-z))'; matching z^m with h_k = 2 (k+1) a_{k+1}
// (k even):
//   even m:  (2(m+1)^2 - 2(m+1)) a_{m+1} = sum_{j=1..m} p_j h_{m-j}
//   odd m:            2(m+1)^2   a_{m+1} = sum_{j=1..m} p_j h_{m-j}
inline TruncatedSeries solve_convex_symmetric(const TruncatedSeries& p, int order) {
    TruncatedSeries f = TruncatedSeries::identity(order);
    for (int n = 2; n <= order; ++n) {
        const int m = n - 1;
        LongComplex acc(0.0L, 0.0L);
        for (int j = 1; j <= m; ++j) {
            const int k = m - j;
            if (k % 2 == 0) acc += widen(p.coeff(j)) * 2.0L * (k + 1.0L) * f.lcoeff(k + 1);
        }
        const long double nn = static_cast<long double>(n);
        const long double denom = (m % 2 == 0) ? 2.0L * nn * nn - 2.0L * nn : 2.0L * nn * nn;
        f.set_lcoeff(n, acc / denom);
    }
    return f;
}

// Lune defining relation v(z) = w(z) + sqrt(1 + w(z)^2) with w = (p-1)/(p+1):
// log f' or log(f/z) integrates (v - 1)/z term by term.
inline TruncatedSeries lune_log_derivative_integral(const TruncatedSeries& p) {
    const TruncatedSeries w = schwarz_from_p(p);
    const TruncatedSeries v = w + sqrt_series(w * w + 1.0);
    TruncatedSeries integral(p.order());
    for (int k = 1; k <= p.order(); ++k)
        integral.set_lcoeff(k, v.lcoeff(k) / static_cast<long double>(k));
    return integral;
}

}  // namespace detail

/// The normalized solution f (a1 = 1) of the class's defining relation driven
/// by p, exact through the requested order. The symmetric-point classes solve
/// a triangular linear recurrence; the lune classes exponentiate the
/// termwise-integrated relation.
inline TruncatedSeries series_from_p(FunctionClass cls, const TruncatedSeries& p, int order) {
    if (order < 3 || order > p.order())
        throw std::invalid_argument("series_from_p: need 3 <= order <= p.order()");
    if (std::abs(p.coeff(0) - 1.0) > 1e-12)
        throw std::invalid_argument("series_from_p: constant term of p must be 1");
    const TruncatedSeries pr = resized(p, order);
    switch (cls) {
        case FunctionClass::starlike_symmetric:
            return detail::solve_starlike_symmetric(pr, order);
        case FunctionClass::convex_symmetric:
            return detail::solve_convex_symmetric(pr, order);
        case FunctionClass::starlike_lune:
            // z f'/f = v  =>  f = z exp(int (v - 1)/z)
            return shift_up(exp_series(detail::lune_log_derivative_integral(pr)));
        case FunctionClass::convex_lune:
            // 1 + z f''/f' = v  =>  f' = exp(int (v - 1)/z), integrated once
            return integrate0(exp_series(detail::lune_log_derivative_integral(pr)));
    }
    throw std::logic_error("series_from_p: unreachable");
}

inline TruncatedSeries series_from_p(FunctionClass cls, const TruncatedSeries& p) {
    return series_from_p(cls, p, p.order());
}

/// Named extremal functions attaining the sharp bounds.
enum class ExtremalId { f1, f2, f3, f4, f5, f6 };

inline const char* extremal_name(ExtremalId id) {
    static const char* names[] = {"f1", "f2", "f3", "f4", "f5", "f6"};
    return names[static_cast<size_t>(id)];
}

inline std::optional<ExtremalId> extremal_from_name(const std::string& name) {
    for (const ExtremalId id : {ExtremalId::f1, ExtremalId::f2, ExtremalId::f3, ExtremalId::f4,
                                ExtremalId::f5, ExtremalId::f6})
        if (name == extremal_name(id)) return id;
    return std::nullopt;
}

inline FunctionClass extremal_class(ExtremalId id) {
    switch (id) {
        case ExtremalId::f1: return FunctionClass::starlike_symmetric;
        case ExtremalId::f2: return FunctionClass::convex_symmetric;
        case ExtremalId::f3: return FunctionClass::starlike_lune;
        case ExtremalId::f4: return FunctionClass::starlike_lune;
        case ExtremalId::f5: return FunctionClass::convex_lune;
        case ExtremalId::f6: return FunctionClass::convex_lune;
    }
    throw std::logic_error("extremal_class: unreachable");
}

/// Parameter of the rational generator (1 + 2Az + z^2)/(1 - z^2) attaining
/// the lower bound for the starlike lune class.
inline const double extremal_f4_param = 2.0 / std::sqrt(10.0);

/// Default generator parameter for f6. The claimed constant 4/7 does not
/// attain the claimed lower bound -4/21; the coefficient-body search locates
/// the attaining point at A = 6/7 (c1 = 12/7, c2 = 2). The parameter stays
/// adjustable so both values can be reported side by side.
inline constexpr double extremal_f6_default_param = 6.0 / 7.0;

/// Series of the named extremal function. `param` overrides the generator
/// parameter A for f6 (and is ignored elsewhere).
inline TruncatedSeries extremal(ExtremalId id, int order,
                                std::optional<double> param = std::nullopt) {
    switch (id) {
        case ExtremalId::f1:
            // z/(1-z^2); generated by (1+z^2)/(1-z^2)
            return series_from_p(FunctionClass::starlike_symmetric, rational_p(0.0, order));
        case ExtremalId::f2:
            // z + z^3/3 + z^5/5 + ...
            return series_from_p(FunctionClass::convex_symmetric, rational_p(0.0, order));
        case ExtremalId::f3:
            return series_from_p(FunctionClass::starlike_lune, rational_p(0.0, order));
        case ExtremalId::f4:
            return series_from_p(FunctionClass::starlike_lune,
                                 rational_p(extremal_f4_param, order));
        case ExtremalId::f5:
            return series_from_p(FunctionClass::convex_lune, rational_p(0.0, order));
        case ExtremalId::f6:
            return series_from_p(FunctionClass::convex_lune,
                                 rational_p(param.value_or(extremal_f6_default_param), order));
    }
    throw std::logic_error("extremal: unreachable");
}

/// Which lune condition to sample.
enum class LuneCondition { starlike, convex };

struct LuneMembership {
    bool inside;
    double worst_margin;  // max over samples of |v^2 - 1| - 2|v|
    double tolerance;     // base tolerance plus the series truncation estimate
    double radius;
    int samples;
};

/// Samples v(z) = z f'/f (or 1 + z f''/f') on |z| = radius from the truncated
/// series of f and tests the lune condition |v^2 - 1| <= 2|v| + tol. The
/// tolerance adds |c_N| radius^N N as an estimate of the series truncation
/// error, separating genuine boundary violations from truncation noise.
inline LuneMembership lune_membership(const TruncatedSeries& f, LuneCondition cond,
                                      double radius = 0.99, int samples = 720,
                                      double base_tol = 1e-9) {
    if (!(radius > 0.0 && radius < 1.0))
        throw std::invalid_argument("lune_membership: radius must lie in (0, 1)");
    if (samples < 8) throw std::invalid_argument("lune_membership: need at least 8 samples");
    if (std::abs(f.coeff(0)) > 1e-12 || std::abs(f.coeff(1) - 1.0) > 1e-12)
        throw std::invalid_argument("lune_membership: series must be normalized");

    const int n = f.order();
    const TruncatedSeries df = derivative(f);
    // starlike: v = f' / (f/z); convex: v = 1 + z f''/f'
    const TruncatedSeries num = cond == LuneCondition::starlike ? df : derivative(df);
    const TruncatedSeries den = cond == LuneCondition::starlike ? shift_down(f) : df;

    double worst = -std::numeric_limits<double>::infinity();
    for (int k = 0; k < samples; ++k) {
        const Complex z = std::polar(radius, 2.0 * M_PI * k / samples);
        const Complex d = evaluate(den, z);
        if (std::abs(d) < 1e-9)
            throw std::runtime_error("lune_membership: degenerate evaluation (denominator ~ 0) at "
                                     "theta = " + std::to_string(2.0 * M_PI * k / samples));
        const Complex v = cond == LuneCondition::starlike ? evaluate(num, z) / d
                                                          : 1.0 + z * evaluate(num, z) / d;
        worst = std::max(worst, std::abs(v * v - 1.0) - 2.0 * std::abs(v));
    }

    const double truncation = std::abs(f.coeff(n)) * std::pow(radius, n) * n;
    const double tol = base_tol + truncation;
    return {worst <= tol, worst, tol, radius, samples};
}

}  // namespace gammadiff
