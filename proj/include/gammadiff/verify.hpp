#pragma once

#include <gammadiff/classes.hpp>
#include <gammadiff/functionals.hpp>
#include <gammadiff/json_writer.hpp>
#include <gammadiff/psi.hpp>

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace gammadiff {

/// A claimed sharp-bound statement to verify: the class, the claimed
/// endpoint constants, and the extremal functions said to attain them.
struct TheoremSpec {
    std::string id;
    FunctionClass cls;
    double claimed_upper;
    std::optional<double> claimed_lower;
    ExtremalId extremal_upper;
    std::optional<ExtremalId> extremal_lower;
};

inline const std::vector<TheoremSpec>& theorem_table() {
    static const std::vector<TheoremSpec> table = {
        {"1.1", FunctionClass::starlike_symmetric, 0.5, std::nullopt, ExtremalId::f1,
         std::nullopt},
        {"1.2", FunctionClass::convex_symmetric, 1.0 / 6.0, std::nullopt, ExtremalId::f2,
         std::nullopt},
        {"1.3", FunctionClass::starlike_lune, 0.25, -1.0 / std::sqrt(10.0), ExtremalId::f3,
         ExtremalId::f4},
        {"1.4", FunctionClass::convex_lune, 1.0 / 12.0, -4.0 / 21.0, ExtremalId::f5,
         ExtremalId::f6},
    };
    return table;
}

inline const TheoremSpec* find_theorem(const std::string& id) {
    for (const auto& spec : theorem_table())
        if (spec.id == id) return &spec;
    return nullptr;
}

struct CheckResult {
    std::string name;
    double value;
    double reference;
    double tolerance;
    bool pass;
};

struct NamedValue {
    std::string label;
    double value;
};

struct VerifyOptions {
    int grid = 96;
    int refine = 40;
    double tol_closed = 1e-6;
    double tol_oracle = 1e-4;
    std::uint64_t seed = 12345;
    int sample_count = 2000;
    int series_order = 12;
};

struct VerificationReport {
    std::string theorem;
    std::string class_name;
    double scale = 0.0;
    PsiCoeffs psi = PsiCoeffs(1.0, 0.0, 0.0);
    double claimed_upper = 0.0;
    std::optional<double> claimed_lower;
    double closed_form_upper = 0.0;
    double closed_form_lower = 0.0;
    BodyMaximum oracle_plus;
    BodyMaximum oracle_minus;
    double oracle_upper = 0.0;
    double oracle_lower = 0.0;
    std::vector<NamedValue> extremal_values;
    std::vector<CheckResult> checks;
    std::vector<std::string> discrepancies;
    bool pass = false;
};

namespace detail {

inline double extremal_value_via_closed_form(const TruncatedSeries& f) {
    return moduli_diff(gamma_pair_of(f));
}

inline double extremal_value_via_series(const TruncatedSeries& f) {
    const auto gammas = inv_log_coeffs_series(f, 2);
    return moduli_diff({gammas[0], gammas[1]});
}

}  // namespace detail

/// Verify one claimed bound end to end: closed-form reduction, brute-force
/// oracle, extremal functions, and sampled soundness. Known internal
/// inconsistencies of the claims are flagged as discrepancies with both
/// values rather than failing the run.
inline VerificationReport verify_theorem(const TheoremSpec& spec,
                                         const VerifyOptions& opt = {}) {
    const ClassSpec& cls = class_spec(spec.cls);
    VerificationReport report;
    report.theorem = spec.id;
    report.class_name = cls.name;
    report.scale = cls.psi_scale;
    report.psi = cls.psi;
    report.claimed_upper = spec.claimed_upper;
    report.claimed_lower = spec.claimed_lower;

    report.closed_form_upper = cls.psi_scale * psi_plus_bound(cls.psi);
    report.closed_form_lower = -cls.psi_scale * psi_minus_bound(cls.psi);
    report.oracle_plus = oracle_max(cls.psi, PsiSign::plus, opt.grid, opt.refine);
    report.oracle_minus = oracle_max(cls.psi, PsiSign::minus, opt.grid, opt.refine);
    report.oracle_upper = cls.psi_scale * report.oracle_plus.value;
    report.oracle_lower = -cls.psi_scale * report.oracle_minus.value;

    const auto push_check = [&report](std::string name, double value, double reference,
                                      double tolerance, bool pass) {
        report.checks.push_back({std::move(name), value, reference, tolerance, pass});
    };

    // closed form against the claim
    push_check("closed_form_upper_matches_claim", report.closed_form_upper, spec.claimed_upper,
               opt.tol_closed,
               std::abs(report.closed_form_upper - spec.claimed_upper) <= opt.tol_closed);

    // oracle against the claim and against the closed form (soundness)
    push_check("oracle_upper_reaches_claim", report.oracle_upper, spec.claimed_upper,
               opt.tol_oracle, report.oracle_upper >= spec.claimed_upper - opt.tol_oracle);
    push_check("oracle_upper_sound", report.oracle_upper, report.closed_form_upper, 1e-9,
               report.oracle_upper <= report.closed_form_upper + 1e-9);
    push_check("oracle_lower_sound", report.oracle_lower, report.closed_form_lower, 1e-9,
               report.oracle_lower >= report.closed_form_lower - 1e-9);

    // extremal functions, each computed by the closed-form route and
    // cross-checked against the series pipeline
    double worst_pipeline_diff = 0.0;
    const auto eval_extremal = [&](ExtremalId id, std::optional<double> param,
                                   const std::string& label) {
        const TruncatedSeries f = extremal(id, opt.series_order, param);
        const double closed = detail::extremal_value_via_closed_form(f);
        const double series = detail::extremal_value_via_series(f);
        worst_pipeline_diff = std::max(worst_pipeline_diff, std::abs(closed - series));
        report.extremal_values.push_back({label, closed});
        return closed;
    };

    const double upper_attained =
        eval_extremal(spec.extremal_upper, std::nullopt, extremal_name(spec.extremal_upper));
    push_check(std::string("extremal_") + extremal_name(spec.extremal_upper) + "_attains_upper",
               upper_attained, spec.claimed_upper, opt.tol_closed,
               std::abs(upper_attained - spec.claimed_upper) <= opt.tol_closed);

    if (spec.claimed_lower) {
        push_check("closed_form_lower_matches_claim", report.closed_form_lower,
                   *spec.claimed_lower, opt.tol_closed,
                   std::abs(report.closed_form_lower - *spec.claimed_lower) <= opt.tol_closed);
        push_check("oracle_lower_reaches_claim", report.oracle_lower, *spec.claimed_lower,
                   opt.tol_oracle, report.oracle_lower <= *spec.claimed_lower + opt.tol_oracle);
        const double lower_attained = eval_extremal(*spec.extremal_lower, std::nullopt,
                                                    extremal_name(*spec.extremal_lower));
        push_check(std::string("extremal_") + extremal_name(*spec.extremal_lower) +
                       "_attains_lower",
                   lower_attained, *spec.claimed_lower, opt.tol_closed,
                   std::abs(lower_attained - *spec.claimed_lower) <= opt.tol_closed);
    }

    // sampled soundness: every body point's functional value must respect
    // both closed-form bounds
    {
        std::mt19937_64 rng(opt.seed * 1000003ULL +
                            static_cast<std::uint64_t>(spec.id.back() - '0'));
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        double worst_excess = 0.0;
        for (int it = 0; it < opt.sample_count; ++it) {
            const double r1 = std::sqrt(unit(rng)), t1 = 2.0 * M_PI * unit(rng);
            const double r2 = std::sqrt(unit(rng)), t2 = 2.0 * M_PI * unit(rng);
            const auto [c1, c2] =
                to_coeffs({std::polar(r1, t1), std::polar(r2, t2)});
            const auto [a2, a3] = coeffs_from_p(spec.cls, c1, c2);
            const double v = moduli_diff(inv_log_coeffs(a2, a3));
            worst_excess = std::max(worst_excess, v - report.closed_form_upper);
            worst_excess = std::max(worst_excess, report.closed_form_lower - v);
        }
        push_check("sampled_values_within_bounds", worst_excess, 0.0, 1e-9,
                   worst_excess <= 1e-9);
    }

    // the f6 parameter question: evaluate the claimed constant as well
    if (spec.id == "1.4") {
        const double claimed_param_value = eval_extremal(ExtremalId::f6, 4.0 / 7.0, "f6(A=4/7)");
        report.discrepancies.push_back(
            "claimed extremal parameter A = 4/7 gives |Gamma2| - |Gamma1| = " +
            format_number(claimed_param_value, 12) + " (= -3/28), not the claimed lower bound " +
            format_number(*spec.claimed_lower, 12) +
            " (= -4/21); the coefficient-body search attains the bound at A = 6/7 "
            "(c1 = 12/7, c2 = 2), which f6 uses by default");
    }

    push_check("pipeline_consistency", worst_pipeline_diff, 0.0, 1e-10,
               worst_pipeline_diff <= 1e-10);

    // remaining known inconsistencies in the claims, reported with both values
    if (spec.id == "1.1") {
        report.discrepancies.push_back(
            "the claimed reduction prints both scale factors 1/16 and 1/48; the coefficient "
            "maps a2 = c1/2, a3 = c2/2 give 1/16, which reproduces the claimed bound 1/2 "
            "(1/48 would give 1/6)");
        report.discrepancies.push_back(
            "the claimed generator (1+z)/(1-z) for f1 actually generates z/(1-z); "
            "f1(z) = z/(1-z^2) is generated by (1+z^2)/(1-z^2), which is also a valid "
            "positive-real-part function, so the attained value 1/2 stands");
    } else if (spec.id == "1.2") {
        report.discrepancies.push_back(
            "the claimed reduction prints both scale factors 1/192 and 1/16; the coefficient "
            "maps a2 = c1/4, a3 = c2/6 give 1/192, which reproduces the claimed bound 1/6");
    } else if (spec.id == "1.3") {
        report.discrepancies.push_back(
            "the claimed extremal Schwarz function (Az+z^2)/(1-z^2) is unbounded on the disk; "
            "the transfer w = (p-1)/(p+1) applied to the claimed generator gives "
            "(Az+z^2)/(1+Az), which is used here and attains the claimed lower bound");
    } else if (spec.id == "1.4") {
        report.discrepancies.push_back(
            "the claimed reduction prints both scale factors 1/192 and 1/16; the coefficient "
            "maps a2 = c1/4, a3 = c1^2/48 + c2/12 give 1/192, which reproduces the claimed "
            "bound 1/12");
    }

    report.pass = true;
    for (const auto& check : report.checks) report.pass = report.pass && check.pass;
    return report;
}

/// Empirical extrema of |Gamma2| - |Gamma1| over the coefficient body,
/// computed through the direct route coeffs_from_p -> inv_log_coeffs ->
/// moduli_diff (no Psi reduction involved).
struct SearchResult {
    FunctionClass cls;
    double min_value = 0.0;
    double max_value = 0.0;
    BodyMaximum max_point;
    BodyMaximum min_point;  // point attaining the minimum; its .value is the minimum
};

inline SearchResult search_class(FunctionClass cls, int grid = 96, int refine = 40) {
    const auto direct_value = [cls](double x, Complex zeta2) {
        const auto [c1, c2] = to_coeffs({x, zeta2});
        const auto [a2, a3] = coeffs_from_p(cls, c1, c2);
        return moduli_diff(inv_log_coeffs(a2, a3));
    };
    SearchResult result;
    result.cls = cls;
    result.max_point = maximize_over_body(direct_value, grid, refine);
    result.max_value = result.max_point.value;
    result.min_point = maximize_over_body(
        [&direct_value](double x, Complex zeta2) { return -direct_value(x, zeta2); }, grid,
        refine);
    result.min_point.value = -result.min_point.value;
    for (double& v : result.min_point.round_values) v = -v;
    result.min_value = result.min_point.value;
    return result;
}

}  // namespace gammadiff
