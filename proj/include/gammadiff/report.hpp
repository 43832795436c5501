#pragma once

#include <gammadiff/json_writer.hpp>
#include <gammadiff/verify.hpp>

#include <string>
#include <vector>

namespace gammadiff {

/// 0: everything passed and nothing was flagged; 2: all checks passed but
/// known flagged discrepancies are present (1 under strict); 1: a check
/// failed.
inline int report_exit_code(const std::vector<VerificationReport>& reports, bool strict) {
    bool any_fail = false, any_note = false;
    for (const auto& report : reports) {
        any_fail = any_fail || !report.pass;
        any_note = any_note || !report.discrepancies.empty();
    }
    if (any_fail) return 1;
    if (any_note) return strict ? 1 : 2;
    return 0;
}

namespace detail {

inline void write_body_maximum(JsonWriter& json, const char* name, const BodyMaximum& point) {
    json.key(name).begin_object();
    json.key("value").value(point.value);
    json.key("x").value(point.x);
    json.key("rho").value(point.rho);
    json.key("phi").value(point.phi);
    json.key("c1_re").value(point.c1.real());
    json.key("c1_im").value(point.c1.imag());
    json.key("c2_re").value(point.c2.real());
    json.key("c2_im").value(point.c2.imag());
    json.end_object();
}

inline void write_report_object(JsonWriter& json, const VerificationReport& report) {
    json.begin_object();
    json.key("id").value(report.theorem);
    json.key("class").value(report.class_name);
    json.key("scale").value(report.scale);
    json.key("psi").begin_object();
    json.key("b1").value(report.psi.b1);
    json.key("b2_re").value(report.psi.b2.real());
    json.key("b2_im").value(report.psi.b2.imag());
    json.key("b3").value(report.psi.b3);
    json.key("b4").value(report.psi.b4());
    json.end_object();
    json.key("claimed").begin_object();
    json.key("upper").value(report.claimed_upper);
    if (report.claimed_lower) json.key("lower").value(*report.claimed_lower);
    json.end_object();
    json.key("closed_form").begin_object();
    json.key("upper").value(report.closed_form_upper);
    json.key("lower").value(report.closed_form_lower);
    json.end_object();
    json.key("oracle").begin_object();
    json.key("upper").value(report.oracle_upper);
    json.key("lower").value(report.oracle_lower);
    write_body_maximum(json, "plus", report.oracle_plus);
    write_body_maximum(json, "minus", report.oracle_minus);
    json.end_object();
    json.key("extremal_values").begin_array();
    for (const auto& nv : report.extremal_values) {
        json.begin_object();
        json.key("label").value(nv.label);
        json.key("value").value(nv.value);
        json.end_object();
    }
    json.end_array();
    json.key("checks").begin_array();
    for (const auto& check : report.checks) {
        json.begin_object();
        json.key("name").value(check.name);
        json.key("value").value(check.value);
        json.key("reference").value(check.reference);
        json.key("tolerance").value(check.tolerance);
        json.key("pass").value(check.pass);
        json.end_object();
    }
    json.end_array();
    json.key("discrepancies").begin_array();
    for (const auto& note : report.discrepancies) json.value(note);
    json.end_array();
    json.key("pass").value(report.pass);
    json.end_object();
}

}  // namespace detail

inline std::string report_json(const std::vector<VerificationReport>& reports,
                               const VerifyOptions& opt, bool strict) {
    JsonWriter json;
    json.begin_object();
    json.key("schema").value(1);
    json.key("generator").value("gammadiff");
    json.key("seed").value(static_cast<std::uint64_t>(opt.seed));
    json.key("grid").value(opt.grid);
    json.key("refine").value(opt.refine);
    json.key("tolerance_closed_form").value(opt.tol_closed);
    json.key("tolerance_oracle").value(opt.tol_oracle);
    json.key("theorems").begin_array();
    for (const auto& report : reports) detail::write_report_object(json, report);
    json.end_array();
    int notes = 0;
    bool all_pass = true;
    for (const auto& report : reports) {
        notes += static_cast<int>(report.discrepancies.size());
        all_pass = all_pass && report.pass;
    }
    json.key("all_checks_pass").value(all_pass);
    json.key("discrepancy_count").value(notes);
    json.key("exit_code").value(report_exit_code(reports, strict));
    json.end_object();
    return json.str() + "\n";
}

inline std::string report_csv(const std::vector<VerificationReport>& reports) {
    std::string out = "theorem,check,value,reference,tolerance,pass\r\n";
    for (const auto& report : reports)
        for (const auto& check : report.checks)
            out += report.theorem + "," + check.name + "," + format_number(check.value) + "," +
                   format_number(check.reference) + "," + format_number(check.tolerance) + "," +
                   (check.pass ? "true" : "false") + "\r\n";
    return out;
}

inline std::string report_text(const std::vector<VerificationReport>& reports, bool color) {
    const char* green = color ? "\x1b[32m" : "";
    const char* red = color ? "\x1b[31m" : "";
    const char* yellow = color ? "\x1b[33m" : "";
    const char* reset = color ? "\x1b[0m" : "";
    std::string out;
    for (const auto& report : reports) {
        out += "theorem " + report.theorem + " (" + report.class_name + ")\n";
        out += "  claimed:     upper " + format_number(report.claimed_upper, 12);
        if (report.claimed_lower) out += ", lower " + format_number(*report.claimed_lower, 12);
        out += "\n";
        out += "  closed form: upper " + format_number(report.closed_form_upper, 12) +
               ", lower " + format_number(report.closed_form_lower, 12) + "\n";
        out += "  oracle:      upper " + format_number(report.oracle_upper, 12) + ", lower " +
               format_number(report.oracle_lower, 12) + "\n";
        for (const auto& nv : report.extremal_values)
            out += "  extremal " + nv.label + " = " + format_number(nv.value, 12) + "\n";
        for (const auto& check : report.checks) {
            out += std::string("  [") + (check.pass ? green : red) +
                   (check.pass ? "PASS" : "FAIL") + reset + "] " + check.name + " (value " +
                   format_number(check.value, 9) + ", reference " +
                   format_number(check.reference, 9) + ", tol " +
                   format_number(check.tolerance, 3) + ")\n";
        }
        for (const auto& note : report.discrepancies)
            out += std::string("  [") + yellow + "NOTE" + reset + "] " + note + "\n";
    }
    int fails = 0, notes = 0;
    for (const auto& report : reports) {
        for (const auto& check : report.checks) fails += check.pass ? 0 : 1;
        notes += static_cast<int>(report.discrepancies.size());
    }
    out += "summary: " + std::to_string(fails) + " failed check(s), " + std::to_string(notes) +
           " flagged discrepancy note(s)\n";
    return out;
}

}  // namespace gammadiff
