#include <gammadiff/report.hpp>
#include <gammadiff/verify.hpp>

#include <doctest.h>

#include <map>

using namespace gammadiff;

namespace {

const VerificationReport& cached_report(const std::string& id) {
    static std::map<std::string, VerificationReport> cache;
    auto it = cache.find(id);
    if (it == cache.end()) {
        VerifyOptions opt;
        opt.grid = 64;
        it = cache.emplace(id, verify_theorem(*find_theorem(id), opt)).first;
    }
    return it->second;
}

bool has_check(const VerificationReport& report, const std::string& name, bool* pass = nullptr) {
    for (const auto& check : report.checks)
        if (check.name == name) {
            if (pass) *pass = check.pass;
            return true;
        }
    return false;
}

}  // namespace

TEST_CASE("theorem table: claimed constants") {
    REQUIRE(theorem_table().size() == 4);
    CHECK(find_theorem("1.1")->claimed_upper == 0.5);
    CHECK(find_theorem("1.2")->claimed_upper == 1.0 / 6.0);
    CHECK(find_theorem("1.3")->claimed_upper == 0.25);
    CHECK(*find_theorem("1.3")->claimed_lower == -1.0 / std::sqrt(10.0));
    CHECK(find_theorem("1.4")->claimed_upper == 1.0 / 12.0);
    CHECK(*find_theorem("1.4")->claimed_lower == -4.0 / 21.0);
    CHECK(find_theorem("2.7") == nullptr);
}

TEST_CASE("verify 1.1: closed form is exactly 1/2 and f1 attains it") {
    const auto& report = cached_report("1.1");
    CHECK(report.pass);
    CHECK(report.closed_form_upper == 0.5);
    CHECK(std::abs(report.oracle_upper - 0.5) < 1e-6);
    REQUIRE(!report.extremal_values.empty());
    CHECK(report.extremal_values[0].label == "f1");
    CHECK(std::abs(report.extremal_values[0].value - 0.5) < 1e-12);
    // flagged but not failed: the printed scale factor and the f1 generator
    CHECK(report.discrepancies.size() == 2);
}

TEST_CASE("verify 1.2: bound 1/6") {
    const auto& report = cached_report("1.2");
    CHECK(report.pass);
    CHECK(report.closed_form_upper == 1.0 / 6.0);
    CHECK(std::abs(report.oracle_upper - 1.0 / 6.0) < 1e-6);
    CHECK(report.discrepancies.size() == 1);
}

TEST_CASE("verify 1.3: two-sided bounds with f3 and f4") {
    const auto& report = cached_report("1.3");
    CHECK(report.pass);
    CHECK(report.closed_form_upper == 0.25);
    CHECK(std::abs(report.closed_form_lower - (-1.0 / std::sqrt(10.0))) < 1e-15);
    CHECK(std::abs(report.oracle_lower - (-1.0 / std::sqrt(10.0))) < 1e-5);
    bool pass = false;
    CHECK(has_check(report, "extremal_f3_attains_upper", &pass));
    CHECK(pass);
    CHECK(has_check(report, "extremal_f4_attains_lower", &pass));
    CHECK(pass);
    CHECK(report.discrepancies.size() == 1);
}

TEST_CASE("verify 1.4: the claimed parameter is flagged, the search point attains") {
    const auto& report = cached_report("1.4");
    CHECK(report.pass);
    CHECK(std::abs(report.closed_form_lower - (-4.0 / 21.0)) < 1e-15);
    CHECK(std::abs(report.oracle_lower - (-4.0 / 21.0)) < 1e-4);
    // oracle attains at c1 = 12/7, c2 = 2
    CHECK(std::abs(report.oracle_minus.c1 - 12.0 / 7.0) < 1e-5);
    CHECK(std::abs(report.oracle_minus.c2 - 2.0) < 1e-5);

    // both f6 values are reported
    bool found_default = false, found_claimed = false;
    for (const auto& nv : report.extremal_values) {
        if (nv.label == "f6") {
            CHECK(std::abs(nv.value - (-4.0 / 21.0)) < 1e-12);
            found_default = true;
        }
        if (nv.label == "f6(A=4/7)") {
            CHECK(std::abs(nv.value - (-3.0 / 28.0)) < 1e-12);
            found_claimed = true;
        }
    }
    CHECK(found_default);
    CHECK(found_claimed);
    CHECK(report.discrepancies.size() == 2);
}

TEST_CASE("report soundness: oracle values never exceed closed forms") {
    for (const auto& id : {"1.1", "1.2", "1.3", "1.4"}) {
        const auto& report = cached_report(id);
        CHECK(report.oracle_upper <= report.closed_form_upper + 1e-9);
        CHECK(report.oracle_lower >= report.closed_form_lower - 1e-9);
        bool pass = false;
        CHECK(has_check(report, "sampled_values_within_bounds", &pass));
        CHECK(pass);
        CHECK(has_check(report, "pipeline_consistency", &pass));
        CHECK(pass);
    }
}

TEST_CASE("search_class: extrema match the scale-adjusted oracle and closed forms") {
    for (const auto& spec : theorem_table()) {
        const auto& report = cached_report(spec.id);
        const auto search = search_class(spec.cls, 64);
        CHECK(std::abs(search.max_value - report.oracle_upper) < 1e-6);
        CHECK(std::abs(search.min_value - report.oracle_lower) < 1e-6);
        CHECK(std::abs(search.max_value - report.closed_form_upper) < 1e-6);
        CHECK(std::abs(search.min_value - report.closed_form_lower) < 1e-6);
    }
}

TEST_CASE("search_class known extrema") {
    CHECK(std::abs(search_class(FunctionClass::starlike_symmetric, 48).max_value - 0.5) < 1e-6);
    CHECK(std::abs(search_class(FunctionClass::convex_symmetric, 48).max_value - 1.0 / 6.0) <
          1e-6);
    CHECK(std::abs(search_class(FunctionClass::starlike_lune, 48).min_value +
                   1.0 / std::sqrt(10.0)) < 1e-6);
}

TEST_CASE("exit code policy") {
    std::vector<VerificationReport> reports = {cached_report("1.1")};
    CHECK(report_exit_code(reports, false) == 2);  // known notes present
    CHECK(report_exit_code(reports, true) == 1);   // strict escalates

    VerificationReport clean;
    clean.pass = true;
    CHECK(report_exit_code({clean}, false) == 0);

    VerificationReport failed;
    failed.pass = false;
    CHECK(report_exit_code({failed}, false) == 1);
}

TEST_CASE("json report: deterministic, versioned, 17-digit numbers") {
    VerifyOptions opt;
    opt.grid = 64;
    const std::vector<VerificationReport> reports = {verify_theorem(*find_theorem("1.3"), opt)};
    const std::string a = report_json(reports, opt, false);
    const std::vector<VerificationReport> reports2 = {verify_theorem(*find_theorem("1.3"), opt)};
    const std::string b = report_json(reports2, opt, false);
    CHECK(a == b);
    CHECK(a.find("\"schema\":1") != std::string::npos);
    CHECK(a.find("\"id\":\"1.3\"") != std::string::npos);
    CHECK(a.find("\"exit_code\":2") != std::string::npos);
    // -1/sqrt(10) at 17 significant digits
    CHECK(a.find("-0.31622776601683794") != std::string::npos);
}

TEST_CASE("csv report shape") {
    VerifyOptions opt;
    opt.grid = 64;
    const std::vector<VerificationReport> reports = {cached_report("1.1")};
    const std::string csv = report_csv(reports);
    CHECK(csv.rfind("theorem,check,value,reference,tolerance,pass\r\n", 0) == 0);
    CHECK(csv.find("1.1,closed_form_upper_matches_claim,0.5,0.5,") != std::string::npos);
}

TEST_CASE("text report mentions every check and note") {
    const auto& report = cached_report("1.4");
    const std::string text = report_text({report}, false);
    CHECK(text.find("[PASS] closed_form_upper_matches_claim") != std::string::npos);
    CHECK(text.find("[NOTE] claimed extremal parameter A = 4/7") != std::string::npos);
    CHECK(text.find("summary: 0 failed check(s)") != std::string::npos);
}
