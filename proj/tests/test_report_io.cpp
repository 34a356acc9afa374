#include <doctest.h>

#include <fracineq/report_io.hpp>

using namespace fracineq;

TEST_CASE("scientific formatting is lossless and fixed-width") {
    CHECK(fmt_sci(1.0) == "1.0000000000000000e+00");
    CHECK(fmt_sci(-0.1) == "-1.0000000000000001e-01");
    for (double v : {1.0 / 3.0, 2.0e-13, -4.56e22, 0.42484391179990375}) {
        const double back = std::strtod(fmt_sci(v).c_str(), nullptr);
        CHECK(back == v);
    }
}

TEST_CASE("csv quoting") {
    CHECK(csv_quote("plain") == "plain");
    CHECK(csv_quote("a,b") == "\"a,b\"");
    CHECK(csv_quote("say \"hi\"") == "\"say \"\"hi\"\"\"");
}

TEST_CASE("report serializes to a stable JSON record") {
    const auto rep = check_hermite_hadamard(make_quadratic(1, 0, 0), FracOrder(0.5),
                                            Interval(0, 1), QuadratureConfig{});
    const nlohmann::json j = report_to_json(rep);
    CHECK(j["schema"] == k_report_schema);
    CHECK(j["inequality"] == "hh");
    CHECK(j["verdict"] == "holds");
    CHECK(j["terms"].size() == 3);
    CHECK(j["slacks"].size() == 2);
    CHECK(j["alpha"] == 0.5);
    // identical checks serialize to identical bytes
    const auto rep2 = check_hermite_hadamard(make_quadratic(1, 0, 0), FracOrder(0.5),
                                             Interval(0, 1), QuadratureConfig{});
    CHECK(report_to_json(rep2).dump() == j.dump());
}

TEST_CASE("sweep rows carry all terms and pad missing columns") {
    const auto hh = check_hermite_hadamard(make_quadratic(1, 0, 0), FracOrder(0.5), Interval(0, 1),
                                           QuadratureConfig{});
    const std::string row = sweep_csv_row(hh, 42, "quadratic");
    // 15 columns -> 14 commas
    CHECK(std::count(row.begin(), row.end(), ',') == 14);
    CHECK(row.find("hh,42,quadratic,") == 0);

    const auto da = check_dragomir_agarwal(make_quadratic(1, 0, 0), FracOrder(0.5), Interval(0, 1),
                                           QuadratureConfig{});
    const std::string darow = sweep_csv_row(da, 7, "quadratic");
    CHECK(std::count(darow.begin(), darow.end(), ',') == 14);
    CHECK(darow.find(",,") != std::string::npos);  // padded term2/slack1

    const std::string flagged = sweep_csv_row(hh, 42, "quadratic", "certificate_mismatch");
    CHECK(flagged.find("certificate_mismatch") != std::string::npos);
}
