#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "rcp/survey.hpp"

using namespace rcp;

namespace {

std::string render(const std::vector<SurveyRecord>& recs, ExportFormat fmt) {
    std::ostringstream os;
    write_records(os, recs, fmt);
    return os.str();
}

}  // namespace

TEST_CASE("survey records") {
    const auto one = scan_range(1, 1, true);
    REQUIRE(one.size() == 1);
    CHECK(one[0].factor_string == "1");
    CHECK(one[0].degree == 0);
    CHECK(one[0].height == 1);
    CHECK(*one[0].vn == std::vector<Coeff>{1});

    const auto r561 = scan_range(561, 561, true)[0];
    CHECK(r561.factor_string == "3*11*17");
    CHECK(r561.degree == 241);
    CHECK(r561.height == 2);
    CHECK(r561.first_extremal_k == 17);
    CHECK(r561.gaps.empty());

    const auto r105 = scan_range(105, 105, false)[0];
    CHECK(r105.height == 1);
    CHECK_FALSE(r105.vn.has_value());

    // non-squarefree n: indices scale by n / rad(n) and 0 joins V_n
    const auto r1683 = survey_record(1683, true);
    CHECK(r1683.first_extremal_k == 17 * 3);
    CHECK(r1683.height == 2);
    CHECK(*r1683.vn == std::vector<Coeff>{-2, -1, 0, 1, 2});
}

TEST_CASE("scan output is independent of the job count") {
    const auto a = scan_range(1, 1200, true, 1);
    const auto b = scan_range(1, 1200, true, 4);
    CHECK(a == b);
    CHECK(render(a, ExportFormat::Csv) == render(b, ExportFormat::Csv));
    CHECK(render(a, ExportFormat::Jsonl) == render(b, ExportFormat::Jsonl));
    for (std::size_t i = 0; i < a.size(); ++i) REQUIRE(a[i].n == i + 1);
}

TEST_CASE("minimal table") {
    const auto t = minimal_table(2, 561);
    REQUIRE(t.rows.size() == 2);
    CHECK(t.rows[0] == TableRow{1, 1, 0, 0, 1});
    CHECK(t.rows[1] == TableRow{2, 561, 241, 17, -2});
    try {
        minimal_table(3, 600);
        FAIL("expected IncompleteTable");
    } catch (const IncompleteTable& e) {
        CHECK(e.missing() == std::vector<Coeff>{3});
        CHECK(e.partial().rows.size() == 2);
    }
}

TEST_CASE("gaps, density, degree comparison, primes in short intervals") {
    CHECK(vn_gaps(561).empty());
    CHECK(density_check(1) == 1.0L);
    CHECK(std::fabs(static_cast<double>(density_check(1000)) - 6.0 / (std::numbers::pi * std::numbers::pi)) < 5e-3);
    CHECK_THROWS_AS(density_check(0), std::domain_error);
    CHECK(degree_comparison(200) == std::vector<std::uint64_t>{105, 165, 195});
    CHECK(degree_comparison(104).empty());
    CHECK(molsen_check(199, 2000).empty());
    CHECK(molsen_check(11, 11) == std::vector<std::uint64_t>{11});
    CHECK(molsen_check(7, 7) == std::vector<std::uint64_t>{7});
}

TEST_CASE("csv export") {
    CHECK(render({}, ExportFormat::Csv) == std::string(kCsvHeader) + "\n");
    CHECK(render({}, ExportFormat::Jsonl).empty());
    const auto recs = scan_range(560, 561, false);
    const std::string csv = render(recs, ExportFormat::Csv);
    CHECK(csv.find("\n561,3*11*17,241,2,17,\n") != std::string::npos);
}

TEST_CASE("jsonl round trip") {
    const auto recs = scan_range(1, 300, true, 2);
    std::istringstream is(render(recs, ExportFormat::Jsonl));
    CHECK(read_jsonl(is) == recs);
    const auto plain = scan_range(561, 561, false);
    CHECK(from_jsonl(to_jsonl(plain[0])) == plain[0]);
    CHECK(to_jsonl(plain[0]).find("\"vn\":null") != std::string::npos);
}

TEST_CASE("file export") {
    const auto path = std::filesystem::temp_directory_path() / "rcp_test_export.csv";
    const auto recs = scan_range(1, 20, false);
    export_records(recs, ExportFormat::Csv, path);
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == render(recs, ExportFormat::Csv));
    std::filesystem::remove(path);
    CHECK_THROWS_AS(export_records(recs, ExportFormat::Csv, "/nonexistent-dir/x.csv"), std::runtime_error);
}
