#include "catch2/catch_amalgamated.hpp"

#include <cstdlib>
#include <sstream>

#include "hardy/sweep.hpp"

using namespace hardy;
namespace sw = hardy::sweep;

TEST_CASE("range parsing and enumeration") {
    auto r = sw::Range::parse("0.1:0.5:0.2");
    auto v = r.values();
    REQUIRE(v.size() == 3);
    CHECK(v[0] == Catch::Approx(0.1));
    CHECK(v[2] == Catch::Approx(0.5));
    CHECK(sw::Range::parse("2.5").values() == std::vector<double>{2.5});
    CHECK_THROWS_AS(sw::Range::parse("1:2"), std::invalid_argument);
}

TEST_CASE("sweep: deterministic byte-identical output") {
    sw::SweepSpec spec;
    spec.regime = Regime::half;
    spec.ds = {1};
    spec.s = {0.25, 0.65, 0.2};
    spec.p = {2.0, 2.0, 0.0};
    spec.alpha = {0.0, 0.2, 0.1};
    spec.beta = {0.1, 0.1, 0.0};
    spec.no_timing = true;
    spec.threads = 3;

    auto rows1 = sw::run_sweep(spec);
    auto rows2 = sw::run_sweep(spec);
    std::ostringstream a, b;
    sw::write_csv(a, rows1, spec.no_timing);
    sw::write_csv(b, rows2, spec.no_timing);
    CHECK(a.str() == b.str());
    CHECK(rows1.size() == 3 * 3);

    // all admissible p = 2 rows carry a small closed-vs-integral discrepancy
    for (const auto& row : rows1) {
        if (row.status != "ok") continue;
        REQUIRE(row.discrepancy.has_value());
        CHECK(*row.discrepancy <= 1e-8);
    }
}

TEST_CASE("sweep: 17-digit fields round-trip") {
    sw::SweepSpec spec;
    spec.regime = Regime::full;
    spec.ds = {2};
    spec.s = {1.0 / 3.0, 1.0 / 3.0, 0.0};
    spec.p = {2.0, 2.0, 0.0};
    spec.alpha = {0.1, 0.1, 0.0};
    spec.beta = {0.2, 0.2, 0.0};
    auto rows = sw::run_sweep(spec);
    REQUIRE(rows.size() == 1);
    REQUIRE(rows[0].constant_integral.has_value());
    std::ostringstream os;
    sw::write_csv(os, rows, true);
    // parse back the integral-constant column of the data row
    std::string text = os.str();
    const auto line_start = text.find('\n') + 1;
    std::string row = text.substr(line_start);
    std::vector<std::string> fields;
    std::stringstream ss(row);
    std::string tok;
    while (std::getline(ss, tok, ',')) fields.push_back(tok);
    REQUIRE(fields.size() >= 10);
    CHECK(std::strtod(fields[6].c_str(), nullptr) == *rows[0].constant_integral);
    CHECK(fields[0] == "full");
    CHECK(fields[9].substr(0, 2) == "ok");
}

TEST_CASE("sweep: empty grid gives a header-only file") {
    sw::SweepSpec spec;
    spec.ds = {};
    auto rows = sw::run_sweep(spec);
    CHECK(rows.empty());
    std::ostringstream os;
    sw::write_csv(os, rows, true);
    CHECK(os.str() ==
          "regime,d,s,p,alpha,beta,constant_integral,constant_closed,discrepancy,status\n");
}

TEST_CASE("sweep: rows on the excluded hyperplane are marked inadmissible") {
    sw::SweepSpec spec;
    spec.regime = Regime::half;
    spec.ds = {1};
    spec.s = {0.5, 0.5, 0.0};
    spec.p = {2.0, 2.0, 0.0};
    spec.alpha = {0.0, 0.0, 0.0};
    spec.beta = {-0.2, 0.2, 0.2};  // beta = 0 hits 1+alpha+beta = sp
    auto rows = sw::run_sweep(spec);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].status == "ok");
    CHECK(rows[1].status.substr(0, 12) == "inadmissible");
    CHECK(rows[2].status == "ok");
    std::ostringstream os;
    sw::write_csv(os, rows, true);
    CHECK(os.str().find("inadmissible") != std::string::npos);
}

TEST_CASE("sweep: json output carries the same rows") {
    sw::SweepSpec spec;
    spec.regime = Regime::half;
    spec.ds = {1};
    spec.s = {0.25, 0.25, 0.0};
    spec.p = {2.0, 2.0, 0.0};
    spec.alpha = {0.0, 0.0, 0.0};
    spec.beta = {0.0, 0.0, 0.0};
    auto rows = sw::run_sweep(spec);
    std::ostringstream os;
    sw::write_json(os, rows, true);
    auto parsed = nlohmann::json::parse(os.str());
    REQUIRE(parsed.is_array());
    REQUIRE(parsed.size() == 1);
    CHECK(parsed[0]["status"] == "ok");
    CHECK(std::abs(parsed[0]["constant_integral"].get<double>() -
                   *rows[0].constant_integral) <= 1e-15);
}

TEST_CASE("config parsing") {
    std::istringstream in(
        "[sweep]\n"
        "regime = half\n"
        "d = 1,3\n"
        "s = 0.2:0.4:0.1   # comment\n"
        "p = 2\n"
        "alpha = 0.0\n"
        "beta = 0.1\n"
        "format = csv\n"
        "no_timing = true\n"
        "threads = 2\n");
    auto spec = sw::parse_config(in);
    CHECK(spec.regime == Regime::half);
    CHECK(spec.ds == std::vector<int>{1, 3});
    CHECK(spec.s.values().size() == 3);
    CHECK(spec.no_timing);
    CHECK(spec.threads == 2);
    std::istringstream bad("nonsense line\n");
    CHECK_THROWS_AS(sw::parse_config(bad), std::invalid_argument);
}
