#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <sstream>

#include "doctest.h"
#include "topent/dataset_io.hpp"
#include "topent/sweep.hpp"

using namespace topent;

TEST_CASE("cell enumeration is a row-major lattice") {
    GridSpec spec;
    spec.resolution = 151;
    const auto cells = enumerate_cells(spec);
    REQUIRE(cells.size() == 151u * 151u);
    CHECK(cells.front().param1 == 0.0);
    CHECK(cells.front().param2 == 0.0);
    CHECK(cells.back().param1 == 4.0);
    CHECK(cells.back().param2 == 4.0);
    // second cell advances the fast axis only
    CHECK(cells[1].param1 == 0.0);
    CHECK(cells[1].param2 == doctest::Approx(4.0 / 150.0));
    for (const auto& c : cells) CHECK(c.valid);
}

TEST_CASE("cubic lattices flag the invalid wings") {
    GridSpec spec;
    spec.family = GridFamily::CubicPositive;
    spec.resolution = 31;
    const auto cells = enumerate_cells(spec);
    REQUIRE(cells.size() == 31u * 31u);
    bool any_valid = false, any_skipped = false;
    for (const auto& c : cells) {
        const bool inside = cubic_invalid_reason({c.param1, c.param2, -1}).empty();
        CHECK(c.valid == inside);
        (inside ? any_valid : any_skipped) = true;
    }
    CHECK(any_valid);
    CHECK(any_skipped);

    CHECK(cubic_invalid_reason({4.0, 0.0, -1}).empty());
    CHECK_FALSE(cubic_invalid_reason({2.0, 1.5, -1}).empty());
}

TEST_CASE("single cells evaluate like the direct call") {
    GridSpec spec;
    spec.epsilon = 1e-4;
    const GridResult full = evaluate_cell(spec, {4.0, 4.0, true});
    CHECK(full.status == CellStatus::Ok);
    CHECK(full.coord1 == 4.0);
    CHECK(full.coord2 == 4.0);
    CHECK(full.entropy == doctest::Approx(std::log(4.0)).epsilon(1e-2));

    const GridResult skipped = evaluate_cell(spec, {1.0, 1.0, false});
    CHECK(skipped.status == CellStatus::Skipped);
    CHECK(std::isnan(skipped.entropy));
}

TEST_CASE("cubic cells report critical values as coordinates") {
    GridSpec spec;
    spec.family = GridFamily::CubicPositive;
    const GridResult r = evaluate_cell(spec, {4.0, 0.0, true});
    CHECK(r.status == CellStatus::Ok);
    CHECK(r.coord1 == doctest::Approx(1.0));
    CHECK(r.coord2 == doctest::Approx(-1.0));
    CHECK(r.entropy == doctest::Approx(std::log(3.0)).epsilon(1e-2));
}

TEST_CASE("sweeps are deterministic across worker counts") {
    GridSpec spec;
    spec.resolution = 7;
    spec.epsilon = 1e-3;
    spec.n_max = 400;
    SweepSummary s1, s8;
    const auto r1 = run_sweep(spec, 1, &s1);
    const auto r8 = run_sweep(spec, 8, &s8);
    REQUIRE(r1.size() == r8.size());
    for (std::size_t i = 0; i < r1.size(); ++i) {
        CHECK(r1[i].param1 == r8[i].param1);
        CHECK(r1[i].param2 == r8[i].param2);
        CHECK(r1[i].entropy == r8[i].entropy);  // bitwise
        CHECK(r1[i].iterations == r8[i].iterations);
        CHECK(r1[i].status == r8[i].status);
    }
    CHECK(s1.cells == 49);
    CHECK(s1.ok == s8.ok);
    CHECK(s1.skipped == 0);
}

TEST_CASE("summary tallies match the rows") {
    GridSpec spec;
    spec.family = GridFamily::CubicNegative;
    spec.resolution = 9;
    spec.epsilon = 1e-3;
    spec.n_max = 400;
    SweepSummary sum;
    const auto rows = run_sweep(spec, 4, &sum);
    long long ok = 0, failed = 0, skipped = 0;
    for (const auto& r : rows) {
        if (r.status == CellStatus::Ok) ++ok;
        if (r.status == CellStatus::Failed) ++failed;
        if (r.status == CellStatus::Skipped) ++skipped;
    }
    CHECK(sum.cells == static_cast<long long>(rows.size()));
    CHECK(sum.ok == ok);
    CHECK(sum.failed == failed);
    CHECK(sum.skipped == skipped);
    CHECK(skipped > 0);
}

TEST_CASE("cubic entropy is symmetric under beta -> -beta") {
    GridSpec spec;
    spec.family = GridFamily::CubicPositive;
    spec.epsilon = 1e-4;
    for (double beta : {0.1, 0.3, 0.6}) {
        const GridResult plus = evaluate_cell(spec, {2.5, beta, true});
        const GridResult minus = evaluate_cell(spec, {2.5, -beta, true});
        REQUIRE(plus.status == CellStatus::Ok);
        REQUIRE(minus.status == CellStatus::Ok);
        CHECK(plus.entropy == doctest::Approx(minus.entropy).epsilon(2e-3).scale(1.0));
    }
}

TEST_CASE("zoom ranges override the lattice rectangle") {
    GridSpec spec;
    spec.resolution = 3;
    spec.range1 = AxisRange{1.0, 2.0};
    spec.range2 = AxisRange{3.0, 4.0};
    const auto cells = enumerate_cells(spec);
    REQUIRE(cells.size() == 9);
    CHECK(cells[0].param1 == 1.0);
    CHECK(cells[0].param2 == 3.0);
    CHECK(cells[4].param1 == doctest::Approx(1.5));
    CHECK(cells[4].param2 == doctest::Approx(3.5));
    CHECK(cells[8].param1 == 2.0);
    CHECK(cells[8].param2 == 4.0);
}

TEST_CASE("kneading sweeps only run on the quartic square") {
    GridSpec spec;
    spec.family = GridFamily::CubicPositive;
    spec.algorithm = Algorithm::Kneading;
    CHECK_THROWS_AS(evaluate_cell(spec, {4.0, 0.0, true}), DomainError);
}

TEST_CASE("dataset writers render the fixed schema") {
    RunMeta meta{"1.0.0", GridFamily::Quartic, Algorithm::Lap, 1e-4, 2000, 2};
    std::vector<GridResult> rows{
        {0.0, 0.0, 0.0, 0.0, 0.0, 5, CellStatus::Ok},
        {4.0, 4.0, 4.0, 4.0, std::nan(""), 0, CellStatus::Skipped},
    };
    std::ostringstream csv;
    write_csv(csv, meta, rows);
    std::istringstream lines(csv.str());
    std::string line;
    std::getline(lines, line);
    CHECK(line == "family,algorithm,param1,param2,coord1,coord2,entropy,iterations,status");
    std::getline(lines, line);
    CHECK(line == "quartic,lap,0,0,0,0,0,5,ok");
    std::getline(lines, line);
    CHECK(line == "quartic,lap,4,4,4,4,nan,0,skipped");
    CHECK_FALSE(std::getline(lines, line));

    std::ostringstream json;
    write_json(json, meta, rows);
    CHECK(json.str().find("\"family\": \"quartic\"") != std::string::npos);
    CHECK(json.str().find("\"status\": \"skipped\"") != std::string::npos);

    CHECK(format_number(1.0 / 3.0) == "0.333333333");
    CHECK(format_number(std::nan("")) == "nan");
}
