#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "test_support.hpp"
#include "uavplan/dataset.hpp"
#include "uavplan/experiment.hpp"
#include "uavplan/scenario_io.hpp"

using namespace uavplan;
using namespace testsupport;

namespace {

int count_kind(const MissionScenario& sc, TaskKind k) {
    int n = 0;
    for (const auto& t : sc.tasks) n += t.kind == k;
    return n;
}

int count_type(const MissionScenario& sc, UavType t) {
    int n = 0;
    for (const auto& u : sc.uavs) n += u.uavType == t;
    return n;
}

int count_fixed(const MissionScenario& sc) {
    int n = 0;
    for (const auto& t : sc.tasks) n += t.window.mode == WindowMode::Fixed;
    return n;
}

}  // namespace

TEST_CASE("d1 recipe mirrors its structural row") {
    const MissionScenario sc = generate_dataset(builtin_recipe("d1", 42));
    CHECK(sc.tasks.size() == 6);
    CHECK(count_kind(sc, TaskKind::MON) == 2);
    CHECK(count_kind(sc, TaskKind::ES) == 2);
    CHECK(count_kind(sc, TaskKind::TP) == 2);
    CHECK(sc.uavs.size() == 4);
    for (UavType t : {UavType::HALE, UavType::MALE, UavType::UCAV, UavType::URAV})
        CHECK(count_type(sc, t) == 1);
    CHECK(sc.gcss.size() == 1);
    CHECK(sc.nfzs.empty());
    CHECK(count_fixed(sc) == 6);
    CHECK(sc.dependencies.empty());
    CHECK(validate_scenario(sc).empty());
}

TEST_CASE("d3 exercises multi-UAV mapping") {
    const MissionScenario sc = generate_dataset(builtin_recipe("d3", 42));
    CHECK(sc.tasks.size() == 3);
    CHECK(count_kind(sc, TaskKind::MAP) == 3);
    for (const auto& t : sc.tasks) {
        CHECK(t.multiUav);
        CHECK(t.requiredUavCount == 2);
    }
    CHECK(sc.uavs.size() == 2);
    CHECK(count_fixed(sc) == 0);
}

TEST_CASE("d5 recipe carries the full complexity row") {
    const MissionScenario sc = generate_dataset(builtin_recipe("d5", 42));
    CHECK(sc.tasks.size() == 7);
    CHECK(count_kind(sc, TaskKind::MON) == 2);
    CHECK(count_kind(sc, TaskKind::ES) == 1);
    CHECK(count_kind(sc, TaskKind::TP) == 2);
    CHECK(count_kind(sc, TaskKind::MAP) == 2);
    CHECK(sc.uavs.size() == 5);
    CHECK(sc.gcss.size() == 3);
    CHECK(sc.nfzs.size() == 3);
    CHECK(count_fixed(sc) == 4);
    CHECK(sc.dependencies.size() == 1);
    // one deliberately short-reach GCS
    double minCov = 1e18, maxCov = 0;
    for (const auto& g : sc.gcss) {
        minCov = std::min(minCov, g.coverage);
        maxCov = std::max(maxCov, g.coverage);
    }
    CHECK(minCov < maxCov * 0.6);
}

TEST_CASE("generation is deterministic per seed") {
    CHECK(generate_dataset(builtin_recipe("d2", 7)) == generate_dataset(builtin_recipe("d2", 7)));
    CHECK_FALSE(generate_dataset(builtin_recipe("d2", 7)) ==
                generate_dataset(builtin_recipe("d2", 8)));
    CHECK_THROWS_AS(builtin_recipe("dX", 1), std::invalid_argument);
}

TEST_CASE("scenario files round-trip field-exact") {
    for (const char* name : {"d1", "d3", "d5"}) {
        const MissionScenario sc = generate_dataset(builtin_recipe(name, 91));
        const std::string text = scenario_to_string(sc);
        const MissionScenario back = scenario_from_string(text);
        CHECK(back == sc);
        // serialization is stable
        CHECK(scenario_to_string(back) == text);
    }
}

TEST_CASE("unknown fields and malformed documents are rejected") {
    const MissionScenario sc = generate_dataset(builtin_recipe("tiny2", 2));
    std::string text = scenario_to_string(sc);
    CHECK_THROWS_AS(scenario_from_string("{"), std::runtime_error);

    std::string extra = text;
    extra.insert(extra.find("\"tasks\""), "\"surprise\": 1, ");
    CHECK_THROWS_AS(scenario_from_string(extra), std::runtime_error);

    std::string badTask = text;
    badTask.insert(badTask.find("\"kind\""), "\"speed\": 3, ");
    CHECK_THROWS_AS(scenario_from_string(badTask), std::runtime_error);

    std::string badMode = text;
    const auto pos = badMode.find("\"mode\": \"fixed\"");
    REQUIRE(pos != std::string::npos);
    badMode.replace(pos, 15, "\"mode\": \"loose\"");
    CHECK_THROWS_AS(scenario_from_string(badMode), std::runtime_error);
}

TEST_CASE("minimal catalog form parses with defaults") {
    const std::string text = R"({
      "region": {"min": {"lon": 0, "lat": 40}, "max": {"lon": 2, "lat": 42}},
      "tasks": [{"id": "t0", "kind": "TP", "zone": [{"lon": 1.0, "lat": 41.0, "alt": 5000}],
                 "window": {"mode": "fixed", "start": 3.0, "end": 3.1}}],
      "uavs": [{"id": "u0", "type": "URAV", "position": {"lon": 1.0, "lat": 40.0}}],
      "gcss": [{"id": "g0", "position": {"lon": 1.0, "lat": 40.0}, "maxUavs": 2,
                "permittedTypes": ["URAV"], "coverage": 200}]
    })";
    const MissionScenario sc = scenario_from_string(text);
    CHECK(sc.uavs[0].range == 1000.0);
    CHECK(sc.uavs[0].initialFuel == 500.0);
    CHECK(sc.uavs[0].profiles.size() == 2);
    CHECK(sc.tasks[0].window.duration == doctest::Approx(0.1));
    CHECK(sc.tasks[0].requiredUavCount == 1);
    CHECK(validate_scenario(sc).empty());
}

TEST_CASE("archive csv round-trips exactly") {
    RandomSource rng(5);
    std::vector<ObjectiveVector> archive;
    for (int i = 0; i < 7; ++i) {
        ObjectiveVector v;
        v.totalDistance = rng.real(100, 1000);
        v.makespan = rng.real(1, 20);
        archive.push_back(v);
    }
    const ObjectiveSelection sel;
    const std::string csv = archive_to_csv(archive, sel);
    std::vector<std::string> header;
    const auto rows = archive_from_csv(csv, &header);
    CHECK(header == std::vector<std::string>{"distance", "makespan"});
    REQUIRE(rows.size() == archive.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i][0] == archive[i].totalDistance);
        CHECK(rows[i][1] == archive[i].makespan);
    }

    const std::string emptyCsv = archive_to_csv({}, sel);
    CHECK(archive_from_csv(emptyCsv).empty());
    CHECK(emptyCsv == "distance,makespan\n");
}

TEST_CASE("run_experiment renders deterministically and emits files") {
    const MissionScenario sc = generate_dataset(builtin_recipe("tiny2", 33));
    GaConfig config;
    config.populationSize = 60;
    config.eliteSize = 12;
    config.maxGenerations = 25;
    config.seed = 4242;

    const auto scenarios = std::vector<std::pair<std::string, MissionScenario>>{{"tiny2", sc}};
    const RunReport a = run_experiment(scenarios, config, RunMode::Compare, 2, 1e9, 64);
    const RunReport b = run_experiment(scenarios, config, RunMode::Compare, 2, 1e9, 64);
    CHECK(a.render() == b.render());
    CHECK(a.render().find("hypervolume gap") != std::string::npos);

    const std::string dir = (std::filesystem::temp_directory_path() / "uavplan_test_out").string();
    std::filesystem::remove_all(dir);
    const auto written = emit_outputs(a, dir, {"report", "csv", "plot"});
    CHECK(written.size() == 3);
    for (const auto& path : written) CHECK(std::filesystem::exists(path));

    // Every archive row re-parses to the vectors the report carries.
    std::ifstream in(std::filesystem::path(dir) / "tiny2_archive.csv");
    std::stringstream ss;
    ss << in.rdbuf();
    const auto rows = archive_from_csv(ss.str());
    REQUIRE(rows.size() == a.scenarios[0].best.archive.entries.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto proj = config.objectives.project(a.scenarios[0].best.archive.entries[i].objectives);
        CHECK(rows[i] == proj);
    }
}

TEST_CASE("sweep mode produces the 22 combination rows") {
    const MissionScenario sc = generate_dataset(builtin_recipe("tiny2", 14));
    GaConfig config;
    config.populationSize = 40;
    config.eliteSize = 8;
    config.maxGenerations = 12;
    config.stopGenerations = 4;
    config.seed = 9;
    const auto scenarios = std::vector<std::pair<std::string, MissionScenario>>{{"tiny2", sc}};
    const RunReport report = run_experiment(scenarios, config, RunMode::Sweep, 1, 1e8, 48);
    REQUIRE(report.scenarios.size() == 1);
    CHECK(report.scenarios[0].sweepRows.size() == 22);  // 6 singletons + 15 pairs + all
    // Ratings are sorted ascending in the table.
    const auto& rows = report.scenarios[0].sweepRows;
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i - 1].rating <= rows[i].rating);
}
