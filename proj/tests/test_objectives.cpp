#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"
#include "uavplan/dataset.hpp"
#include "uavplan/grid.hpp"
#include "uavplan/nsga.hpp"
#include "uavplan/objectives.hpp"

using namespace uavplan;
using namespace testsupport;

namespace {

ObjectiveVector vec(double a, double b, double c, double d, double e, double f) {
    ObjectiveVector v;
    v.nUavs = a;
    v.totalFlightTime = b;
    v.totalFuel = c;
    v.totalDistance = d;
    v.totalCost = e;
    v.makespan = f;
    return v;
}

ObjectiveVector vec2(double distance, double makespan) {
    return vec(0, 0, 0, distance, 0, makespan);
}

}  // namespace

TEST_CASE("makespan is the latest return, sums over used UAVs only") {
    MissionScenario sc;
    sc.region = test_region();
    sc.tasks = {tp_task("t0", 1.0, 41.0, 3.0, 0.1)};
    sc.uavs = {catalog_uav(UavType::URAV, "u0", pt(1.0, 40.0)),
               catalog_uav(UavType::MALE, "u1", pt(1.2, 40.0)),
               catalog_uav(UavType::HALE, "u2", pt(0.8, 40.0))};
    sc.gcss = {gcs_all("g0", 1.0, 40.0, 4, 300.0)};

    DecodedPlan plan;
    plan.uavs.resize(3);
    for (int u = 0; u < 3; ++u) plan.uavs[u].uav = u;
    auto addLeg = [&](int u, double flightTime, double ret) {
        TaskLeg leg;
        leg.task = 0;
        plan.uavs[u].legs.push_back(leg);
        plan.uavs[u].flightTime = flightTime;
        plan.uavs[u].returnTime = ret;
        plan.uavs[u].totalFuel = 10.0 * flightTime;
        plan.uavs[u].totalDistance = 100.0 * flightTime;
    };
    addLeg(0, 3.0, 3.2);
    addLeg(1, 2.0, 3.6);
    // u2 flies nothing: contributes to no sum and not to nUavs.

    const ObjectiveVector v = compute_objectives(sc, plan);
    CHECK(v.nUavs == 2.0);
    CHECK(v.makespan == 3.6);
    CHECK(v.totalFlightTime == 5.0);
    CHECK(v.totalFuel == 50.0);
    CHECK(v.totalDistance == 500.0);
    // cost: URAV 5/h * 3h + MALE 10/h * 2h
    CHECK(v.totalCost == 35.0);
    CHECK(v.feasible);
}

TEST_CASE("objective totals agree with a naive re-summation over legs") {
    const MissionScenario sc = generate_dataset(builtin_recipe("tiny3", 7));
    PathPlanner planner(Grid::for_scenario(sc));
    RandomSource rng(3);
    int seen = 0;
    for (int i = 0; i < 300 && seen < 40; ++i) {
        EvalResult res = evaluate(sc, planner, random_chromosome(sc, rng));
        if (!res.plan) continue;
        ++seen;
        const ObjectiveVector v = compute_objectives(sc, *res.plan);
        double flight = 0, fuel = 0, dist = 0, cost = 0, makespan = 0, used = 0;
        for (const auto& su : res.plan->uavs) {
            if (su.legs.empty()) continue;
            used += 1;
            double ft = su.durReturn, fu = su.fuelReturn, dd = su.distanceReturn;
            for (const auto& leg : su.legs) {
                ft += leg.times.durPath + leg.times.durTask + leg.times.durLoiter;
                fu += leg.times.fuelPath + leg.times.fuelTask;
                dd += leg.times.distancePath + leg.times.distanceTask + leg.times.distanceLoiter;
            }
            flight += ft;
            fuel += fu;
            dist += dd;
            cost += sc.uavs[su.uav].costPerHour * ft;
            makespan = std::max(makespan, su.legs.back().times.end + su.durReturn);
        }
        CHECK(v.nUavs == used);
        CHECK(v.totalFlightTime == doctest::Approx(flight).epsilon(1e-9));
        CHECK(v.totalFuel == doctest::Approx(fuel).epsilon(1e-9));
        CHECK(v.totalDistance == doctest::Approx(dist).epsilon(1e-9));
        CHECK(v.totalCost == doctest::Approx(cost).epsilon(1e-9));
        CHECK(v.makespan == doctest::Approx(makespan).epsilon(1e-9));
    }
    CHECK(seen > 0);
}

TEST_CASE("dominance on selected components") {
    const ObjectiveSelection sel;  // distance, makespan
    CHECK_FALSE(dominates(vec2(1, 3), vec2(2, 2), sel));
    CHECK_FALSE(dominates(vec2(2, 2), vec2(1, 3), sel));
    CHECK(dominates(vec2(1, 2), vec2(1, 3), sel));
    CHECK_FALSE(dominates(vec2(1, 2), vec2(1, 2), sel));  // irreflexive on equals
    CHECK(dominates(vec2(1, 2), penalty_vector(), sel));
    CHECK_FALSE(dominates(penalty_vector(), vec2(1, 2), sel));
}

TEST_CASE("dominance is a strict partial order") {
    RandomSource rng(17);
    const ObjectiveSelection sel({1, 3, 5});
    auto rnd = [&]() {
        return vec(rng.index(4), rng.index(4), rng.index(4), rng.index(4), rng.index(4),
                   rng.index(4));
    };
    for (int i = 0; i < 4000; ++i) {
        const ObjectiveVector a = rnd(), b = rnd(), c = rnd();
        CHECK_FALSE(dominates(a, a, sel));
        if (dominates(a, b, sel)) CHECK_FALSE(dominates(b, a, sel));
        if (dominates(a, b, sel) && dominates(b, c, sel)) CHECK(dominates(a, c, sel));
    }
}

TEST_CASE("rating normalizes per objective over the batch") {
    // One varying objective: min 0, max 10, value 5 -> 0.5 exactly.
    std::vector<ObjectiveVector> batch = {vec(0, 0, 0, 0, 0, 0), vec(0, 0, 0, 10, 0, 0),
                                          vec(0, 0, 0, 5, 0, 0)};
    const auto ratings = rating_batch(batch);
    CHECK(ratings[0] == 0.0);  // value = min on every objective
    CHECK(ratings[1] == 1.0);
    CHECK(ratings[2] == 0.5);
    CHECK_THROWS_AS(rating_batch({}), std::invalid_argument);
}

TEST_CASE("rating stays within [0, 6] and ignores degenerate objectives") {
    RandomSource rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<ObjectiveVector> batch;
        for (int i = 0; i < 8; ++i)
            batch.push_back(vec(rng.real(0, 4), rng.real(0, 9), 7.0, rng.real(0, 900),
                                rng.real(0, 60), rng.real(0, 12)));
        for (double r : rating_batch(batch)) {
            CHECK(r >= 0.0);
            CHECK(r <= 6.0);
        }
    }
}

TEST_CASE("rating is invariant under batch-wide affine rescaling") {
    RandomSource rng(29);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<ObjectiveVector> batch;
        for (int i = 0; i < 10; ++i)
            batch.push_back(vec(rng.real(0, 100), rng.real(0, 100), rng.real(0, 100),
                                rng.real(0, 100), rng.real(0, 100), rng.real(0, 100)));
        const auto base = rating_batch(batch);
        const int obj = static_cast<int>(rng.index(kObjectiveCount));
        const double a = rng.real(0.5, 2.0), b = rng.real(0.0, 50.0);
        std::vector<ObjectiveVector> scaled = batch;
        for (auto& v : scaled) {
            auto comps = v.components();
            comps[obj] = a * comps[obj] + b;
            v = vec(comps[0], comps[1], comps[2], comps[3], comps[4], comps[5]);
        }
        const auto after = rating_batch(scaled);
        for (std::size_t i = 0; i < base.size(); ++i)
            CHECK(std::abs(base[i] - after[i]) <= 1e-12);
    }
}

TEST_CASE("selection parsing and projection") {
    const ObjectiveSelection sel = ObjectiveSelection::parse("distance,makespan");
    CHECK(sel.indices() == std::vector<int>{3, 5});
    CHECK(sel.to_string() == "distance,makespan");
    CHECK(ObjectiveSelection::all().size() == 6);
    CHECK_THROWS_AS(ObjectiveSelection::parse("distance,warp"), std::invalid_argument);
    CHECK_THROWS_AS(ObjectiveSelection::parse("distance,distance"), std::invalid_argument);
    CHECK_THROWS_AS(ObjectiveSelection::parse(""), std::invalid_argument);
    const auto p = sel.project(vec(1, 2, 3, 4, 5, 6));
    CHECK(p == std::vector<double>{4.0, 6.0});
}
