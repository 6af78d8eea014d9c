#include "uavplan/objectives.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace uavplan {

const std::array<const char*, kObjectiveCount> kObjectiveNames = {
    "uavs", "flight-time", "fuel", "distance", "cost", "makespan"};

ObjectiveVector penalty_vector() {
    const double worst = std::numeric_limits<double>::max();
    ObjectiveVector v;
    v.nUavs = v.totalFlightTime = v.totalFuel = v.totalDistance = v.totalCost = v.makespan = worst;
    v.feasible = false;
    return v;
}

ObjectiveSelection::ObjectiveSelection(std::vector<int> indices) : indices_(std::move(indices)) {
    if (indices_.empty()) throw std::invalid_argument("objective selection must not be empty");
    std::vector<int> sorted = indices_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("duplicate objective in selection");
    for (int i : indices_)
        if (i < 0 || i >= kObjectiveCount) throw std::invalid_argument("objective index out of range");
}

ObjectiveSelection ObjectiveSelection::parse(const std::string& commaList) {
    std::vector<int> indices;
    std::stringstream ss(commaList);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        int found = -1;
        for (int i = 0; i < kObjectiveCount; ++i)
            if (tok == kObjectiveNames[i]) found = i;
        if (found < 0) throw std::invalid_argument("unknown objective name: " + tok);
        indices.push_back(found);
    }
    return ObjectiveSelection(std::move(indices));
}

ObjectiveSelection ObjectiveSelection::all() { return ObjectiveSelection({0, 1, 2, 3, 4, 5}); }

std::vector<double> ObjectiveSelection::project(const ObjectiveVector& v) const {
    const auto comps = v.components();
    std::vector<double> out;
    out.reserve(indices_.size());
    for (int i : indices_) out.push_back(comps[i]);
    return out;
}

std::string ObjectiveSelection::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < indices_.size(); ++i) {
        if (i) out += ",";
        out += kObjectiveNames[indices_[i]];
    }
    return out;
}

ObjectiveVector compute_objectives(const MissionScenario& sc, const DecodedPlan& plan) {
    ObjectiveVector v;
    for (const auto& su : plan.uavs) {
        if (!su.used()) continue;
        v.nUavs += 1.0;
        v.totalFlightTime += su.flightTime;
        v.totalFuel += su.totalFuel;
        v.totalDistance += su.totalDistance;
        v.totalCost += sc.uavs[su.uav].costPerHour * su.flightTime;
        v.makespan = std::max(v.makespan, su.returnTime);
    }
    return v;
}

bool dominates(const ObjectiveVector& a, const ObjectiveVector& b, const ObjectiveSelection& sel) {
    const auto ca = a.components();
    const auto cb = b.components();
    bool strict = false;
    for (int i : sel.indices()) {
        if (ca[i] > cb[i]) return false;
        if (ca[i] < cb[i]) strict = true;
    }
    return strict;
}

double rating(const ObjectiveVector& v, const std::array<double, kObjectiveCount>& batchMin,
              const std::array<double, kObjectiveCount>& batchMax) {
    const auto comps = v.components();
    double sum = 0.0;
    for (int i = 0; i < kObjectiveCount; ++i) {
        const double span = batchMax[i] - batchMin[i];
        if (span > 0.0) sum += (comps[i] - batchMin[i]) / span;
    }
    return sum;
}

std::vector<double> rating_batch(const std::vector<ObjectiveVector>& batch) {
    if (batch.empty()) throw std::invalid_argument("rating over an empty batch");
    std::array<double, kObjectiveCount> lo{}, hi{};
    lo.fill(std::numeric_limits<double>::infinity());
    hi.fill(-std::numeric_limits<double>::infinity());
    for (const auto& v : batch) {
        const auto comps = v.components();
        for (int i = 0; i < kObjectiveCount; ++i) {
            lo[i] = std::min(lo[i], comps[i]);
            hi[i] = std::max(hi[i], comps[i]);
        }
    }
    std::vector<double> out;
    out.reserve(batch.size());
    for (const auto& v : batch) out.push_back(rating(v, lo, hi));
    return out;
}

}  // namespace uavplan
