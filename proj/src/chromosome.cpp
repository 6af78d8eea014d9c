#include "uavplan/chromosome.hpp"

#include <algorithm>
#include <sstream>

namespace uavplan {

std::vector<std::string> structural_violations(const MissionScenario& sc, const Chromosome& c) {
    std::vector<std::string> out;
    const int n = static_cast<int>(sc.tasks.size());
    const int m = static_cast<int>(sc.uavs.size());
    const int l = static_cast<int>(sc.gcss.size());

    if (static_cast<int>(c.assignUavs.size()) != n) out.push_back("assignUavs size mismatch");
    if (static_cast<int>(c.pathProfile.size()) != n) out.push_back("pathProfile size mismatch");
    if (static_cast<int>(c.sensorUsed.size()) != n) out.push_back("sensorUsed size mismatch");
    if (static_cast<int>(c.gcsOf.size()) != m) out.push_back("gcsOf size mismatch");
    if (static_cast<int>(c.returnProfile.size()) != m) out.push_back("returnProfile size mismatch");
    if (!out.empty()) return out;

    std::vector<int> perm = c.orderPerm;
    std::sort(perm.begin(), perm.end());
    bool permOk = static_cast<int>(perm.size()) == n;
    for (int i = 0; permOk && i < n; ++i) permOk = perm[i] == i;
    if (!permOk) out.push_back("orderPerm is not a permutation of 0..n-1");

    for (int t = 0; t < n; ++t) {
        const TaskSpec& task = sc.tasks[t];
        const auto& us = c.assignUavs[t];
        if (static_cast<int>(us.size()) != task.requiredUavCount)
            out.push_back("task " + task.id + ": assigned UAV count != requiredUavCount");
        if (c.pathProfile[t].size() != us.size() || c.sensorUsed[t].size() != us.size()) {
            out.push_back("task " + task.id + ": allele 4/5 length mismatch");
            continue;
        }
        std::vector<int> sorted = us;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            out.push_back("task " + task.id + ": duplicate UAV assignment");
        for (std::size_t j = 0; j < us.size(); ++j) {
            const int u = us[j];
            if (u < 0 || u >= m) {
                out.push_back("task " + task.id + ": UAV index out of range");
                continue;
            }
            const UavSpec& uav = sc.uavs[u];
            const int p = c.pathProfile[t][j];
            if (p < 0 || p >= static_cast<int>(uav.profiles.size()))
                out.push_back("task " + task.id + ": profile index out of range for " + uav.id);
            const SensorKind s = c.sensorUsed[t][j];
            const auto taskSet = task_sensor_set(task.kind);
            if (!taskSet.count(s)) {
                out.push_back("task " + task.id + ": sensor not usable for this task kind");
            } else {
                const auto valid = valid_task_sensors(task.kind, uav);
                if (!valid.empty() && !valid.count(s))
                    out.push_back("task " + task.id + ": sensor invalid for UAV " + uav.id);
            }
        }
    }

    for (int u = 0; u < m; ++u) {
        if (c.gcsOf[u] < 0 || c.gcsOf[u] >= l) out.push_back("gcsOf out of range");
        const int p = c.returnProfile[u];
        if (p < 0 || p >= static_cast<int>(sc.uavs[u].profiles.size()))
            out.push_back("returnProfile out of range for " + sc.uavs[u].id);
    }
    return out;
}

std::string render_chromosome(const MissionScenario& sc, const Chromosome& c) {
    std::ostringstream os;
    os << "order=(";
    for (std::size_t i = 0; i < c.orderPerm.size(); ++i)
        os << (i ? "," : "") << sc.tasks[c.orderPerm[i]].id;
    os << ")";
    for (std::size_t t = 0; t < c.assignUavs.size(); ++t) {
        os << " " << sc.tasks[t].id << "->[";
        for (std::size_t j = 0; j < c.assignUavs[t].size(); ++j) {
            const UavSpec& uav = sc.uavs[c.assignUavs[t][j]];
            os << (j ? "," : "") << uav.id << ":" << uav.profiles[c.pathProfile[t][j]].id << ":"
               << to_string(c.sensorUsed[t][j]);
        }
        os << "]";
    }
    for (std::size_t u = 0; u < c.gcsOf.size(); ++u) {
        os << " " << sc.uavs[u].id << "@" << sc.gcss[c.gcsOf[u]].id << ":"
           << sc.uavs[u].profiles[c.returnProfile[u]].id;
    }
    return os.str();
}

}  // namespace uavplan
