#include "uavplan/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

#include "uavplan/rng.hpp"

namespace uavplan {

std::vector<ObjectiveVector> ExactPofResult::vectors() const {
    std::vector<ObjectiveVector> out;
    out.reserve(points.size());
    for (const auto& p : points) out.push_back(p.objectives);
    return out;
}

namespace {

bool weakly_leq(const std::vector<double>& a, const std::vector<double>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

// Depth-first enumeration over the chromosome decision tree:
//   task teams -> per-UAV leg orders -> per-UAV profile/sensor variants ->
//   GCS labeling. Per-UAV schedules are exact as soon as the UAV's block is
//   committed; objectives never depend on the GCS labeling, so that level
//   reduces to a feasibility matching.
class ExactSearch {
public:
    ExactSearch(const MissionScenario& sc, const PathPlanner& planner, const ObjectiveSelection& sel,
                bool prune, const PlanParams& params)
        : sc_(sc), planner_(planner), sel_(sel), params_(params), prune_(prune),
          n_(static_cast<int>(sc.tasks.size())), m_(static_cast<int>(sc.uavs.size())) {
        build_domains();
    }

    double estimate_nodes() const;

    std::vector<FrontPoint> run() {
        if (!domainsOk_) return {};
        teamChoice_.assign(n_, -1);
        choose_team(0);
        std::vector<FrontPoint> out;
        out.reserve(incumbents_.size());
        for (auto& inc : incumbents_) out.push_back(std::move(inc.point));
        std::sort(out.begin(), out.end(), [&](const FrontPoint& a, const FrontPoint& b) {
            return sel_.project(a.objectives) < sel_.project(b.objectives);
        });
        return out;
    }

private:
    struct Incumbent {
        std::vector<double> proj;
        FrontPoint point;
    };

    void build_domains();
    void choose_team(int task);
    bool vehicle_deps_ok(int committedThrough) const;
    void enumerate_orders();
    void choose_order(std::size_t uavPos);
    void choose_uav_block(std::size_t uavPos);
    void finish_leaf();
    std::vector<double> lower_bound(int committedThrough) const;
    std::vector<double> lower_bound_chained(std::size_t exactThrough) const;
    bool pruned(const std::vector<double>& lb) const;
    void offer(const Chromosome& chromosome);

    const MissionScenario& sc_;
    const PathPlanner& planner_;
    const ObjectiveSelection& sel_;
    const PlanParams& params_;
    bool prune_;
    int n_, m_;
    bool domainsOk_ = true;

    std::vector<std::vector<std::vector<int>>> teams_;        // per task: sorted UAV teams
    std::vector<std::vector<std::vector<SensorKind>>> sensorDomain_;  // [task][uav]
    std::vector<double> maxSpeed_, minRatio_, minReturnDist_;
    std::vector<std::vector<double>> minDistTask_, minDurTask_, dminPath_;  // [task][uav]
    std::vector<double> fixedEnd_;
    std::vector<GeoPoint> entry_, exit_;

    std::vector<int> teamChoice_;                       // per task: index into teams_
    std::vector<std::vector<int>> uavTasks_;            // per UAV: assigned tasks (index order)
    std::vector<int> usedUavs_;                         // ascending
    std::vector<std::vector<int>> uavOrder_;            // per used UAV: chosen leg order
    std::vector<int> representativePerm_;
    std::vector<UavSchedule> block_;                    // per used UAV: committed schedule
    std::vector<std::vector<int>> blockProfiles_;
    std::vector<std::vector<SensorKind>> blockSensors_;
    std::vector<int> blockReturn_;

    std::vector<Incumbent> incumbents_;
};

void ExactSearch::build_domains() {
    teams_.resize(n_);
    sensorDomain_.assign(n_, std::vector<std::vector<SensorKind>>(m_));
    for (int t = 0; t < n_; ++t) {
        const TaskSpec& task = sc_.tasks[t];
        std::vector<int> compatible;
        for (int u = 0; u < m_; ++u) {
            auto valid = valid_task_sensors(task.kind, sc_.uavs[u]);
            if (valid.empty()) continue;
            compatible.push_back(u);
            sensorDomain_[t][u].assign(valid.begin(), valid.end());
        }
        const int k = task.requiredUavCount;
        if (static_cast<int>(compatible.size()) < k) {
            domainsOk_ = false;  // no feasible teams at all
            return;
        }
        std::vector<int> pick(k);
        std::function<void(int, int)> gen = [&](int from, int depth) {
            if (depth == k) {
                teams_[t].push_back(pick);
                return;
            }
            for (int i = from; i < static_cast<int>(compatible.size()); ++i) {
                pick[depth] = compatible[i];
                gen(i + 1, depth + 1);
            }
        };
        gen(0, 0);
    }

    maxSpeed_.resize(m_);
    minRatio_.resize(m_);
    minReturnDist_.resize(m_);
    for (int u = 0; u < m_; ++u) {
        double ms = 0.0, mr = std::numeric_limits<double>::infinity();
        for (const auto& fp : sc_.uavs[u].profiles) {
            ms = std::max(ms, fp.speed);
            mr = std::min(mr, fp.fuelRatio);
        }
        maxSpeed_[u] = ms;
        minRatio_[u] = mr;
        double ret = std::numeric_limits<double>::infinity();
        for (int t = 0; t < n_; ++t)
            ret = std::min(ret, distance_nm(zone_exit(sc_.tasks[t]), sc_.uavs[u].initialPosition));
        minReturnDist_[u] = ret;
    }

    fixedEnd_.assign(n_, 0.0);
    minDistTask_.assign(n_, std::vector<double>(m_, 0.0));
    minDurTask_.assign(n_, std::vector<double>(m_, 0.0));
    dminPath_.assign(n_, std::vector<double>(m_, 0.0));
    entry_.resize(n_);
    exit_.resize(n_);
    for (int t = 0; t < n_; ++t) {
        entry_[t] = zone_entry(sc_.tasks[t]);
        exit_[t] = zone_exit(sc_.tasks[t]);
    }
    for (int t = 0; t < n_; ++t) {
        const TaskSpec& task = sc_.tasks[t];
        if (task.window.mode == WindowMode::Fixed) fixedEnd_[t] = task.window.end;
        double dmin0 = std::numeric_limits<double>::infinity();
        for (int t2 = 0; t2 < n_; ++t2)
            if (t2 != t) dmin0 = std::min(dmin0, distance_nm(exit_[t2], entry_[t]));
        for (int u = 0; u < m_; ++u) {
            if (sensorDomain_[t][u].empty()) continue;
            dminPath_[t][u] = std::min(dmin0, distance_nm(sc_.uavs[u].initialPosition, entry_[t]));
            double minDistTask = std::numeric_limits<double>::infinity();
            double minDurTask = std::numeric_limits<double>::infinity();
            for (SensorKind s : sensorDomain_[t][u]) {
                double dist, dur;
                task_leg_geometry(task, sc_.uavs[u], s, task.requiredUavCount, params_, dist, dur);
                minDistTask = std::min(minDistTask, dist);
                minDurTask = std::min(minDurTask, dur);
            }
            minDistTask_[t][u] = minDistTask;
            minDurTask_[t][u] = minDurTask;
        }
    }

    // Cheap-looking teams first so the DFS seeds the incumbent archive with
    // strong points early.
    for (int t = 0; t < n_; ++t) {
        auto teamCost = [&](const std::vector<int>& team) {
            double c = 0.0;
            for (int u : team) c += dminPath_[t][u] + minDistTask_[t][u];
            return c;
        };
        std::stable_sort(teams_[t].begin(), teams_[t].end(),
                         [&](const std::vector<int>& a, const std::vector<int>& b) {
                             const double ca = teamCost(a), cb = teamCost(b);
                             if (ca != cb) return ca < cb;
                             return a < b;
                         });
    }
}

double ExactSearch::estimate_nodes() const {
    if (!domainsOk_) return 0.0;
    double est = 1.0;
    for (int t = 0; t < n_; ++t) {
        double taskChoices = 0.0;
        for (const auto& team : teams_[t]) {
            double v = 1.0;
            for (int u : team)
                v *= static_cast<double>(sc_.uavs[u].profiles.size()) *
                     static_cast<double>(sensorDomain_[t][u].size());
            taskChoices += v;
        }
        est *= taskChoices;
    }
    for (int i = 2; i <= n_; ++i) est *= i;         // order permutations
    for (int u = 0; u < m_; ++u) {
        est *= static_cast<double>(sc_.gcss.size());            // GCS labeling
        est *= static_cast<double>(sc_.uavs[u].profiles.size());  // return profiles
    }
    return est;
}

std::vector<double> ExactSearch::lower_bound(int committedThrough) const {
    ObjectiveVector v;
    std::vector<std::vector<int>> pending(m_);
    for (int t = 0; t <= committedThrough; ++t)
        for (int u : teams_[t][teamChoice_[t]]) pending[u].push_back(t);

    for (int u = 0; u < m_; ++u) {
        if (pending[u].empty()) continue;
        double fl = minReturnDist_[u] / maxSpeed_[u];
        double d = minReturnDist_[u];
        double endLb = 0.0;
        for (int t : pending[u]) {
            fl += dminPath_[t][u] / maxSpeed_[u] + minDurTask_[t][u];
            d += dminPath_[t][u] + minDistTask_[t][u];
            endLb = std::max(endLb, fixedEnd_[t]);
        }
        v.nUavs += 1;
        v.totalFlightTime += fl;
        v.totalFuel += fl * minRatio_[u];
        v.totalDistance += d;
        v.totalCost += sc_.uavs[u].costPerHour * fl;
        v.makespan = std::max(v.makespan, endLb + minReturnDist_[u] / maxSpeed_[u]);
    }
    return sel_.project(v);
}

// Once leg orders are fixed the straight-line chain through each remaining
// UAV's sequence is a much tighter admissible bound (any-angle paths can only
// be longer, waits only later).
std::vector<double> ExactSearch::lower_bound_chained(std::size_t exactThrough) const {
    ObjectiveVector v;
    for (std::size_t i = 0; i < usedUavs_.size(); ++i) {
        const int u = usedUavs_[i];
        if (i < exactThrough) {
            const UavSchedule& su = block_[i];
            if (!su.used()) continue;
            v.nUavs += 1;
            v.totalFlightTime += su.flightTime;
            v.totalFuel += su.totalFuel;
            v.totalDistance += su.totalDistance;
            v.totalCost += sc_.uavs[u].costPerHour * su.flightTime;
            v.makespan = std::max(v.makespan, su.returnTime);
            continue;
        }
        const auto& order = uavOrder_[i];
        double chain = distance_nm(sc_.uavs[u].initialPosition, entry_[order.front()]);
        for (std::size_t j = 1; j < order.size(); ++j)
            chain += distance_nm(exit_[order[j - 1]], entry_[order[j]]);
        const double retDist = distance_nm(exit_[order.back()], sc_.uavs[u].initialPosition);
        chain += retDist;
        double d = chain, fl = chain / maxSpeed_[u], endLb = 0.0;
        for (int t : order) {
            d += minDistTask_[t][u];
            fl += minDurTask_[t][u];
            endLb = std::max(endLb, fixedEnd_[t]);
        }
        v.nUavs += 1;
        v.totalFlightTime += fl;
        v.totalFuel += fl * minRatio_[u];
        v.totalDistance += d;
        v.totalCost += sc_.uavs[u].costPerHour * fl;
        v.makespan = std::max(v.makespan, endLb + retDist / maxSpeed_[u]);
    }
    return sel_.project(v);
}

bool ExactSearch::pruned(const std::vector<double>& lb) const {
    if (!prune_) return false;
    for (const auto& inc : incumbents_)
        if (weakly_leq(inc.proj, lb)) return true;
    return false;
}

bool ExactSearch::vehicle_deps_ok(int committedThrough) const {
    for (const auto& dep : sc_.dependencies) {
        if (is_time_dependency(dep.kind)) continue;
        const int i = sc_.task_index(dep.first);
        const int j = sc_.task_index(dep.second);
        if (i > committedThrough || j > committedThrough) continue;
        const auto& a = teams_[i][teamChoice_[i]];
        const auto& b = teams_[j][teamChoice_[j]];
        if (dep.kind == DependencyKind::SameUav && a != b) return false;
        if (dep.kind == DependencyKind::DiffUav) {
            std::vector<int> inter;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(inter));
            if (!inter.empty()) return false;
        }
    }
    return true;
}

void ExactSearch::choose_team(int task) {
    if (task == n_) {
        enumerate_orders();
        return;
    }
    for (std::size_t i = 0; i < teams_[task].size(); ++i) {
        teamChoice_[task] = static_cast<int>(i);
        if (!vehicle_deps_ok(task)) continue;
        if (pruned(lower_bound(task))) continue;
        choose_team(task + 1);
    }
    teamChoice_[task] = -1;
}

void ExactSearch::enumerate_orders() {
    uavTasks_.assign(m_, {});
    for (int t = 0; t < n_; ++t)
        for (int u : teams_[t][teamChoice_[t]]) uavTasks_[u].push_back(t);
    usedUavs_.clear();
    for (int u = 0; u < m_; ++u)
        if (!uavTasks_[u].empty()) usedUavs_.push_back(u);
    uavOrder_.assign(usedUavs_.size(), {});
    choose_order(0);
}

void ExactSearch::choose_order(std::size_t uavPos) {
    if (uavPos == usedUavs_.size()) {
        // Consistency: the per-UAV orders must embed in one global sequence.
        std::vector<std::vector<int>> succ(n_);
        std::vector<int> indeg(n_, 0);
        for (const auto& order : uavOrder_) {
            for (std::size_t i = 1; i < order.size(); ++i) {
                succ[order[i - 1]].push_back(order[i]);
                ++indeg[order[i]];
            }
        }
        representativePerm_.clear();
        std::vector<int> ready;
        for (int t = 0; t < n_; ++t)
            if (indeg[t] == 0) ready.push_back(t);
        std::make_heap(ready.begin(), ready.end(), std::greater<>());
        while (!ready.empty()) {
            std::pop_heap(ready.begin(), ready.end(), std::greater<>());
            const int t = ready.back();
            ready.pop_back();
            representativePerm_.push_back(t);
            for (int next : succ[t])
                if (--indeg[next] == 0) {
                    ready.push_back(next);
                    std::push_heap(ready.begin(), ready.end(), std::greater<>());
                }
        }
        if (static_cast<int>(representativePerm_.size()) != n_) return;  // cyclic: unrealizable
        if (pruned(lower_bound_chained(0))) return;

        block_.clear();
        blockProfiles_.clear();
        blockSensors_.clear();
        blockReturn_.clear();
        choose_uav_block(0);
        return;
    }
    const int u = usedUavs_[uavPos];
    std::vector<int> order = uavTasks_[u];
    do {
        uavOrder_[uavPos] = order;
        choose_order(uavPos + 1);
    } while (std::next_permutation(order.begin(), order.end()));
}

void ExactSearch::choose_uav_block(std::size_t uavPos) {
    if (uavPos == usedUavs_.size()) {
        finish_leaf();
        return;
    }
    const int u = usedUavs_[uavPos];
    const auto& order = uavOrder_[uavPos];
    const int legs = static_cast<int>(order.size());
    const int profileCount = static_cast<int>(sc_.uavs[u].profiles.size());

    std::vector<std::pair<int, int>> seq;
    for (int t : order) {
        const auto& team = teams_[t][teamChoice_[t]];
        const int slot =
            static_cast<int>(std::find(team.begin(), team.end(), u) - team.begin());
        seq.push_back({t, slot});
    }

    std::vector<int> profiles(legs, 0), sensorIdx(legs, 0);
    std::vector<SensorKind> sensors(legs);
    int returnProfile = 0;
    // Odometer over (per-leg profile, per-leg sensor, return profile).
    while (true) {
        for (int i = 0; i < legs; ++i) sensors[i] = sensorDomain_[order[i]][u][sensorIdx[i]];
        auto su = build_uav_schedule(sc_, planner_, params_, u, seq, profiles, sensors,
                                     returnProfile, /*gcs=*/-1);
        if (su && uav_locally_feasible(sc_, *su)) {
            block_.push_back(std::move(*su));
            blockProfiles_.push_back(profiles);
            blockSensors_.push_back(sensors);
            blockReturn_.push_back(returnProfile);
            if (!pruned(lower_bound_chained(uavPos + 1))) choose_uav_block(uavPos + 1);
            block_.pop_back();
            blockProfiles_.pop_back();
            blockSensors_.pop_back();
            blockReturn_.pop_back();
        }

        int i = 0;
        for (; i < legs; ++i) {
            if (++profiles[i] < profileCount) break;
            profiles[i] = 0;
            if (++sensorIdx[i] < static_cast<int>(sensorDomain_[order[i]][u].size())) break;
            sensorIdx[i] = 0;
        }
        if (i < legs) continue;
        if (++returnProfile < profileCount) continue;
        break;
    }
}

void ExactSearch::finish_leaf() {
    // Cross-UAV time dependencies.
    DecodedPlan plan;
    plan.uavs.resize(m_);
    for (int u = 0; u < m_; ++u) plan.uavs[u].uav = u;
    for (std::size_t i = 0; i < usedUavs_.size(); ++i) plan.uavs[usedUavs_[i]] = block_[i];
    ConstraintReport depReport;
    check_dependencies(sc_, plan, depReport);
    if (!depReport.feasible) return;

    // GCS labeling never moves the objectives; any admissible matching under
    // the strict capacity bound will do.
    const int l = static_cast<int>(sc_.gcss.size());
    std::vector<std::vector<int>> options(usedUavs_.size());
    for (std::size_t i = 0; i < usedUavs_.size(); ++i) {
        for (int g = 0; g < l; ++g)
            if (uav_gcs_admissible(sc_, block_[i], sc_.gcss[g])) options[i].push_back(g);
        if (options[i].empty()) return;
    }
    std::vector<int> load(l, 0), label(usedUavs_.size(), -1);
    std::function<bool(std::size_t)> match = [&](std::size_t i) -> bool {
        if (i == usedUavs_.size()) return true;
        for (int g : options[i]) {
            if (load[g] + 1 >= sc_.gcss[g].maxUavs) continue;  // strict: load must stay < maxNum
            ++load[g];
            label[i] = g;
            if (match(i + 1)) return true;
            --load[g];
            label[i] = -1;
        }
        return false;
    };
    if (!match(0)) return;

    // Assemble the witness chromosome and let the fitness gate have the final
    // word on feasibility and objective values.
    Chromosome c;
    c.assignUavs.resize(n_);
    c.pathProfile.resize(n_);
    c.sensorUsed.resize(n_);
    for (int t = 0; t < n_; ++t) {
        const auto& team = teams_[t][teamChoice_[t]];
        c.assignUavs[t] = team;
        c.pathProfile[t].assign(team.size(), 0);
        c.sensorUsed[t].assign(team.size(), task_sensor_set(sc_.tasks[t].kind).empty()
                                                ? SensorKind::EoirPlain
                                                : *task_sensor_set(sc_.tasks[t].kind).begin());
    }
    c.orderPerm = representativePerm_;
    c.gcsOf.assign(m_, 0);
    c.returnProfile.assign(m_, 0);
    for (std::size_t i = 0; i < usedUavs_.size(); ++i) {
        const int u = usedUavs_[i];
        c.gcsOf[u] = label[i];
        c.returnProfile[u] = blockReturn_[i];
        for (std::size_t legIdx = 0; legIdx < uavOrder_[i].size(); ++legIdx) {
            const int t = uavOrder_[i][legIdx];
            const auto& team = teams_[t][teamChoice_[t]];
            const int slot =
                static_cast<int>(std::find(team.begin(), team.end(), u) - team.begin());
            c.pathProfile[t][slot] = blockProfiles_[i][legIdx];
            c.sensorUsed[t][slot] = blockSensors_[i][legIdx];
        }
    }
    offer(c);
}

void ExactSearch::offer(const Chromosome& chromosome) {
    EvalResult res = evaluate(sc_, planner_, chromosome, params_);
    if (!res.report.feasible) return;
    const ObjectiveVector vec = compute_objectives(sc_, *res.plan);
    const auto proj = sel_.project(vec);
    for (const auto& inc : incumbents_)
        if (weakly_leq(inc.proj, proj)) return;  // dominated or duplicate
    std::erase_if(incumbents_, [&](const Incumbent& inc) { return weakly_leq(proj, inc.proj); });
    incumbents_.push_back({proj, {vec, chromosome}});
}

}  // namespace

ExactPofResult exact_pof(const MissionScenario& sc, const PathPlanner& planner,
                         const ObjectiveSelection& sel, double budget, bool prune,
                         const PlanParams& params) {
    ExactSearch search(sc, planner, sel, prune, params);
    ExactPofResult result;
    result.estimatedNodes = search.estimate_nodes();
    if (result.estimatedNodes > budget) {
        result.overflowed = true;
        return result;
    }
    result.points = search.run();
    return result;
}

namespace {

// Keep only mutually non-dominated points, duplicates removed.
std::vector<std::vector<double>> nondominated(std::vector<std::vector<double>> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::vector<std::vector<double>> out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        bool dom = false;
        for (std::size_t j = 0; j < pts.size() && !dom; ++j)
            dom = i != j && weakly_leq(pts[j], pts[i]) && pts[j] != pts[i];
        if (!dom) out.push_back(pts[i]);
    }
    return out;
}

double hv_2d(std::vector<std::vector<double>> pts, double ref) {
    std::sort(pts.begin(), pts.end());
    double area = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const double xNext = i + 1 < pts.size() ? pts[i + 1][0] : ref;
        area += (xNext - pts[i][0]) * (ref - pts[i][1]);
    }
    return area;
}

double hv_inclusion_exclusion(const std::vector<std::vector<double>>& pts, double ref) {
    const std::size_t k = pts.size();
    const std::size_t d = pts[0].size();
    double total = 0.0;
    for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
        double vol = 1.0;
        for (std::size_t dim = 0; dim < d; ++dim) {
            double worst = 0.0;
            for (std::size_t i = 0; i < k; ++i)
                if (mask & (std::size_t{1} << i)) worst = std::max(worst, pts[i][dim]);
            vol *= std::max(0.0, ref - worst);
        }
        total += (std::popcount(mask) % 2 == 1) ? vol : -vol;
    }
    return total;
}

Hypervolume hv_monte_carlo(const std::vector<std::vector<double>>& pts, double ref) {
    const std::size_t d = pts[0].size();
    RandomSource rng(0x9e3779b97f4a7c15ULL);
    const int samples = 1000000;
    int covered = 0;
    std::vector<double> x(d);
    for (int s = 0; s < samples; ++s) {
        for (std::size_t i = 0; i < d; ++i) x[i] = rng.real01() * ref;
        for (const auto& p : pts) {
            if (weakly_leq(p, x)) {
                ++covered;
                break;
            }
        }
    }
    const double frac = static_cast<double>(covered) / samples;
    const double box = std::pow(ref, static_cast<double>(d));
    Hypervolume hv;
    hv.value = box * frac;
    hv.standardError = box * std::sqrt(frac * (1.0 - frac) / samples);
    return hv;
}

}  // namespace

Hypervolume hypervolume_union(const std::vector<std::vector<double>>& points, double ref) {
    auto pts = nondominated(points);
    if (pts.empty()) return {};
    const std::size_t d = pts[0].size();
    if (d == 1) return {std::max(0.0, ref - pts[0][0]), 0.0};
    if (d == 2) return {hv_2d(std::move(pts), ref), 0.0};
    if (d <= 4 && pts.size() <= 20) return {hv_inclusion_exclusion(pts, ref), 0.0};
    return hv_monte_carlo(pts, ref);
}

FrontComparison hypervolume_gap(const std::vector<ObjectiveVector>& optimal,
                                const std::vector<ObjectiveVector>& approximate,
                                const ObjectiveSelection& sel) {
    if (optimal.empty() || approximate.empty())
        throw std::invalid_argument("hypervolume_gap needs two non-empty fronts");
    FrontComparison cmp;
    cmp.optimal = optimal;
    cmp.approximate = approximate;

    const std::size_t d = sel.size();
    std::vector<std::vector<double>> opt, apx;
    for (const auto& v : optimal) opt.push_back(sel.project(v));
    for (const auto& v : approximate) apx.push_back(sel.project(v));

    std::vector<double> lo(d, std::numeric_limits<double>::infinity());
    std::vector<double> hi(d, -std::numeric_limits<double>::infinity());
    for (const auto* set : {&opt, &apx}) {
        for (const auto& p : *set) {
            for (std::size_t i = 0; i < d; ++i) {
                lo[i] = std::min(lo[i], p[i]);
                hi[i] = std::max(hi[i], p[i]);
            }
        }
    }
    auto normalize = [&](std::vector<std::vector<double>>& set) {
        for (auto& p : set)
            for (std::size_t i = 0; i < d; ++i)
                p[i] = hi[i] > lo[i] ? (p[i] - lo[i]) / (hi[i] - lo[i]) : 0.0;
    };
    normalize(opt);
    normalize(apx);

    std::vector<std::vector<double>> both = opt;
    both.insert(both.end(), apx.begin(), apx.end());
    const double ref = 1.1;
    const Hypervolume hvBoth = hypervolume_union(both, ref);
    const Hypervolume hvApx = hypervolume_union(apx, ref);
    cmp.hypervolumeGap = std::max(0.0, hvBoth.value - hvApx.value);
    cmp.standardError = std::hypot(hvBoth.standardError, hvApx.standardError);
    return cmp;
}

}  // namespace uavplan
