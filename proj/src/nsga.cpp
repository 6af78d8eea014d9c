#include "uavplan/nsga.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace uavplan {

std::vector<FrontInfo> nsga2_rank(const std::vector<ObjectiveVector>& pop,
                                  const ObjectiveSelection& sel) {
    const std::size_t n = pop.size();
    std::vector<FrontInfo> info(n);
    std::vector<std::vector<std::size_t>> dominated(n);
    std::vector<int> dominationCount(n, 0);
    std::vector<std::vector<std::size_t>> fronts;

    std::vector<std::size_t> current;
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = 0; q < n; ++q) {
            if (p == q) continue;
            if (dominates(pop[p], pop[q], sel)) dominated[p].push_back(q);
            else if (dominates(pop[q], pop[p], sel)) ++dominationCount[p];
        }
        if (dominationCount[p] == 0) {
            info[p].rank = 0;
            current.push_back(p);
        }
    }
    while (!current.empty()) {
        fronts.push_back(current);
        std::vector<std::size_t> next;
        for (std::size_t p : current) {
            for (std::size_t q : dominated[p]) {
                if (--dominationCount[q] == 0) {
                    info[q].rank = static_cast<int>(fronts.size());
                    next.push_back(q);
                }
            }
        }
        current = std::move(next);
    }

    const double inf = std::numeric_limits<double>::infinity();
    for (const auto& front : fronts) {
        for (int obj : sel.indices()) {
            std::vector<std::size_t> order = front;
            std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
                const double va = pop[a].components()[obj];
                const double vb = pop[b].components()[obj];
                if (va != vb) return va < vb;
                return a < b;
            });
            const double lo = pop[order.front()].components()[obj];
            const double hi = pop[order.back()].components()[obj];
            info[order.front()].crowding = inf;
            info[order.back()].crowding = inf;
            if (hi <= lo) continue;  // degenerate objective on this front
            for (std::size_t k = 1; k + 1 < order.size(); ++k) {
                if (std::isinf(info[order[k]].crowding)) continue;
                const double prev = pop[order[k - 1]].components()[obj];
                const double next = pop[order[k + 1]].components()[obj];
                info[order[k]].crowding += (next - prev) / (hi - lo);
            }
        }
    }
    return info;
}

std::vector<ObjectiveVector> ParetoArchive::vectors() const {
    std::vector<ObjectiveVector> out;
    out.reserve(entries.size());
    for (const auto& e : entries) out.push_back(e.objectives);
    return out;
}

namespace {

// Canonical rounded key for archive-equality comparisons (1e-9 grid).
std::vector<long long> rounded_key(const ObjectiveVector& v, const ObjectiveSelection& sel) {
    std::vector<long long> key;
    for (double x : sel.project(v)) key.push_back(std::llround(x * 1e9));
    return key;
}

}  // namespace

bool ParetoArchive::same_vectors(const ParetoArchive& other, const ObjectiveSelection& sel) const {
    if (entries.size() != other.entries.size()) return false;
    std::vector<std::vector<long long>> a, b;
    for (const auto& e : entries) a.push_back(rounded_key(e.objectives, sel));
    for (const auto& e : other.entries) b.push_back(rounded_key(e.objectives, sel));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

ParetoArchive make_archive(const std::vector<RankedIndividual>& population,
                           const ObjectiveSelection& sel) {
    ParetoArchive archive;
    for (const auto& ind : population) {
        if (!ind.objectives.feasible) continue;
        bool dominatedByArchive = false;
        for (const auto& e : archive.entries) {
            if (dominates(e.objectives, ind.objectives, sel) ||
                sel.project(e.objectives) == sel.project(ind.objectives)) {
                dominatedByArchive = true;
                break;
            }
        }
        if (dominatedByArchive) continue;
        std::erase_if(archive.entries, [&](const ArchiveEntry& e) {
            return dominates(ind.objectives, e.objectives, sel);
        });
        archive.entries.push_back({ind.chromosome, ind.objectives});
    }
    std::sort(archive.entries.begin(), archive.entries.end(),
              [&](const ArchiveEntry& a, const ArchiveEntry& b) {
                  return sel.project(a.objectives) < sel.project(b.objectives);
              });
    return archive;
}

namespace {

std::vector<int> sample_team(const MissionScenario& sc, int task, RandomSource& rng) {
    const TaskSpec& t = sc.tasks[task];
    const int m = static_cast<int>(sc.uavs.size());
    const int k = t.requiredUavCount;
    std::vector<int> compatible, rest;
    for (int u = 0; u < m; ++u) {
        if (uav_compatible(t.kind, sc.uavs[u])) compatible.push_back(u);
        else rest.push_back(u);
    }
    std::vector<int> team;
    if (static_cast<int>(compatible.size()) >= k) {
        for (std::size_t idx : rng.sample_distinct(compatible.size(), k))
            team.push_back(compatible[idx]);
    } else {
        // Not enough compatible UAVs: fill up and let the fitness gate penalize.
        team = compatible;
        const int missing = k - static_cast<int>(team.size());
        for (std::size_t idx : rng.sample_distinct(rest.size(), missing)) team.push_back(rest[idx]);
    }
    return team;
}

SensorKind sample_sensor(const MissionScenario& sc, int task, int uav, RandomSource& rng) {
    const TaskSpec& t = sc.tasks[task];
    auto valid = valid_task_sensors(t.kind, sc.uavs[uav]);
    const auto& domain = valid.empty() ? task_sensor_set(t.kind) : valid;
    std::vector<SensorKind> opts(domain.begin(), domain.end());
    return opts[rng.index(opts.size())];
}

void resample_task_entries(const MissionScenario& sc, Chromosome& c, int task, RandomSource& rng) {
    const auto team = sample_team(sc, task, rng);
    c.assignUavs[task] = team;
    c.pathProfile[task].resize(team.size());
    c.sensorUsed[task].resize(team.size());
    for (std::size_t j = 0; j < team.size(); ++j) {
        c.pathProfile[task][j] = static_cast<int>(rng.index(sc.uavs[team[j]].profiles.size()));
        c.sensorUsed[task][j] = sample_sensor(sc, task, team[j], rng);
    }
}

}  // namespace

Chromosome random_chromosome(const MissionScenario& sc, RandomSource& rng) {
    const int n = static_cast<int>(sc.tasks.size());
    const int m = static_cast<int>(sc.uavs.size());
    Chromosome c;
    c.assignUavs.resize(n);
    c.pathProfile.resize(n);
    c.sensorUsed.resize(n);
    for (int t = 0; t < n; ++t) resample_task_entries(sc, c, t, rng);
    c.orderPerm.resize(n);
    for (int i = 0; i < n; ++i) c.orderPerm[i] = i;
    rng.shuffle(c.orderPerm);
    c.gcsOf.resize(m);
    c.returnProfile.resize(m);
    for (int u = 0; u < m; ++u) {
        c.gcsOf[u] = static_cast<int>(rng.index(sc.gcss.size()));
        c.returnProfile[u] = static_cast<int>(rng.index(sc.uavs[u].profiles.size()));
    }
    return c;
}

std::vector<Chromosome> init_population(const MissionScenario& sc, int count, RandomSource& rng) {
    std::vector<Chromosome> pop;
    pop.reserve(count);
    for (int i = 0; i < count; ++i) pop.push_back(random_chromosome(sc, rng));
    return pop;
}

std::vector<int> pmx(const std::vector<int>& keeper, const std::vector<int>& donor, int lo, int hi) {
    const int n = static_cast<int>(keeper.size());
    std::vector<int> child(n, -1);
    std::vector<int> posInKeeper(n, -1);
    for (int i = lo; i <= hi; ++i) {
        child[i] = keeper[i];
        posInKeeper[keeper[i]] = i;
    }
    for (int i = 0; i < n; ++i) {
        if (i >= lo && i <= hi) continue;
        int v = donor[i];
        while (posInKeeper[v] >= 0) v = donor[posInKeeper[v]];
        child[i] = v;
    }
    return child;
}

std::vector<int> insert_move(const std::vector<int>& perm, int first, int second) {
    if (first == second) return perm;
    std::vector<int> out = perm;
    const int value = out[second];
    const int anchor = out[first];
    out.erase(out.begin() + second);
    const auto it = std::find(out.begin(), out.end(), anchor);
    out.insert(it + 1, value);
    return out;
}

std::pair<Chromosome, Chromosome> crossover(const MissionScenario& sc, const Chromosome& p1,
                                            const Chromosome& p2, RandomSource& rng) {
    const int n = static_cast<int>(sc.tasks.size());
    const int m = static_cast<int>(sc.uavs.size());
    Chromosome c1 = p1, c2 = p2;

    // Alleles 1, 4, 5 swap whole per-task vectors over one shared segment, so
    // team sizes and sensor validity carry over untouched.
    {
        int a = static_cast<int>(rng.index(n));
        int b = static_cast<int>(rng.index(n));
        if (a > b) std::swap(a, b);
        for (int t = a; t <= b; ++t) {
            std::swap(c1.assignUavs[t], c2.assignUavs[t]);
            std::swap(c1.pathProfile[t], c2.pathProfile[t]);
            std::swap(c1.sensorUsed[t], c2.sensorUsed[t]);
        }
    }
    {
        int a = static_cast<int>(rng.index(n));
        int b = static_cast<int>(rng.index(n));
        if (a > b) std::swap(a, b);
        c1.orderPerm = pmx(p1.orderPerm, p2.orderPerm, a, b);
        c2.orderPerm = pmx(p2.orderPerm, p1.orderPerm, a, b);
    }
    {
        int a = static_cast<int>(rng.index(m));
        int b = static_cast<int>(rng.index(m));
        if (a > b) std::swap(a, b);
        for (int u = a; u <= b; ++u) {
            std::swap(c1.gcsOf[u], c2.gcsOf[u]);
            std::swap(c1.returnProfile[u], c2.returnProfile[u]);
        }
    }
    return {std::move(c1), std::move(c2)};
}

Chromosome mutate(const MissionScenario& sc, const Chromosome& c, double pm, RandomSource& rng) {
    const int n = static_cast<int>(sc.tasks.size());
    const int m = static_cast<int>(sc.uavs.size());
    Chromosome out = c;
    if (rng.real01() < pm) {
        resample_task_entries(sc, out, static_cast<int>(rng.index(n)), rng);
    }
    if (rng.real01() < pm && n >= 2) {
        const int first = static_cast<int>(rng.index(n));
        int second = static_cast<int>(rng.index(n));
        while (second == first) second = static_cast<int>(rng.index(n));
        out.orderPerm = insert_move(out.orderPerm, first, second);
    }
    if (rng.real01() < pm) {
        const int u = static_cast<int>(rng.index(m));
        out.gcsOf[u] = static_cast<int>(rng.index(sc.gcss.size()));
        out.returnProfile[u] = static_cast<int>(rng.index(sc.uavs[u].profiles.size()));
    }
    return out;
}

namespace {

ObjectiveVector fitness(const MissionScenario& sc, const PathPlanner& planner, const Chromosome& c,
                        const PlanParams& params) {
    EvalResult res = evaluate(sc, planner, c, params);
    if (!res.report.feasible) return penalty_vector();
    return compute_objectives(sc, *res.plan);
}

void apply_ranking(std::vector<RankedIndividual>& pop, const ObjectiveSelection& sel) {
    std::vector<ObjectiveVector> vecs;
    vecs.reserve(pop.size());
    for (const auto& ind : pop) vecs.push_back(ind.objectives);
    const auto info = nsga2_rank(vecs, sel);
    for (std::size_t i = 0; i < pop.size(); ++i) {
        pop[i].rank = info[i].rank;
        pop[i].crowding = info[i].crowding;
    }
}

// Indices sorted best-first by (rank, crowding); index breaks exact ties.
std::vector<std::size_t> best_order(const std::vector<RankedIndividual>& pop) {
    std::vector<std::size_t> order(pop.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (pop[a].rank != pop[b].rank) return pop[a].rank < pop[b].rank;
        if (pop[a].crowding != pop[b].crowding) return pop[a].crowding > pop[b].crowding;
        return a < b;
    });
    return order;
}

std::size_t roulette_pick(const std::vector<RankedIndividual>& elites, RandomSource& rng) {
    double total = 0.0;
    for (const auto& e : elites) total += 1.0 / (1.0 + e.rank);
    const double x = rng.real01() * total;
    double cum = 0.0;
    for (std::size_t i = 0; i < elites.size(); ++i) {
        cum += 1.0 / (1.0 + elites[i].rank);
        if (x < cum) return i;
    }
    return elites.size() - 1;
}

}  // namespace

EvolveResult evolve(const MissionScenario& sc, const PathPlanner& planner, const GaConfig& config,
                    const PlanParams& params) {
    RandomSource rng(config.seed);
    const ObjectiveSelection& sel = config.objectives;
    const int lambda = config.populationSize;
    const int mu = std::min(config.eliteSize, lambda);

    std::vector<RankedIndividual> pop;
    pop.reserve(lambda);
    for (Chromosome& c : init_population(sc, lambda, rng)) {
        RankedIndividual ind;
        ind.objectives = fitness(sc, planner, c, params);
        ind.chromosome = std::move(c);
        pop.push_back(std::move(ind));
    }

    EvolveResult result;
    ParetoArchive pof = make_archive(pop, sel);
    int convergence = 0;
    int generation = 0;
    apply_ranking(pop, sel);

    auto record = [&](int gen, const ParetoArchive& archive) {
        GenerationStats stats;
        stats.generation = gen;
        stats.archiveSize = archive.entries.size();
        stats.bestSelected.assign(sel.size(), std::numeric_limits<double>::infinity());
        for (const auto& ind : pop) {
            if (!ind.objectives.feasible) continue;
            const auto proj = sel.project(ind.objectives);
            for (std::size_t i = 0; i < proj.size(); ++i)
                stats.bestSelected[i] = std::min(stats.bestSelected[i], proj[i]);
        }
        result.history.push_back(std::move(stats));
    };
    record(0, pof);

    while (generation < config.maxGenerations && convergence < config.stopGenerations) {
        ++generation;
        // pop carries the (rank, crowding) of the previous survivor sort.
        const auto order = best_order(pop);
        std::vector<RankedIndividual> elites;
        elites.reserve(mu);
        for (int i = 0; i < mu; ++i) elites.push_back(pop[order[i]]);

        const int offspringBudget = lambda - mu;
        std::vector<Chromosome> offspring;
        offspring.reserve(offspringBudget);
        while (static_cast<int>(offspring.size()) < offspringBudget) {
            const auto& p1 = elites[roulette_pick(elites, rng)].chromosome;
            const auto& p2 = elites[roulette_pick(elites, rng)].chromosome;
            auto [c1, c2] = crossover(sc, p1, p2, rng);
            c1 = mutate(sc, c1, config.mutationProbability, rng);
            c2 = mutate(sc, c2, config.mutationProbability, rng);
            offspring.push_back(std::move(c1));
            if (static_cast<int>(offspring.size()) < offspringBudget)
                offspring.push_back(std::move(c2));
        }

        // (mu+lambda) survivor truncation over the old population plus the new
        // offspring; elites sit in the pool already.
        for (Chromosome& c : offspring) {
            RankedIndividual ind;
            ind.objectives = fitness(sc, planner, c, params);
            ind.chromosome = std::move(c);
            pop.push_back(std::move(ind));
        }
        apply_ranking(pop, sel);
        const auto survivorOrder = best_order(pop);
        std::vector<RankedIndividual> next;
        next.reserve(lambda);
        for (int i = 0; i < lambda; ++i) next.push_back(pop[survivorOrder[i]]);
        pop = std::move(next);

        ParetoArchive newPof = make_archive(pop, sel);
        if (newPof.same_vectors(pof, sel)) {
            ++convergence;
        } else {
            convergence = 0;
            result.convergenceGeneration = generation;
        }
        pof = std::move(newPof);
        record(generation, pof);
    }

    result.archive = std::move(pof);
    result.generationsUsed = generation;
    result.converged = convergence >= config.stopGenerations;
    result.feasibleFound = !result.archive.entries.empty();
    return result;
}

}  // namespace uavplan
