#pragma once

#include <cstdint>
#include <vector>

#include "uavplan/chromosome.hpp"
#include "uavplan/objectives.hpp"
#include "uavplan/rng.hpp"

namespace uavplan {

struct GaConfig {
    int populationSize = 1000;      // lambda, also the offspring budget
    int eliteSize = 100;            // mu
    double mutationProbability = 0.1;
    int maxGenerations = 300;
    int stopGenerations = 10;       // archive stability horizon
    std::uint64_t seed = 1;
    ObjectiveSelection objectives;  // defaults to distance, makespan
};

struct RankedIndividual {
    Chromosome chromosome;
    ObjectiveVector objectives;
    int rank = 0;
    double crowding = 0.0;
};

struct FrontInfo {
    int rank = 0;
    double crowding = 0.0;
};

// Fast non-dominated sorting plus per-front crowding distance. Boundary
// individuals of each front carry infinite crowding.
std::vector<FrontInfo> nsga2_rank(const std::vector<ObjectiveVector>& population,
                                  const ObjectiveSelection& objectives);

struct ArchiveEntry {
    Chromosome chromosome;
    ObjectiveVector objectives;
};

// Mutually non-dominated feasible set, deduplicated and canonically ordered
// by the selected objective components.
struct ParetoArchive {
    std::vector<ArchiveEntry> entries;

    std::vector<ObjectiveVector> vectors() const;
    bool same_vectors(const ParetoArchive& other, const ObjectiveSelection& sel) const;
};

ParetoArchive make_archive(const std::vector<RankedIndividual>& population,
                           const ObjectiveSelection& sel);

struct GenerationStats {
    int generation = 0;
    std::size_t archiveSize = 0;
    std::vector<double> bestSelected;  // per selected objective, feasible only
};

struct EvolveResult {
    ParetoArchive archive;
    int generationsUsed = 0;
    // Generation at which the final archive first appeared (0 = initial).
    int convergenceGeneration = 0;
    bool converged = false;
    bool feasibleFound = false;
    std::vector<GenerationStats> history;
};

// Population initialization per the encoding rules: compatible UAV teams,
// uniform permutation, uniform GCS/profile picks, sensor-valid allele 5.
std::vector<Chromosome> init_population(const MissionScenario& scenario, int count, RandomSource& rng);

Chromosome random_chromosome(const MissionScenario& scenario, RandomSource& rng);

// Per-allele crossover: one 2-point segment shared by alleles 1/4/5
// (task-indexed), PMX on the order permutation, and an independent 2-point
// segment shared by alleles 3/6 (UAV-indexed).
std::pair<Chromosome, Chromosome> crossover(const MissionScenario& scenario, const Chromosome& p1,
                                            const Chromosome& p2, RandomSource& rng);

// Per operator group (alleles 1/4/5, allele 2, alleles 3/6), applied with
// probability pm: joint uniform resample of one task, insert mutation on the
// permutation, uniform resample of one UAV's GCS and return profile.
Chromosome mutate(const MissionScenario& scenario, const Chromosome& c, double pm, RandomSource& rng);

// PMX on permutations, exposed for direct testing. The child keeps the
// parent's swatch [lo, hi] and fills the rest from the other parent,
// chasing the swatch mapping on conflicts.
std::vector<int> pmx(const std::vector<int>& keeper, const std::vector<int>& donor, int lo, int hi);

// Insert mutation: the value at `second` moves to just after the value at
// `first`.
std::vector<int> insert_move(const std::vector<int>& perm, int first, int second);

// The hybrid MOGA-CSP loop: two-phase fitness, mu-elitism with roulette
// parent selection, per-allele operators, (mu+lambda) NSGA-II survivor
// truncation, and the POF-stability stopping criterion.
EvolveResult evolve(const MissionScenario& scenario, const PathPlanner& planner,
                    const GaConfig& config, const PlanParams& params = {});

}  // namespace uavplan
