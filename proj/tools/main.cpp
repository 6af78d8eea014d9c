#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <set>

#include "uavplan/dataset.hpp"
#include "uavplan/experiment.hpp"
#include "uavplan/scenario_io.hpp"

using namespace uavplan;

namespace {

struct CommonOpts {
    std::vector<std::string> scenarioFiles;
    std::vector<std::string> recipes;
    std::uint64_t seed = 1;
    int population = 1000;
    int elite = 100;
    double mutationProb = 0.1;
    int generations = 300;
    int stopGenerations = 10;
    std::string objectives = "distance,makespan";
    int gridCells = 64;
    double oracleBudget = 1e8;
    int repetitions = 10;
    std::string outDir = "out";
    std::vector<std::string> formats = {"report", "csv"};
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--scenario", o.scenarioFiles, "Scenario file (repeatable)");
    cmd->add_option("--recipe", o.recipes, "Built-in dataset recipe name (repeatable)");
    cmd->add_option("--seed", o.seed, "Master seed");
    cmd->add_option("--population", o.population, "Population size (lambda)");
    cmd->add_option("--elite", o.elite, "Elite size (mu)");
    cmd->add_option("--mutation-prob", o.mutationProb, "Mutation probability");
    cmd->add_option("--generations", o.generations, "Maximum generations");
    cmd->add_option("--stop-generations", o.stopGenerations, "POF stability horizon");
    cmd->add_option("--objectives", o.objectives, "Comma list of objectives to minimize");
    cmd->add_option("--grid-cells", o.gridCells, "Path-planning grid resolution");
    cmd->add_option("--oracle-budget", o.oracleBudget, "Exact-oracle node budget");
    cmd->add_option("--reps", o.repetitions, "Repetitions per scenario");
    cmd->add_option("--out", o.outDir, "Output directory");
    cmd->add_option("--format", o.formats, "Output formats: report, csv, plot");
}

std::vector<std::pair<std::string, MissionScenario>> gather_scenarios(const CommonOpts& o) {
    std::vector<std::pair<std::string, MissionScenario>> out;
    for (const auto& file : o.scenarioFiles) {
        MissionScenario sc = load_scenario(file);
        const auto problems = validate_scenario(sc);
        if (!problems.empty()) {
            std::cerr << file << ": invalid scenario:\n";
            for (const auto& v : problems)
                std::cerr << "  [" << v.code << "] " << v.subject << ": " << v.message << "\n";
            throw std::runtime_error("scenario validation failed");
        }
        out.push_back({std::filesystem::path(file).stem().string(), std::move(sc)});
    }
    for (const auto& name : o.recipes)
        out.push_back({name, generate_dataset(builtin_recipe(name, o.seed))});
    if (out.empty()) throw std::runtime_error("no scenarios given; use --scenario or --recipe");
    return out;
}

int run_mode(const CommonOpts& o, RunMode mode) {
    GaConfig config;
    config.populationSize = o.population;
    config.eliteSize = o.elite;
    config.mutationProbability = o.mutationProb;
    config.maxGenerations = o.generations;
    config.stopGenerations = o.stopGenerations;
    config.seed = o.seed;
    config.objectives = ObjectiveSelection::parse(o.objectives);

    const auto scenarios = gather_scenarios(o);
    const RunReport report = run_experiment(scenarios, config, mode, o.repetitions, o.oracleBudget,
                                            o.gridCells);
    const std::set<std::string> formats(o.formats.begin(), o.formats.end());
    const auto written = emit_outputs(report, o.outDir, formats);
    for (const auto& path : written) std::cout << "wrote " << path << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multi-UAV mission planning: NSGA-II solver with CSP fitness gate"};
    app.require_subcommand(1);

    CommonOpts solveOpts, sweepOpts, compareOpts;
    CLI::App* solve = app.add_subcommand("solve", "Evolve the Pareto archive per scenario");
    add_common(solve, solveOpts);
    CLI::App* sweep = app.add_subcommand("sweep", "Objective-combination study per scenario");
    add_common(sweep, sweepOpts);
    CLI::App* compare = app.add_subcommand("compare", "Evolve and compare against the exact front");
    add_common(compare, compareOpts);

    std::string genRecipe, genOut = "scenario.json";
    std::uint64_t genSeed = 1;
    CLI::App* generate = app.add_subcommand("generate", "Write a synthetic scenario file");
    generate->add_option("--recipe", genRecipe, "Recipe name")->required();
    generate->add_option("--seed", genSeed, "Generator seed");
    generate->add_option("--out", genOut, "Output file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (generate->parsed()) {
            save_scenario(generate_dataset(builtin_recipe(genRecipe, genSeed)), genOut);
            std::cout << "wrote " << genOut << "\n";
            return 0;
        }
        if (solve->parsed()) return run_mode(solveOpts, RunMode::Solve);
        if (sweep->parsed()) return run_mode(sweepOpts, RunMode::Sweep);
        if (compare->parsed()) return run_mode(compareOpts, RunMode::Compare);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
