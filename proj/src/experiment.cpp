#include "uavplan/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "uavplan/grid.hpp"
#include "uavplan/plan_eval.hpp"

namespace uavplan {

namespace {

std::string fmt(double v, const char* spec = "%.9g") {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

std::string fmt_exact(double v) { return fmt(v, "%.17g"); }

std::vector<ObjectiveSelection> sweep_selections() {
    std::vector<ObjectiveSelection> out;
    for (int i = 0; i < kObjectiveCount; ++i) out.push_back(ObjectiveSelection({i}));
    for (int i = 0; i < kObjectiveCount; ++i)
        for (int j = i + 1; j < kObjectiveCount; ++j) out.push_back(ObjectiveSelection({i, j}));
    out.push_back(ObjectiveSelection::all());
    return out;
}

ObjectiveVector archive_mean(const ParetoArchive& archive) {
    if (archive.entries.empty()) return penalty_vector();
    ObjectiveVector mean;
    for (const auto& e : archive.entries) {
        mean.nUavs += e.objectives.nUavs;
        mean.totalFlightTime += e.objectives.totalFlightTime;
        mean.totalFuel += e.objectives.totalFuel;
        mean.totalDistance += e.objectives.totalDistance;
        mean.totalCost += e.objectives.totalCost;
        mean.makespan += e.objectives.makespan;
    }
    const double k = static_cast<double>(archive.entries.size());
    mean.nUavs /= k;
    mean.totalFlightTime /= k;
    mean.totalFuel /= k;
    mean.totalDistance /= k;
    mean.totalCost /= k;
    mean.makespan /= k;
    return mean;
}

struct RepOutcome {
    EvolveResult result;
    RepSummary summary;
};

std::vector<RepOutcome> run_reps(const MissionScenario& sc, const PathPlanner& planner,
                                 const GaConfig& config, int repetitions, std::uint64_t scenarioSalt,
                                 const PlanParams& params) {
    std::vector<RepOutcome> out;
    for (int rep = 0; rep < repetitions; ++rep) {
        GaConfig repConfig = config;
        repConfig.seed = derive_seed(config.seed, scenarioSalt * 1000 + rep);
        RepOutcome o;
        o.result = evolve(sc, planner, repConfig, params);
        o.summary.rep = rep;
        o.summary.seed = repConfig.seed;
        o.summary.generationsUsed = o.result.generationsUsed;
        o.summary.convergenceGeneration = o.result.convergenceGeneration;
        o.summary.converged = o.result.converged;
        o.summary.archiveSize = o.result.archive.entries.size();
        out.push_back(std::move(o));
    }
    return out;
}

// Best repetition outside compare mode: smallest mean normalized objective
// sum, i.e. the lowest rating over the repetition means.
int pick_best_by_rating(const std::vector<RepOutcome>& reps) {
    std::vector<ObjectiveVector> means;
    means.reserve(reps.size());
    for (const auto& r : reps) means.push_back(archive_mean(r.result.archive));
    const std::vector<double> ratings = rating_batch(means);
    int best = 0;
    for (std::size_t i = 1; i < ratings.size(); ++i)
        if (ratings[i] < ratings[best]) best = static_cast<int>(i);
    return best;
}

}  // namespace

RunMode run_mode_from_string(const std::string& s) {
    if (s == "solve") return RunMode::Solve;
    if (s == "sweep") return RunMode::Sweep;
    if (s == "compare") return RunMode::Compare;
    throw std::invalid_argument("unknown run mode: " + s);
}

RunReport run_experiment(const std::vector<std::pair<std::string, MissionScenario>>& scenarios,
                         const GaConfig& config, RunMode mode, int repetitions, double oracleBudget,
                         int gridCells, const PlanParams& params) {
    RunReport report;
    report.mode = mode;
    report.config = config;
    report.repetitions = repetitions;
    report.gridCells = gridCells;

    std::uint64_t salt = 0;
    for (const auto& [id, sc] : scenarios) {
        ++salt;
        ScenarioResult result;
        result.id = id;
        result.scenario = sc;
        PathPlanner planner(Grid::for_scenario(sc, gridCells));

        if (mode == RunMode::Sweep) {
            std::vector<ObjectiveVector> means;
            for (const ObjectiveSelection& sel : sweep_selections()) {
                GaConfig cfg = config;
                cfg.objectives = sel;
                auto reps = run_reps(sc, planner, cfg, repetitions, salt, params);
                const int best = pick_best_by_rating(reps);
                SweepRow row;
                row.objectives = sel.to_string();
                row.solutions = reps[best].result.archive.entries.size();
                row.generations = reps[best].result.convergenceGeneration;
                row.mean = archive_mean(reps[best].result.archive);
                result.sweepRows.push_back(std::move(row));
                means.push_back(result.sweepRows.back().mean);
                if (sel == config.objectives) {
                    result.best = std::move(reps[best].result);
                    result.bestRep = best;
                    for (auto& r : reps) result.reps.push_back(r.summary);
                }
            }
            const auto ratings = rating_batch(means);
            for (std::size_t i = 0; i < ratings.size(); ++i) result.sweepRows[i].rating = ratings[i];
            std::stable_sort(result.sweepRows.begin(), result.sweepRows.end(),
                             [](const SweepRow& a, const SweepRow& b) { return a.rating < b.rating; });
        } else {
            auto reps = run_reps(sc, planner, config, repetitions, salt, params);
            if (mode == RunMode::Compare) {
                ExactPofResult oracle =
                    exact_pof(sc, planner, config.objectives, oracleBudget, true, params);
                result.oracleOverflow = oracle.overflowed;
                result.oracleEstimate = oracle.estimatedNodes;
                result.optimalFront = oracle.vectors();
                int best = 0;
                for (std::size_t i = 0; i < reps.size(); ++i) {
                    auto& rep = reps[i];
                    if (!oracle.overflowed && !oracle.points.empty() &&
                        !rep.result.archive.entries.empty()) {
                        const FrontComparison cmp = hypervolume_gap(
                            result.optimalFront, rep.result.archive.vectors(), config.objectives);
                        rep.summary.gap = cmp.hypervolumeGap;
                        rep.summary.gapValid = true;
                        if (!reps[best].summary.gapValid ||
                            rep.summary.gap < reps[best].summary.gap)
                            best = static_cast<int>(i);
                    }
                }
                result.bestRep = best;
                if (reps[best].summary.gapValid) {
                    result.bestGap = reps[best].summary.gap;
                    const FrontComparison cmp = hypervolume_gap(
                        result.optimalFront, reps[best].result.archive.vectors(), config.objectives);
                    result.gapStdErr = cmp.standardError;
                }
                result.best = std::move(reps[best].result);
                for (auto& r : reps) result.reps.push_back(r.summary);
            } else {
                const int best = pick_best_by_rating(reps);
                result.bestRep = best;
                result.best = std::move(reps[best].result);
                for (auto& r : reps) result.reps.push_back(r.summary);
            }
        }
        report.scenarios.push_back(std::move(result));
    }
    return report;
}

std::string RunReport::render() const {
    std::ostringstream os;
    os << "uavplan run report\n";
    os << "mode: " << (mode == RunMode::Solve ? "solve" : mode == RunMode::Sweep ? "sweep" : "compare")
       << "\n";
    os << "objectives: " << config.objectives.to_string() << "\n";
    os << "population: " << config.populationSize << "\n";
    os << "elite: " << config.eliteSize << "\n";
    os << "mutation-prob: " << fmt(config.mutationProbability) << "\n";
    os << "max-generations: " << config.maxGenerations << "\n";
    os << "stop-generations: " << config.stopGenerations << "\n";
    os << "master-seed: " << config.seed << "\n";
    os << "repetitions: " << repetitions << "\n";
    os << "grid-cells: " << gridCells << "\n";

    for (const auto& s : scenarios) {
        os << "\nscenario " << s.id << "\n";
        os << "  tasks: " << s.scenario.tasks.size() << "  uavs: " << s.scenario.uavs.size()
           << "  gcss: " << s.scenario.gcss.size() << "  nfzs: " << s.scenario.nfzs.size()
           << "  deps: " << s.scenario.dependencies.size() << "\n";
        for (const auto& r : s.reps) {
            os << "  rep " << r.rep << " seed=" << r.seed << " generations=" << r.generationsUsed
               << " converged-at=" << r.convergenceGeneration
               << (r.converged ? "" : " (no convergence)") << " archive=" << r.archiveSize;
            if (r.gapValid) os << " gap=" << fmt(r.gap);
            os << "\n";
        }
        if (!s.reps.empty()) os << "  best rep: " << s.bestRep << "\n";
        if (mode == RunMode::Compare) {
            if (s.oracleOverflow) {
                os << "  oracle: overflow (estimated " << fmt(s.oracleEstimate) << " nodes)\n";
            } else {
                os << "  oracle points: " << s.optimalFront.size() << " (estimated "
                   << fmt(s.oracleEstimate) << " nodes)\n";
                os << "  hypervolume gap: " << fmt(s.bestGap);
                if (s.gapStdErr > 0.0) os << " +- " << fmt(s.gapStdErr);
                os << "\n";
            }
        }
        if (!s.sweepRows.empty()) {
            os << "  objective sweep (" << s.sweepRows.size() << " combinations):\n";
            for (const auto& row : s.sweepRows) {
                const auto c = row.mean.components();
                os << "    [" << row.objectives << "] solutions=" << row.solutions
                   << " generations=" << row.generations << " rating=" << fmt(row.rating);
                os << " uavs=" << fmt(c[0]) << " flight-time=" << fmt(c[1]) << " fuel=" << fmt(c[2])
                   << " distance=" << fmt(c[3]) << " cost=" << fmt(c[4]) << " makespan=" << fmt(c[5])
                   << "\n";
            }
        }
        os << "  history (best rep, generation archive-size best-per-objective):\n";
        for (const auto& h : s.best.history) {
            os << "    " << h.generation << " " << h.archiveSize;
            for (double v : h.bestSelected)
                os << " " << (std::isinf(v) ? std::string("-") : fmt(v));
            os << "\n";
        }
        os << "  archive (" << s.best.archive.entries.size() << " solutions):\n";
        for (const auto& e : s.best.archive.entries) {
            const auto proj = config.objectives.project(e.objectives);
            os << "   ";
            const auto& idx = config.objectives.indices();
            for (std::size_t i = 0; i < idx.size(); ++i)
                os << " " << kObjectiveNames[idx[i]] << "=" << fmt(proj[i]);
            os << " | " << render_chromosome(s.scenario, e.chromosome) << "\n";
        }
    }
    return os.str();
}

std::string archive_to_csv(const std::vector<ObjectiveVector>& archive,
                           const ObjectiveSelection& sel) {
    std::ostringstream os;
    const auto& idx = sel.indices();
    for (std::size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << kObjectiveNames[idx[i]];
    os << "\n";
    for (const auto& v : archive) {
        const auto proj = sel.project(v);
        for (std::size_t i = 0; i < proj.size(); ++i) os << (i ? "," : "") << fmt_exact(proj[i]);
        os << "\n";
    }
    return os.str();
}

std::vector<std::vector<double>> archive_from_csv(const std::string& text,
                                                  std::vector<std::string>* headerOut) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("archive csv: empty input");
    if (headerOut) {
        headerOut->clear();
        std::stringstream hs(line);
        std::string tok;
        while (std::getline(hs, tok, ',')) headerOut->push_back(tok);
    }
    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::stringstream ls(line);
        std::string tok;
        while (std::getline(ls, tok, ',')) row.push_back(std::stod(tok));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<std::string> emit_outputs(const RunReport& report, const std::string& outDir,
                                      const std::set<std::string>& formats) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(outDir, ec);
    if (ec) throw std::runtime_error("cannot create output directory: " + outDir);

    std::vector<std::string> written;
    auto write_file = [&](const std::string& name, const std::string& content) {
        const std::string path = (fs::path(outDir) / name).string();
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot write " + path);
        out << content;
        written.push_back(path);
    };

    if (formats.count("report")) write_file("report.txt", report.render());
    if (formats.count("csv")) {
        for (const auto& s : report.scenarios) {
            if (s.best.archive.entries.empty())
                std::cerr << "warning: scenario " << s.id << " has an empty archive\n";
            write_file(s.id + "_archive.csv",
                       archive_to_csv(s.best.archive.vectors(), report.config.objectives));
        }
    }
    if (formats.count("plot")) {
        for (const auto& s : report.scenarios) {
            if (report.mode != RunMode::Compare || report.config.objectives.size() != 2) continue;
            std::ostringstream os;
            os << "series,x,y\n";
            for (const auto& v : s.optimalFront) {
                const auto p = report.config.objectives.project(v);
                os << "optimal," << fmt_exact(p[0]) << "," << fmt_exact(p[1]) << "\n";
            }
            for (const auto& e : s.best.archive.entries) {
                const auto p = report.config.objectives.project(e.objectives);
                os << "approximate," << fmt_exact(p[0]) << "," << fmt_exact(p[1]) << "\n";
            }
            write_file(s.id + "_front.csv", os.str());
        }
    }
    return written;
}

}  // namespace uavplan
