#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "agk/section.hpp"
#include "agk/verdict.hpp"

namespace agk {

struct GridSpec {
    int nx = 24;
    int npx = 24;
    std::optional<double> x_halfwidth;   // default: bounded-component window on the x axis
    std::optional<double> px_halfwidth;  // default: from the energy budget over the window
};

struct Scenario {
    std::string name;
    Params params;
    double h = 0.0;
    GridSpec grid;
    IntegratorConfig config;
    bool smoke = false;  // member of the quick verification subset
};

/// Built-in experiment presets. Signs follow the flow convention that makes
/// the bounded-then-escaping behaviour these presets are named for actually
/// happen; the *-mu-pos variant keeps the literal positive-mu reading.
const std::vector<Scenario>& scenario_registry();
const Scenario* find_scenario(const std::string& name);

/// Half-width of the innermost allowed band {V(x,0) <= h} on the x axis.
/// Throws when the energy surface is empty on the axis.
double axis_window(const Params& p, double h);

/// Deterministic seed lattice on (x, px) filtered by the energy discriminant.
std::vector<PhaseState> scenario_seeds(const Scenario& s);

struct SeedRun {
    int seed_index = 0;
    PhaseState seed = PhaseState::real(0, 0, 0, 0);
    SectionResult result;
};

struct ScenarioDataset {
    Scenario scenario;
    std::vector<SeedRun> runs;
};

/// Runs every grid seed (in parallel; output ordered by seed index).
ScenarioDataset run_scenario(const Scenario& s);

/// Aggregate for parameter sweeps: escape fraction over the grid, mean
/// conserved-quantity drift over non-escaping seeds (when defined).
struct SweepPoint {
    double value = 0.0;
    int seeds = 0;
    int escaped = 0;
    double escape_fraction = 0.0;
    std::optional<double> mean_drift;
    Verdict verdict;
};

SweepPoint sweep_point(double value, const Params& p, double h, const GridSpec& grid,
                       const IntegratorConfig& cfg);

/// Worker cap: AGK_THREADS when set, hardware concurrency otherwise.
int worker_count();
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace agk
