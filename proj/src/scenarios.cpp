#include "agk/scenarios.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "agk/galois.hpp"
#include "agk/hamiltonian.hpp"

namespace agk {

int worker_count() {
    unsigned hw = std::thread::hardware_concurrency();
    int n = hw == 0 ? 1 : static_cast<int>(hw);
    if (const char* env = std::getenv("AGK_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1) n = std::min(n, cap);
    }
    return n;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    if (n == 0) return;
    const int workers = std::min(worker_count(), static_cast<int>(std::min<std::size_t>(n, 4096)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto body = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(body);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

namespace {

Scenario make(const std::string& name, double mu, double a, double b, double h, double dt,
              bool smoke = false) {
    Scenario s;
    s.name = name;
    s.params = Params{mu, a, b};
    s.h = h;
    s.config.step = dt;
    s.smoke = smoke;
    return s;
}

}  // namespace

const std::vector<Scenario>& scenario_registry() {
    static const std::vector<Scenario> reg = [] {
        std::vector<Scenario> v;
        v.push_back(make("fig1-top", -5, 1, 0, 5.7, 1e-3, true));
        v.push_back(make("fig1-bottom", -5, 1, 0.01, 5.7, 1e-3));
        v.push_back(make("fig2-top", -5, 1, 0.3, 5.7, 1e-3));
        v.push_back(make("fig2-bottom", -5, 1, 0.5, 5.7, 1e-3));
        v.push_back(make("fig3-top", -5, 1, 2, 2.0, 1e-3, true));
        v.push_back(make("fig3-middle", -5, 1, 2.8, 2.0, 1e-3));
        v.push_back(make("fig3-bottom", -5, 1, 6, 2.0, 1e-3));
        v.push_back(make("fig4-top", -5, 1, -1, 3.5, 1e-3, true));
        v.push_back(make("fig4-middle", -5, 1.8, -1, 3.5, 1e-3));
        v.push_back(make("fig4-bottom", -5, 2.08, -1, 3.5, 1e-3));
        v.push_back(make("fig4-bottom-alt", -5, 2.05, -1, 3.5, 1e-3));
        v.push_back(make("fig5-top", -1, 1, -1, 0.2, 2e-3));
        v.push_back(make("fig5-middle", -1, 1, -2.5, 0.2, 2e-3));
        v.push_back(make("fig5-bottom", -1, 1, -5, 0.2, 2e-3));
        v.push_back(make("fig6-top", 3, -1, 1, -0.1, 1e-3));
        v.push_back(make("fig6-bottom", 3, -1.1, 1, -0.1, 1e-3));
        v.push_back(make("fig1-mu-neg", -5, 1, 0, 5.7, 1e-3));
        v.push_back(make("fig1-mu-pos", 5, 1, 0, 5.7, 1e-3));
        return v;
    }();
    return reg;
}

const Scenario* find_scenario(const std::string& name) {
    for (const auto& s : scenario_registry()) {
        if (s.name == name) return &s;
    }
    return nullptr;
}

namespace {

double axis_potential(const Params& p, double x) { return potential_at(x, 0.0, p); }

// boundary of {V <= h} between an allowed xa and a forbidden xb
double bisect_boundary(const Params& p, double h, double xa, double xb) {
    for (int i = 0; i < 200 && std::abs(xb - xa) > 1e-13 * std::max(1.0, std::abs(xb)); ++i) {
        double m = 0.5 * (xa + xb);
        if (axis_potential(p, m) <= h) {
            xa = m;
        } else {
            xb = m;
        }
    }
    return 0.5 * (xa + xb);
}

}  // namespace

double axis_window(const Params& p, double h) {
    const double xcap = 8.0;
    const int n = 20000;
    const double dx = xcap / n;
    bool inside = axis_potential(p, 0.0) <= h;
    if (inside) {
        for (int i = 1; i <= n; ++i) {
            double x = i * dx;
            if (axis_potential(p, x) > h) return bisect_boundary(p, h, x - dx, x);
        }
        return xcap;
    }
    // origin forbidden: find the innermost allowed band and return its outer edge
    int start = -1;
    for (int i = 1; i <= n; ++i) {
        double x = i * dx;
        if (axis_potential(p, x) <= h) {
            start = i;
            break;
        }
    }
    if (start < 0) throw std::domain_error("axis_window: energy surface is empty on the section axis");
    for (int i = start + 1; i <= n; ++i) {
        double x = i * dx;
        if (axis_potential(p, x) > h) return bisect_boundary(p, h, x - dx, x);
    }
    return xcap;
}

std::vector<PhaseState> scenario_seeds(const Scenario& s) {
    const double w = s.grid.x_halfwidth ? *s.grid.x_halfwidth : axis_window(s.params, s.h);
    double pw;
    if (s.grid.px_halfwidth) {
        pw = *s.grid.px_halfwidth;
    } else {
        double kin = 0.0;
        for (int i = 0; i <= 400; ++i) {
            double x = -w + 2.0 * w * i / 400.0;
            kin = std::max(kin, 2.0 * (s.h - axis_potential(s.params, x)));
        }
        pw = kin > 0.0 ? std::sqrt(kin) : 0.0;
    }

    std::vector<PhaseState> seeds;
    for (int i = 0; i < s.grid.nx; ++i) {
        const double x = -w + (2.0 * w) * (i + 0.5) / s.grid.nx;
        for (int j = 0; j < s.grid.npx; ++j) {
            const double px = -pw + (2.0 * pw) * (j + 0.5) / s.grid.npx;
            const double disc = 2.0 * (s.h - axis_potential(s.params, x)) - px * px;
            if (disc < 0.0) continue;
            seeds.push_back(PhaseState::real(x, 0.0, px, std::sqrt(disc)));
        }
    }
    return seeds;
}

ScenarioDataset run_scenario(const Scenario& s) {
    ScenarioDataset out;
    out.scenario = s;
    auto seeds = scenario_seeds(s);
    out.runs.resize(seeds.size(), SeedRun{});
    parallel_for(seeds.size(), [&](std::size_t i) {
        SeedRun run;
        run.seed_index = static_cast<int>(i);
        run.seed = seeds[i];
        try {
            run.result = section(seeds[i], s.params, s.config);
        } catch (const IntegrationError& e) {
            throw IntegrationError("seed " + std::to_string(i) + ": " + e.what());
        }
        out.runs[i] = std::move(run);
    });
    return out;
}

SweepPoint sweep_point(double value, const Params& p, double h, const GridSpec& grid,
                       const IntegratorConfig& cfg) {
    Scenario s;
    s.name = "sweep";
    s.params = p;
    s.h = h;
    s.grid = grid;
    s.config = cfg;
    ScenarioDataset data = run_scenario(s);

    SweepPoint pt;
    pt.value = value;
    pt.seeds = static_cast<int>(data.runs.size());
    double drift_sum = 0.0;
    int drift_count = 0;
    for (const auto& r : data.runs) {
        if (r.result.metrics.escaped) {
            pt.escaped += 1;
        } else if (r.result.metrics.second_integral_drift) {
            drift_sum += *r.result.metrics.second_integral_drift;
            drift_count += 1;
        }
    }
    pt.escape_fraction = pt.seeds > 0 ? double(pt.escaped) / double(pt.seeds) : 0.0;
    if (drift_count > 0) pt.mean_drift = drift_sum / drift_count;
    pt.verdict = classify(p.mu, p.a, p.b);
    return pt;
}

}  // namespace agk
