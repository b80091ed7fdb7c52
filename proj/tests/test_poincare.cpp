#include <doctest.h>

#include <cmath>
#include <random>

#include "agk/hamiltonian.hpp"
#include "agk/monodromy.hpp"
#include "agk/output.hpp"
#include "agk/scenarios.hpp"
#include "agk/section.hpp"

using namespace agk;

TEST_CASE("free motion is exact") {
    const Params p{0.0, 0.0, 0.0};
    RealState s{0.3, -0.2, 1.1, 0.4};
    RealState s1 = leapfrog2_step(s, p, 0.25);
    CHECK(s1.x == s.x + 0.25 * s.px);
    CHECK(s1.y == s.y + 0.25 * s.py);
    CHECK(s1.px == s.px);
    RealState s2 = yoshida4_step(s, p, 0.25);
    CHECK(s2.x == doctest::Approx(s.x + 0.25 * s.px).epsilon(1e-15));
    CHECK(s2.py == s.py);
}

TEST_CASE("steps are time reversible") {
    const Params p{-5.0, 1.0, 0.7};
    RealState s{0.4, -0.3, 0.8, 0.9};
    for (auto m : {SymplecticMethod::Leapfrog2, SymplecticMethod::Yoshida4}) {
        RealState r = symplectic_step(symplectic_step(s, p, 1e-2, m), p, -1e-2, m);
        CHECK(std::abs(r.x - s.x) < 1e-12);
        CHECK(std::abs(r.y - s.y) < 1e-12);
        CHECK(std::abs(r.px - s.px) < 1e-12);
        CHECK(std::abs(r.py - s.py) < 1e-12);
    }
}

TEST_CASE("energy-error convergence orders on the harmonic case") {
    const Params p{-1.0, 0.0, 0.0};  // xddot = -x
    auto max_energy_error = [&](SymplecticMethod m, double dt) {
        RealState s{1.0, 0.5, 0.0, -0.2};
        const double h0 = energy(s, p);
        double worst = 0.0;
        const double T = 2.0 * M_PI;
        const auto n = static_cast<long long>(T / dt);
        for (long long i = 0; i < n; ++i) {
            s = symplectic_step(s, p, dt, m);
            worst = std::max(worst, std::abs(energy(s, p) - h0));
        }
        return worst;
    };
    {
        const double e1 = max_energy_error(SymplecticMethod::Leapfrog2, 2.0 * M_PI / 200);
        const double e2 = max_energy_error(SymplecticMethod::Leapfrog2, 2.0 * M_PI / 400);
        const double order = std::log2(e1 / e2);
        CHECK(order == doctest::Approx(2.0).epsilon(0.1));
    }
    {
        const double e1 = max_energy_error(SymplecticMethod::Yoshida4, 2.0 * M_PI / 200);
        const double e2 = max_energy_error(SymplecticMethod::Yoshida4, 2.0 * M_PI / 400);
        const double order = std::log2(e1 / e2);
        CHECK(order == doctest::Approx(4.0).epsilon(0.05));
    }
}

TEST_CASE("energy-surface seeding") {
    const Params free{0.0, 0.0, 0.0};
    PhaseState boundary = seed_on_energy_surface(0.0, 0.0, 0.0, free);
    CHECK(boundary.py() == 0.0);

    const Params fig1{-5.0, 1.0, 0.0};
    PhaseState s = seed_on_energy_surface(0.0, 0.0, 5.7, fig1);
    CHECK(s.py() == doctest::Approx(std::sqrt(11.4)).epsilon(1e-14));

    CHECK_THROWS_AS(seed_on_energy_surface(0.0, 0.0, -1.0, free), OffEnergySurface);
    try {
        seed_on_energy_surface(0.0, 0.0, -1.0, free);
    } catch (const OffEnergySurface& e) {
        CHECK(e.deficit == doctest::Approx(1.0));
    }
}

TEST_CASE("free particle never returns to the section") {
    const Params p{0.0, 0.0, 0.0};
    IntegratorConfig cfg;
    cfg.max_time = 10.0;
    cfg.escape_radius = 1e9;
    auto res = section(PhaseState::real(0.0, 0.0, 0.0, 1.0), p, cfg);
    CHECK(res.events.empty());
    CHECK(!res.metrics.escaped);
}

TEST_CASE("section events sit on the surface with upward momentum") {
    const Params p{-5.0, 1.0, 0.0};
    IntegratorConfig cfg;
    cfg.max_time = 40.0;
    auto seed = seed_on_energy_surface(0.9, 0.1, 2.0, p);
    auto res = section(seed, p, cfg);
    REQUIRE(res.events.size() >= 5);
    // replay the orbit with the reference integrator and inspect y(t) there
    for (std::size_t i = 0; i < 5; ++i) {
        const auto& e = res.events[i];
        auto z = integrate_flow(p, {seed.x(), seed.y(), seed.px(), seed.py()}, 0.0, e.t);
        CHECK(std::abs(z[1]) < 1e-8);
        CHECK(z[3] > 0.0);
        CHECK(std::abs(z[0] - e.x) < 1e-6);
    }
    for (const auto& e : res.events) CHECK(e.energy_error < 1e-10);
}

TEST_CASE("second integrals of the closed families") {
    CHECK(second_integral(Params{1.0, 1.0, 0.0}).has_value());
    CHECK(second_integral(Params{1.0, 1.0, -1.0}).has_value());
    CHECK(second_integral(Params{1.0, 1.0, 2.0}).has_value());
    CHECK(!second_integral(Params{1.0, 1.0, 0.5}).has_value());

    IntegratorConfig cfg;
    cfg.max_time = 1000.0;
    for (double b : {0.0, -1.0, 2.0}) {
        const Params p{-5.0, 1.0, b};
        auto seed = seed_on_energy_surface(0.7, 0.3, 2.0, p);
        auto res = section(seed, p, cfg);
        CHECK(!res.metrics.escaped);
        REQUIRE(res.metrics.second_integral_drift.has_value());
        CHECK(*res.metrics.second_integral_drift < 1e-8);
    }
}

TEST_CASE("escape detection") {
    // positive mu pushes everything out through the escape radius
    const Params p{5.0, 1.0, 0.0};
    IntegratorConfig cfg;
    cfg.max_time = 100.0;
    auto res = section(PhaseState::real(0.5, 0.1, 0.0, 0.1), p, cfg);
    CHECK(res.metrics.escaped);
    REQUIRE(res.metrics.escape_time.has_value());
    CHECK(*res.metrics.escape_time > 0.0);
}

TEST_CASE("axis window finds the bounded component") {
    CHECK(axis_window(Params{-5.0, 1.0, 0.0}, 5.7) ==
          doctest::Approx(std::sqrt(5.0 - std::sqrt(25.0 - 4.0 * 5.7))).epsilon(1e-9));
    // annular surface: origin is forbidden at negative energy
    const double w6 = axis_window(Params{3.0, -1.0, 1.0}, -0.1);
    CHECK(w6 > 2.0);
    CHECK(w6 < 3.0);
}

TEST_CASE("scenario seeds sit on the energy level") {
    for (const char* name : {"fig1-top", "fig3-top", "fig6-top"}) {
        const Scenario* sc = find_scenario(name);
        REQUIRE(sc != nullptr);
        auto seeds = scenario_seeds(*sc);
        REQUIRE(!seeds.empty());
        for (const auto& s : seeds) {
            CHECK(std::abs(energy(s, sc->params) - sc->h) < 1e-12);
            CHECK(s.y() == 0.0);
            CHECK(s.py() >= 0.0);
        }
    }
    CHECK(find_scenario("nope") == nullptr);
}

TEST_CASE("section set is symmetric under (x, px) -> (-x, -px)") {
    Scenario s = *find_scenario("fig2-bottom");
    s.grid.nx = 6;
    s.grid.npx = 6;
    s.config.max_time = 120.0;
    auto data = run_scenario(s);
    std::vector<std::pair<double, double>> pts;
    for (const auto& run : data.runs) {
        for (const auto& e : run.result.events) pts.emplace_back(e.x, e.px);
    }
    REQUIRE(!pts.empty());
    int unmatched = 0;
    for (const auto& [x, px] : pts) {
        bool found = false;
        for (const auto& [x2, px2] : pts) {
            if (std::abs(x2 + x) < 1e-6 && std::abs(px2 + px) < 1e-6) {
                found = true;
                break;
            }
        }
        if (!found) ++unmatched;
    }
    CHECK(unmatched == 0);
}

TEST_CASE("csv output is deterministic and pinned to the column order") {
    Scenario s = *find_scenario("fig1-top");
    s.grid.nx = 4;
    s.grid.npx = 4;
    s.config.max_time = 30.0;
    auto d1 = run_scenario(s);
    auto d2 = run_scenario(s);
    const std::string e1 = events_csv(d1), e2 = events_csv(d2);
    CHECK(e1 == e2);
    CHECK(metrics_csv(d1) == metrics_csv(d2));
    CHECK(e1.rfind("scenario,seed_index,crossing_index,t,x,px,energy_error\n", 0) == 0);
    CHECK(metrics_csv(d1).rfind(
              "scenario,seed_index,escaped,escape_time,crossings,second_integral_drift,max_energy_error\n",
              0) == 0);
    const std::string svg = section_svg(d1);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("circle") != std::string::npos);
}

TEST_CASE("config validation") {
    IntegratorConfig bad;
    bad.step = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad.step = 1e-3;
    bad.crossing_refine_tol = 1e-14;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("single-point sweep equals a direct section run") {
    const Params p{-5.0, 1.0, 0.0};
    GridSpec grid;
    grid.nx = 3;
    grid.npx = 3;
    IntegratorConfig cfg;
    cfg.max_time = 50.0;
    auto pt = sweep_point(0.0, p, 2.0, grid, cfg);
    CHECK(pt.seeds > 0);
    CHECK(pt.escaped == 0);
    CHECK(pt.escape_fraction == 0.0);
    REQUIRE(pt.mean_drift.has_value());
    CHECK(*pt.mean_drift < 1e-8);
    CHECK(pt.verdict.level == VerdictLevel::LiouvilleIntegrable);
}
