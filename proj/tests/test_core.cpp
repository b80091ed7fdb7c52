#include <doctest.h>

#include <cmath>
#include <random>

#include "agk/hamiltonian.hpp"
#include "agk/params.hpp"
#include "agk/phase_state.hpp"

using namespace agk;

TEST_CASE("potential pinned values") {
    Params p{5.0, 1.0, 0.0};
    CHECK(potential(PhaseState::real(0, 0, 0, 0), p) == 0.0);
    // V(1,0) = -5/2 - 1/4 = -2.75
    CHECK(potential(PhaseState::real(1, 0, 0, 0), p) == doctest::Approx(-2.75).epsilon(1e-15));
    CHECK(energy(PhaseState::real(1, 0, 3, 0), p) == doctest::Approx(1.75).epsilon(1e-15));
    CHECK(energy(PhaseState::real(0, 0, 0, 0), p) == 0.0);
}

TEST_CASE("square symmetry of the potential") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> xd(-2.0, 2.0), pd(-3.0, 3.0);
    for (int i = 0; i < 200; ++i) {
        Params p{pd(rng), pd(rng), pd(rng)};
        const double x = xd(rng), y = xd(rng);
        const double v = potential_at(x, y, p);
        const double tol = 4.0 * std::abs(v) * 1e-16 + 1e-300;
        CHECK(std::abs(potential_at(y, x, p) - v) <= tol);
        CHECK(std::abs(potential_at(-x, y, p) - v) <= tol);
        CHECK(std::abs(potential_at(x, -y, p) - v) <= tol);
    }
}

TEST_CASE("gradient against finite differences of the potential") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> xd(-2.0, 2.0), pd(-3.0, 3.0);
    const double h = 1e-5;
    for (int i = 0; i < 100; ++i) {
        Params p{pd(rng), pd(rng), pd(rng)};
        const double x = xd(rng), y = xd(rng);
        auto g = grad_potential_at(x, y, p);
        const double fdx = (potential_at(x + h, y, p) - potential_at(x - h, y, p)) / (2 * h);
        const double fdy = (potential_at(x, y + h, p) - potential_at(x, y - h, p)) / (2 * h);
        CHECK(std::abs(g[0] - fdx) / std::max(1.0, std::abs(g[0])) < 1e-6);
        CHECK(std::abs(g[1] - fdy) / std::max(1.0, std::abs(g[1])) < 1e-6);
    }
}

TEST_CASE("hessian against finite differences of the gradient") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> xd(-2.0, 2.0), pd(-3.0, 3.0);
    const double h = 1e-5;
    for (int i = 0; i < 100; ++i) {
        Params p{pd(rng), pd(rng), pd(rng)};
        const double x = xd(rng), y = xd(rng);
        auto hess = hessian_potential_at(x, y, p);
        auto gxp = grad_potential_at(x + h, y, p), gxm = grad_potential_at(x - h, y, p);
        auto gyp = grad_potential_at(x, y + h, p), gym = grad_potential_at(x, y - h, p);
        const double vxx = (gxp[0] - gxm[0]) / (2 * h);
        const double vxy = (gyp[0] - gym[0]) / (2 * h);
        const double vyy = (gyp[1] - gym[1]) / (2 * h);
        CHECK(std::abs(hess[0] - vxx) / std::max(1.0, std::abs(hess[0])) < 1e-7);
        CHECK(std::abs(hess[1] - vxy) / std::max(1.0, std::abs(hess[1])) < 1e-7);
        CHECK(std::abs(hess[2] - vyy) / std::max(1.0, std::abs(hess[2])) < 1e-7);
    }
}

TEST_CASE("origin is an equilibrium and the axis flow is the Duffing form") {
    Params p{5.0, 1.0, 3.0};
    auto g0 = grad_potential(PhaseState::real(0, 0, 0, 0), p);
    CHECK(g0[0] == 0.0);
    CHECK(g0[1] == 0.0);
    // on (x, 0): pxdot = -dV/dx = mu x + a x^3
    for (double x : {0.3, 1.0, -1.7}) {
        auto g = grad_potential(PhaseState::real(x, 0, 0, 0), p);
        CHECK(-g[0] == doctest::Approx(p.mu * x + p.a * x * x * x).epsilon(1e-14));
        CHECK(g[1] == 0.0);
    }
}

TEST_CASE("phase state modes") {
    CHECK_THROWS_AS(PhaseState::real(std::nan(""), 0, 0, 0), std::domain_error);
    CHECK_THROWS_AS(PhaseState::complex({1, std::numeric_limits<double>::infinity()}, 0, 0, 0),
                    std::domain_error);
    auto c = PhaseState::complex({1, 2}, {0, 0}, {0, 0}, {0, 0});
    CHECK(c.is_complex());
    CHECK_THROWS_AS(c.x(), std::domain_error);
    CHECK(c.yc() == std::complex<double>(0, 0));
    CHECK(c.y() == 0.0);  // zero imaginary part is fine to read as real
    auto r = PhaseState::real(1, 2, 3, 4);
    CHECK(!r.is_complex());
    CHECK(r.px() == 3.0);
}

TEST_CASE("kappa requires a nonzero a") {
    const Params degenerate{1.0, 0.0, 2.0};
    CHECK_THROWS_AS(degenerate.kappa(), std::domain_error);
    const Params ok{1.0, 2.0, 1.0};
    CHECK(ok.kappa() == doctest::Approx(0.5));
    const RationalParams rdeg{Rational(1), Rational(0), Rational(2)};
    CHECK_THROWS_AS(rdeg.kappa(), std::domain_error);
}
