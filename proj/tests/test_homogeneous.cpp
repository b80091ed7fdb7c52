#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "agk/darboux.hpp"
#include "agk/polar.hpp"

using namespace agk;
using cd = std::complex<double>;

namespace {

Rational rat(int n, int d = 1) { return Rational(n, d); }

HomogeneousPoly2 quartic(const Rational& a, const Rational& b) {
    return HomogeneousPoly2::agk_quartic(a, b);
}

}  // namespace

TEST_CASE("polynomial type invariants") {
    CHECK_THROWS(HomogeneousPoly2(2, {rat(0), rat(0), rat(0)}));
    CHECK_THROWS(HomogeneousPoly2(2, {rat(1)}));
    auto p = quartic(rat(1), rat(2));
    CHECK(p.degree() == 4);
    auto fam = p.agk_family_params();
    REQUIRE(fam.has_value());
    CHECK(fam->first == rat(1));
    CHECK(fam->second == rat(2));
}

TEST_CASE("polar form of the quartic family") {
    // a=1, b=0: F is the constant -1/4
    auto pf0 = polar_form(quartic(rat(1), rat(0)));
    CHECK(pf0.k == 4);
    CHECK(pf0.F.coef(0).re == rat(-1, 4));
    CHECK(pf0.F.terms().size() == 1);

    // a=0, b=2: F = (1/16)(z^4 - 2 + z^-4)
    auto pf1 = polar_form(quartic(rat(0), rat(2)));
    CHECK(pf1.F.coef(4).re == rat(1, 16));
    CHECK(pf1.F.coef(0).re == rat(-1, 8));
    CHECK(pf1.F.coef(-4).re == rat(1, 16));
    CHECK(pf1.F.coef(4).im == rat(0));

    // generic: F(z^4 coefficient) = b/32, F(1) reproduces -a/4 - b/16 + 2(b/32)
    auto pf = polar_form(quartic(rat(3), rat(5)));
    CHECK(pf.F.coef(4).re == rat(5, 32));
    CHECK(pf.F.coef(0).re == rat(-3, 4) * rat(1, 1) + rat(-5, 16));
}

TEST_CASE("polar form reproduces the potential at random points") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> rd(0.2, 2.0), td(0.0, 6.283185307179586);
    std::uniform_int_distribution<int> cd_(-9, 9);
    for (int trial = 0; trial < 8; ++trial) {
        // random degree-4 member of the family plus one generic non-family quartic
        HomogeneousPoly2 p = trial % 2 == 0
                                 ? quartic(rat(cd_(rng)), rat(cd_(rng) == 0 ? 1 : cd_(rng)))
                                 : HomogeneousPoly2(4, {rat(cd_(rng)), rat(cd_(rng)), rat(cd_(rng)),
                                                        rat(cd_(rng)), rat(cd_(rng) == 0 ? 3 : cd_(rng))});
        PolarForm pf = polar_form(p);
        for (int i = 0; i < 32; ++i) {
            const double r = rd(rng), th = td(rng);
            const double x = r * std::cos(th), y = r * std::sin(th);
            const cd z = std::polar(1.0, th);
            const cd lhs = std::pow(r, pf.k) * pf.F.eval(z);
            const double rhs = p.eval(x, y);
            CHECK(std::abs(lhs - cd(rhs)) <= 1e-10 * std::max(1.0, std::abs(rhs)));
        }
    }
}

TEST_CASE("lambda set: pinned families") {
    auto l0 = lambda_set(polar_form(quartic(rat(1), rat(0))));
    CHECK(l0.degenerate_circle);
    REQUIRE(l0.exact.size() == 1);
    CHECK(l0.exact[0] == rat(4));

    auto l2 = lambda_set(polar_form(quartic(rat(1), rat(2))));
    REQUIRE(l2.exact.size() == 2);
    CHECK(l2.exact[0] == rat(0));
    CHECK(l2.exact[1] == rat(12));

    auto lm1 = lambda_set(polar_form(quartic(rat(1), rat(-1))));
    REQUIRE(lm1.exact.size() == 2);
    CHECK(lm1.exact[0] == rat(0));
    CHECK(lm1.exact[1] == rat(12));

    // kappa = -2: the diagonal root class has F = 0 and drops out
    auto ld = lambda_set(polar_form(quartic(rat(1), rat(-2))));
    REQUIRE(ld.exact.size() == 1);
    CHECK(ld.exact[0] == rat(-4));

    // a = 0: the axis root class has F = 0 and drops out
    auto la = lambda_set(polar_form(quartic(rat(0), rat(1))));
    REQUIRE(la.exact.size() == 1);
    CHECK(la.exact[0] == rat(-4));
}

TEST_CASE("closed-form lambda law and exact/numeric agreement") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> pd(-60, 60), qd(1, 10);
    int done = 0;
    while (done < 50) {
        Rational kappa(pd(rng), qd(rng));
        if (kappa == rat(-2)) continue;
        if (std::abs(kappa.to_double()) > 6.0) continue;
        auto pf = polar_form(quartic(rat(kappa.den()), rat(kappa.num())));
        auto exact = lambda_set(pf);
        auto numeric = lambda_set_numeric(pf);
        const double k1 = 4.0 + 4.0 * kappa.to_double();
        const double k2 = 4.0 - 8.0 * kappa.to_double() / (2.0 + kappa.to_double());
        std::vector<double> expect{k1};
        if (std::abs(k2 - k1) > 1e-9) expect.push_back(k2);
        if (kappa.is_zero()) expect = {4.0};
        std::sort(expect.begin(), expect.end());
        REQUIRE(exact.values.size() == expect.size());
        REQUIRE(numeric.values.size() == expect.size());
        for (std::size_t i = 0; i < expect.size(); ++i) {
            CHECK(exact.values[i] == doctest::Approx(expect[i]).epsilon(1e-12));
            CHECK(numeric.values[i] == doctest::Approx(expect[i]).epsilon(1e-9));
        }
        ++done;
    }
}

TEST_CASE("lambda set is invariant under positive scaling of the potential") {
    for (double s : {0.5, 3.0}) {
        auto base = lambda_set(polar_form(quartic(rat(1), rat(3))));
        auto scaled = lambda_set(polar_form(quartic(rat(1) * *Rational::from_double(s),
                                                    rat(3) * *Rational::from_double(s))));
        REQUIRE(base.values.size() == scaled.values.size());
        for (std::size_t i = 0; i < base.values.size(); ++i) {
            CHECK(base.values[i] == doctest::Approx(scaled.values[i]).epsilon(1e-12));
        }
    }
}

TEST_CASE("darboux points solve grad V = alpha c") {
    for (auto [a, b] : {std::pair{1, 2}, {1, -1}, {3, 5}, {-1, 1}}) {
        auto pot = quartic(rat(a), rat(b));
        auto set = darboux_points(pot, 4.0);
        CHECK(!set.degenerate_circle);
        CHECK(set.points.size() == 4);
        for (const auto& pt : set.points) {
            auto g = pot.grad_eval(pt.cx, pt.cy);
            CHECK(std::abs(g[0] - pt.alpha * pt.cx) < 1e-10);
            CHECK(std::abs(g[1] - pt.alpha * pt.cy) < 1e-10);
            CHECK(std::abs(pt.cx) + std::abs(pt.cy) > 0.0);
        }
    }
    auto circle = darboux_points(quartic(rat(1), rat(0)), 4.0);
    CHECK(circle.degenerate_circle);
    auto g = quartic(rat(1), rat(0)).grad_eval(circle.points[0].cx, circle.points[0].cy);
    CHECK(std::abs(g[0] - 4.0 * circle.points[0].cx) < 1e-10);
}

TEST_CASE("darboux scaling: c(s alpha) = sqrt(s) c(alpha)") {
    auto pot = quartic(rat(1), rat(2));
    auto s1 = darboux_points(pot, 4.0);
    auto s2 = darboux_points(pot, 8.0);
    REQUIRE(s1.points.size() == s2.points.size());
    const double root2 = std::sqrt(2.0);
    for (std::size_t i = 0; i < s1.points.size(); ++i) {
        CHECK(std::abs(s2.points[i].cx - root2 * s1.points[i].cx) < 1e-12);
        CHECK(std::abs(s2.points[i].cy - root2 * s1.points[i].cy) < 1e-12);
    }
}

TEST_CASE("hessian spectra at the Darboux points") {
    auto spec_pair = [](int a, int b) {
        auto pot = quartic(rat(a), rat(b));
        auto set = darboux_points(pot, 4.0);
        std::vector<std::array<double, 2>> out;
        for (const auto& pt : set.points) {
            auto rep = hessian_spectrum(pot, pt);
            out.push_back(rep.eigenvalues);
        }
        return out;
    };

    // b = 0: {12, 4} at the representative of the circle
    auto pot0 = quartic(rat(1), rat(0));
    auto circle = darboux_points(pot0, 4.0);
    auto rep0 = hessian_spectrum(pot0, circle.points[0]);
    CHECK(rep0.degenerate);
    CHECK(rep0.eigenvalues[0] == doctest::Approx(12.0).epsilon(1e-12));
    CHECK(rep0.eigenvalues[1] == doctest::Approx(4.0).epsilon(1e-12));

    // b = 2a: {12,12} on the axis class and {12,0} on the diagonal class
    auto s2 = spec_pair(1, 2);
    int twelves = 0, zeros = 0;
    for (auto& e : s2) {
        CHECK(e[0] == doctest::Approx(12.0).epsilon(1e-9));
        if (std::abs(e[1] - 12.0) < 1e-9) ++twelves;
        if (std::abs(e[1]) < 1e-9) ++zeros;
    }
    CHECK(twelves == 2);
    CHECK(zeros == 2);
}

TEST_CASE("spectrum pipeline equals the polar-form pipeline") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> pd(-12, 12), qd(1, 6);
    for (int trial = 0; trial < 20; ++trial) {
        Rational kappa(pd(rng), qd(rng));
        if (kappa == rat(-2) || kappa.is_zero()) continue;
        auto pot = quartic(rat(kappa.den()), rat(kappa.num()));
        auto lam = lambda_set(polar_form(pot));
        auto set = darboux_points(pot, 4.0);
        for (const auto& pt : set.points) {
            auto rep = hessian_spectrum(pot, pt);
            CHECK(rep.eigenvalues[0] == doctest::Approx(12.0).epsilon(1e-9));  // alpha = k
            bool matched = false;
            for (double v : lam.values) {
                if (std::abs(v - rep.lambda_tilde) < 1e-9) matched = true;
            }
            CHECK_MESSAGE(matched, "kappa = ", kappa.str(), " lambda = ", rep.lambda_tilde);
        }
    }
}

TEST_CASE("necessary condition over a coarse kappa grid") {
    for (int p = -6; p <= 6; ++p) {
        for (int q = 1; q <= 6; ++q) {
            Rational kappa(p, q);
            auto rep = rational_integrability_necessary(quartic(rat(q), rat(p)));
            const bool expected = kappa == rat(-1) || kappa == rat(0) || kappa == rat(2);
            CHECK_MESSAGE((rep.status == NecessaryReport::Status::NotExcluded) == expected,
                          "kappa = ", kappa.str());
        }
    }
    // kappa = 1 fails through lambda = 8
    auto rep = rational_integrability_necessary(quartic(rat(1), rat(1)));
    CHECK(rep.status == NecessaryReport::Status::Excluded);
    bool found8 = false;
    for (const auto& f : rep.findings) {
        if (f.rational && *f.rational == rat(8)) {
            found8 = true;
            CHECK(!f.witness.has_value());
        }
    }
    CHECK(found8);
}
