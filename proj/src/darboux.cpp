#include "agk/darboux.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace agk {

using cd = std::complex<double>;

DarbouxSet darboux_points(const HomogeneousPoly2& p, double alpha) {
    if (alpha == 0.0) throw std::domain_error("darboux_points: alpha must be nonzero");
    auto fam = p.agk_family_params();
    if (!fam) throw std::invalid_argument("darboux_points: potential outside the D4 quartic family");
    const double a = fam->first.to_double();
    const double b = fam->second.to_double();

    DarbouxSet set;
    // grad V = alpha c factors through the symmetry rays:
    //   axis (x,0):      -a x^2 = alpha      -> x^2 = -alpha/a
    //   diagonal (d,+-d): -(2a+b) d^2 = alpha -> d^2 = -alpha/(2a+b)
    if (a != 0.0) {
        cd x0 = std::sqrt(cd(-alpha / a, 0.0));
        if (b == 0.0) {
            // rotational symmetry: a full circle of Darboux points
            set.degenerate_circle = true;
            set.points.push_back({x0, cd(0.0), alpha, true});
            return set;
        }
        set.points.push_back({x0, cd(0.0), alpha, false});
        set.points.push_back({cd(0.0), x0, alpha, false});
    }
    const double q = 2.0 * a + b;
    if (q != 0.0) {
        cd d = std::sqrt(cd(-alpha / q, 0.0));
        set.points.push_back({d, d, alpha, false});
        set.points.push_back({d, -d, alpha, false});
    }
    if (set.points.empty()) throw std::domain_error("darboux_points: no Darboux points (a = 2a+b = 0)");
    return set;
}

SpectrumReport hessian_spectrum(const HomogeneousPoly2& p, const DarbouxPoint& d) {
    auto h = p.hessian_eval(d.cx, d.cy);
    const cd half_tr = 0.5 * (h[0] + h[2]);
    const cd disc = std::sqrt(0.25 * (h[0] - h[2]) * (h[0] - h[2]) + h[1] * h[1]);
    const cd e1 = half_tr + disc;
    const cd e2 = half_tr - disc;

    const double trivial = d.alpha * double(p.degree() - 1);
    // c itself is an eigenvector with eigenvalue alpha(k-1); the other
    // eigenvalue is trace - trivial, which is also how we pair them up.
    const cd ev_trivial = (std::abs(e1 - cd(trivial)) <= std::abs(e2 - cd(trivial))) ? e1 : e2;
    const cd ev_other = (h[0] + h[2]) - ev_trivial;

    SpectrumReport rep;
    rep.point = d;
    rep.eigenvalues = {ev_trivial.real(), ev_other.real()};
    rep.lambda_tilde = ev_other.real();
    rep.degenerate = d.degenerate_circle;
    return rep;
}

namespace {

// Smallest distance from lambda to a table row over integer j, checked at the
// integer neighbours of the real solutions of row(j) = lambda.
double row_distance(int k, double lambda) {
    double best = std::numeric_limits<double>::infinity();
    auto consider = [&](double jreal, auto&& eval) {
        if (!std::isfinite(jreal)) return;
        for (double j : {std::floor(jreal), std::ceil(jreal)}) {
            best = std::min(best, std::abs(eval(static_cast<std::int64_t>(j)) - lambda));
        }
    };

    const double k2 = double(k) * k;
    {
        // family 1: (k^2/2) j^2 + (k(k-2)/2) j
        const double A = k2 / 2.0, B = double(k) * (k - 2) / 2.0;
        const double disc = B * B + 4.0 * A * lambda;
        auto eval = [&](std::int64_t j) { return mr_generic_family1(k, j).to_double(); };
        if (disc >= 0.0) {
            consider((-B + std::sqrt(disc)) / (2.0 * A), eval);
            consider((-B - std::sqrt(disc)) / (2.0 * A), eval);
        }
        consider(0.0, eval);
    }
    {
        // family 2: (k^2/2) j^2 + (k^2/2) j + (k-1)/2
        const double A = k2 / 2.0, B = k2 / 2.0, C = (k - 1) / 2.0 - lambda;
        const double disc = B * B - 4.0 * A * C;
        auto eval = [&](std::int64_t j) { return mr_generic_family2(k, j).to_double(); };
        if (disc >= 0.0) {
            consider((-B + std::sqrt(disc)) / (2.0 * A), eval);
            consider((-B - std::sqrt(disc)) / (2.0 * A), eval);
        }
        consider(0.0, eval);
    }
    for (const auto& row : mr_special_rows()) {
        if (row.k != k) continue;
        const double w = (lambda - row.c0.to_double()) / row.c1.to_double();
        auto eval = [&](std::int64_t j) { return mr_row_eval(row, j).to_double(); };
        if (w >= 0.0) {
            const double s = std::sqrt(w);
            consider((s - row.c2.to_double()) / row.c3.to_double(), eval);
            consider((-s - row.c2.to_double()) / row.c3.to_double(), eval);
        }
        consider(0.0, eval);
    }
    return best;
}

}  // namespace

NecessaryReport rational_integrability_necessary(const HomogeneousPoly2& p_max) {
    const int k = p_max.degree();
    if (k == -2 || k == 0 || k == 2) {
        throw std::domain_error("rational_integrability_necessary: degree in {-2, 0, 2}");
    }

    PolarForm pf = polar_form(p_max);
    LambdaReport lam = lambda_set(pf);

    NecessaryReport rep;
    rep.degenerate_circle = lam.degenerate_circle;

    bool any_excluded = false;
    bool any_inconclusive = false;
    for (std::size_t i = 0; i < lam.values.size(); ++i) {
        LambdaFinding f;
        f.value = lam.values[i];
        if (lam.exact_available) {
            f.rational = lam.exact[i];
            f.exact = true;
        } else {
            f.rational = Rational::from_double(lam.values[i]);
            if (f.rational) rep.notes.push_back("lambda " + std::to_string(lam.values[i]) +
                                                " snapped to " + f.rational->str());
        }
        if (f.rational) {
            f.witness = mr_member(k, *f.rational);
            f.state = f.witness ? LambdaFinding::State::Member : LambdaFinding::State::NonMember;
            if (!f.witness) any_excluded = true;
        } else {
            // not representable as a small rational: exclude only when the value
            // is provably separated from every row
            if (row_distance(k, f.value) > 1e-6) {
                f.state = LambdaFinding::State::IrrationalExcluded;
                any_excluded = true;
            } else {
                f.state = LambdaFinding::State::IrrationalInconclusive;
                any_inconclusive = true;
                rep.notes.push_back("non-rational lambda near a table value; inconclusive");
            }
        }
        rep.findings.push_back(std::move(f));
    }

    if (any_excluded) {
        rep.status = NecessaryReport::Status::Excluded;
    } else if (any_inconclusive) {
        rep.status = NecessaryReport::Status::Inconclusive;
    } else {
        rep.status = NecessaryReport::Status::NotExcluded;
    }
    return rep;
}

}  // namespace agk
