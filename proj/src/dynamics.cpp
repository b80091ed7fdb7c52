#include "agk/dynamics.hpp"

#include <cmath>

namespace agk {

using cd = std::complex<double>;

const char* plane_name(Plane plane) {
    switch (plane) {
        case Plane::Gamma1: return "Gamma1";
        case Plane::Gamma2: return "Gamma2";
        case Plane::Gamma3: return "Gamma3";
        case Plane::Gamma4: return "Gamma4";
        case Plane::Gamma5: return "Gamma5";
        case Plane::Gamma6: return "Gamma6";
    }
    return "?";
}

PlaneConstraints plane_constraints(Plane plane) {
    switch (plane) {
        case Plane::Gamma1: return {{0, 1, 0, 0}, {0, 0, 0, 1}};            // y = 0, py = 0
        case Plane::Gamma2: return {{1, 0, 0, 0}, {0, 0, 1, 0}};            // x = 0, px = 0
        case Plane::Gamma3: return {{-1, 1, 0, 0}, {0, 0, -1, 1}};          // y = x, py = px
        case Plane::Gamma4: return {{1, 1, 0, 0}, {0, 0, 1, 1}};            // y = -x, py = -px
        case Plane::Gamma5: return {{-1, 1, 0, 0}, {0, 0, -1, 1}};          // duplicate of Gamma3
        case Plane::Gamma6: return {{1, 1, 0, 0}, {0, 0, 1, 1}};            // duplicate of Gamma4
    }
    throw std::logic_error("plane_constraints: bad plane");
}

PhaseState sample_on_plane(Plane plane, double u, double v) {
    switch (plane) {
        case Plane::Gamma1: return PhaseState::real(u, 0.0, v, 0.0);
        case Plane::Gamma2: return PhaseState::real(0.0, u, 0.0, v);
        case Plane::Gamma3:
        case Plane::Gamma5: return PhaseState::real(u, u, v, v);
        case Plane::Gamma4:
        case Plane::Gamma6: return PhaseState::real(u, -u, v, -v);
    }
    throw std::logic_error("sample_on_plane: bad plane");
}

namespace {

bool tangential_plane(Plane plane) { return plane == Plane::Gamma1; }
bool diagonal_plane(Plane plane) { return plane == Plane::Gamma3; }

void require_gamma13(Plane plane, const char* who) {
    if (!tangential_plane(plane) && !diagonal_plane(plane)) {
        throw std::domain_error(std::string(who) + ": use Gamma1 (also covers Gamma2) or Gamma3 (covers Gamma4..Gamma6)");
    }
}

}  // namespace

Restricted1DoF restricted_hamiltonian(Plane plane, const Params& p) {
    require_gamma13(plane, "restricted_hamiltonian");
    if (plane == Plane::Gamma1) return {p.mu, p.a};
    return {p.mu, 2.0 * p.a + p.b};
}

double particular_solution_energy(const ParticularSolution& ps) {
    if (ps.energy == EnergyCase::H0) return 0.0;
    auto r = restricted_hamiltonian(ps.plane, ps.params);
    return r.mu * r.mu / (4.0 * r.quartic);
}

Jet particular_solution_eval(const ParticularSolution& ps, double t) {
    require_gamma13(ps.plane, "particular_solution_eval");
    if (ps.branch < 1 || ps.branch > 4) throw std::domain_error("particular_solution_eval: branch 1..4");
    auto r = restricted_hamiltonian(ps.plane, ps.params);
    if (r.mu == 0.0) throw std::domain_error("particular_solution_eval: mu = 0 has no such orbit");
    if (r.quartic == 0.0) throw std::domain_error("particular_solution_eval: quartic coefficient vanishes");

    const cd I(0.0, 1.0);
    const double s = ps.sign >= 0 ? 1.0 : -1.0;
    auto check_pole = [&](cd denom, const char* where) {
        if (std::abs(denom) < 1e-8) throw PoleError(std::string("particular solution pole near ") + where);
        return denom;
    };

    if (ps.energy == EnergyCase::H0) {
        // xdot^2 = mu x^2 + (q/2) x^4
        const cd w = std::sqrt(cd(r.mu));                 // sqrt(mu)
        const cd C = std::sqrt(cd(2.0 * r.mu / r.quartic));
        const cd u = w * t;
        switch (ps.branch) {
            case 1: {
                cd ch = check_pole(std::cosh(u), "cosh = 0");
                cd x = s * I * C / ch;
                cd xd = -s * I * C * w * std::sinh(u) / (ch * ch);
                return {x, xd};
            }
            case 2: {
                cd denom = check_pole(std::cos(I * u), "cos = 0");
                cd x = s * I * C / denom;
                cd xd = s * I * C * (I * w) * std::sin(I * u) / (denom * denom);
                return {x, xd};
            }
            case 3: {
                cd denom = check_pole(std::sin(I * u), "sin = 0");
                cd x = s * I * C / denom;
                cd xd = -s * I * C * (I * w) * std::cos(I * u) / (denom * denom);
                return {x, xd};
            }
            default: {
                cd sh = check_pole(std::sinh(u), "sinh = 0");
                cd x = s * C / sh;
                cd xd = -s * C * w * std::cosh(u) / (sh * sh);
                return {x, xd};
            }
        }
    }

    // h = mu^2/(4q): xdot^2 = 2h + mu x^2 + (q/2) x^4
    const cd c = std::sqrt(cd(r.mu / 2.0));
    const cd K = std::sqrt(cd(r.mu / r.quartic));
    const cd u = c * t;
    switch (ps.branch) {
        case 1: {
            cd co = check_pole(std::cos(u), "cos = 0");
            cd x = s * K * std::sin(u) / co;
            cd xd = s * K * c / (co * co);
            return {x, xd};
        }
        case 2: {
            cd ch = check_pole(std::cosh(I * u), "cosh = 0");
            cd x = -s * I * K * std::tanh(I * u);
            cd xd = s * K * c / (ch * ch);
            return {x, xd};
        }
        case 3: {
            cd sh = check_pole(std::sinh(I * u), "sinh = 0");
            cd x = s * I * K * std::cosh(I * u) / sh;
            cd xd = s * K * c / (sh * sh);
            return {x, xd};
        }
        default: {
            cd si = check_pole(std::sin(u), "sin = 0");
            cd x = s * K * std::cos(u) / si;
            cd xd = -s * K * c / (si * si);
            return {x, xd};
        }
    }
}

Mat4c variational_rhs(Plane plane, const Params& p, cd x) {
    require_gamma13(plane, "variational_rhs");
    cd m11, m12, m22;
    const cd x2 = x * x;
    if (plane == Plane::Gamma1) {
        m11 = p.mu + 3.0 * p.a * x2;
        m22 = p.mu + (p.a + p.b) * x2;
        m12 = 0.0;
    } else {
        m11 = p.mu + (4.0 * p.a + p.b) * x2;
        m22 = m11;
        m12 = 2.0 * (p.a + p.b) * x2;
    }
    Mat4c A{};
    A[0 * 4 + 2] = 1.0;
    A[1 * 4 + 3] = 1.0;
    A[2 * 4 + 0] = m11;
    A[2 * 4 + 1] = m12;
    A[3 * 4 + 0] = m12;
    A[3 * 4 + 1] = m22;
    return A;
}

cd normal_coefficient(Plane plane, const Params& p, cd x) {
    require_gamma13(plane, "normal_coefficient");
    if (plane == Plane::Gamma1) return p.mu + (p.a + p.b) * x * x;
    return p.mu + (2.0 * p.a - p.b) * x * x;
}

MathieuCoefficients mathieu_coefficients(const Params& p, Plane plane) {
    require_gamma13(plane, "mathieu_coefficients");
    if (p.a != 0.0) throw std::domain_error("mathieu_coefficients: requires a = 0");
    if (p.mu <= 0.0) throw std::domain_error("mathieu_coefficients: requires mu > 0 for a real frequency");
    const double b = (plane == Plane::Gamma1) ? p.b : -p.b;
    return {b / 2.0 + p.mu, b / 2.0, 2.0 * std::sqrt(p.mu)};
}

PoschlTellerForm poschl_teller_form(const Rational& kappa, Plane plane, EnergyCase ec) {
    require_gamma13(plane, "poschl_teller_form");
    Rational depth;
    if (plane == Plane::Gamma1) {
        depth = Rational(2) * (Rational(1) + kappa);
    } else {
        if (kappa == Rational(-2)) throw std::domain_error("poschl_teller_form: kappa = -2 on Gamma3");
        depth = Rational(2) * (Rational(2) - kappa) / (Rational(2) + kappa);
    }
    Rational asym = (ec == EnergyCase::H0) ? Rational(1) : Rational(2) * kappa + Rational(1);
    return {depth, asym};
}

}  // namespace agk
