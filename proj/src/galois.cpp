#include "agk/galois.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "agk/darboux.hpp"

namespace agk {

const char* to_string(VerdictLevel level) {
    switch (level) {
        case VerdictLevel::LiouvilleIntegrable: return "liouville-integrable";
        case VerdictLevel::RationalExcluded: return "rational-excluded";
        case VerdictLevel::MeromorphicExcluded: return "meromorphic-excluded";
        case VerdictLevel::NotExcluded: return "not-excluded";
        case VerdictLevel::Inconclusive: return "inconclusive";
    }
    return "?";
}

Rational triangular(std::int64_t l) {
    if (l < 0) throw std::domain_error("triangular: negative index");
    return Rational(l) * Rational(l + 1) / Rational(2);
}

namespace {

using i128 = __int128;

std::optional<std::int64_t> isqrt_exact_128(i128 n) {
    if (n < 0) return std::nullopt;
    auto seed = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    i128 r = seed;
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    if (r * r != n) return std::nullopt;
    return static_cast<std::int64_t>(r);
}

// l >= 0 with T_l = t, for integer t >= 0: 8t + 1 must be an odd square.
std::optional<std::int64_t> triangular_index(std::int64_t t) {
    if (t < 0) return std::nullopt;
    auto s = isqrt_exact_128(i128(8) * t + 1);
    if (!s) return std::nullopt;
    return (*s - 1) / 2;
}

}  // namespace

std::optional<std::int64_t> lambda1_member(const Rational& kappa) {
    if (!kappa.is_integer()) return std::nullopt;
    if (kappa.num() == std::numeric_limits<std::int64_t>::max()) return std::nullopt;
    return triangular_index(kappa.num() + 1);
}

std::optional<std::int64_t> lambda2_member(const Rational& kappa) {
    if (kappa == Rational(-2)) return std::nullopt;
    // kappa = 2(1 - T_l)/(1 + T_l)  <=>  T_l = (2 - kappa)/(2 + kappa)
    Rational t = (Rational(2) - kappa) / (Rational(2) + kappa);
    if (!t.is_integer()) return std::nullopt;
    return triangular_index(t.num());
}

bool lambda_member(const Rational& kappa) {
    return lambda1_member(kappa).has_value() && lambda2_member(kappa).has_value();
}

namespace {

bool in_z_plus(const Rational& t, const Rational& off) { return (t - off).is_integer(); }

bool in_z_pm(const Rational& t, const Rational& off) {
    return in_z_plus(t, off) || in_z_plus(t, -off);
}

bool in_half_z_pm(const Rational& t, const Rational& off) {
    return (Rational(2) * (t - off)).is_integer() || (Rational(2) * (t + off)).is_integer();
}

}  // namespace

LegendreDecision legendre_integrable(const LegendreParams& p) {
    const bool both_exact = p.nu_exact && p.mu_t_exact;
    if (p.nu_exact && p.nu.is_integer()) return {true, "case1: nu integer"};
    if (both_exact) {
        if ((p.mu_t + p.nu).is_integer()) return {true, "case1: mu+nu integer"};
        if ((p.mu_t - p.nu).is_integer()) return {true, "case1: mu-nu integer"};
    }

    // closed families over the sign orbit (+-mu_t, +-(2 nu + 1))
    if (!p.mu_t_exact) return {false, ""};
    const Rational third(1, 3), fifth(1, 5), two_fifths(2, 5), half(1, 2);
    const Rational sixth(1, 6), tenth(1, 10);
    for (int s1 : {+1, -1}) {
        Rational mu = Rational(s1) * p.mu_t;
        if (in_z_plus(mu, half)) return {true, "family (a)"};
        if (!p.nu_exact) continue;
        for (int s2 : {+1, -1}) {
            Rational nu = (s2 == 1) ? p.nu : (-p.nu - Rational(1));
            Rational sum = mu + nu;
            if (in_z_pm(mu, third) && in_half_z_pm(nu, third) && in_z_plus(sum, sixth))
                return {true, "family (b)"};
            if (in_z_pm(mu, two_fifths) && in_half_z_pm(nu, fifth) && in_z_plus(sum, tenth))
                return {true, "family (c)"};
            if (in_z_pm(mu, third) && in_half_z_pm(nu, two_fifths) && in_z_plus(sum, tenth))
                return {true, "family (d)"};
            if (in_z_pm(mu, fifth) && in_half_z_pm(nu, two_fifths) && in_z_plus(sum, tenth))
                return {true, "family (e)"};
            if (in_z_pm(mu, two_fifths) && in_half_z_pm(nu, third) && in_z_plus(sum, sixth))
                return {true, "family (f)"};
        }
    }
    return {false, ""};
}

LegendreParams legendre_params_from_kappa(const Rational& kappa, Plane plane, EnergyCase ec) {
    Rational r;
    if (plane == Plane::Gamma1) {
        r = Rational(2) * (Rational(1) + kappa);
    } else if (plane == Plane::Gamma3) {
        if (kappa == Rational(-2)) {
            throw std::domain_error("legendre_params_from_kappa: kappa = -2 on Gamma3");
        }
        r = Rational(2) * (Rational(2) - kappa) / (Rational(2) + kappa);
    } else {
        throw std::domain_error("legendre_params_from_kappa: plane must be Gamma1 or Gamma3");
    }

    LegendreParams out;
    // nu(nu+1) = r: root with the larger real part
    Rational disc = Rational(1) + Rational(4) * r;
    if (disc >= Rational(0)) {
        if (auto s = disc.exact_sqrt()) {
            out.nu = (*s - Rational(1)) / Rational(2);
            out.nu_exact = true;
            out.nu_approx = out.nu.to_double();
        } else {
            out.nu_exact = false;
            out.nu_approx = (-1.0 + std::sqrt(disc.to_double())) / 2.0;
        }
    } else {
        out.nu_exact = false;
        out.nu_approx = -0.5;  // complex pair; real part
    }

    if (ec == EnergyCase::H0) {
        out.mu_t = Rational(1);
        out.mu_t_exact = true;
        out.mu_t_squared = Rational(1);
    } else {
        out.mu_t_squared = Rational(2) * kappa + Rational(1);
        if (out.mu_t_squared >= Rational(0)) {
            if (auto s = out.mu_t_squared.exact_sqrt()) {
                out.mu_t = *s;
                out.mu_t_exact = true;
            } else {
                out.mu_t_exact = false;
            }
        } else {
            out.mu_t_exact = false;  // imaginary mu_t; the square stays exact
        }
    }
    return out;
}

namespace {

Verdict classify_exact(const RationalParams& p) {
    Verdict v;
    if (!p.a.is_zero()) v.kappa = p.kappa();

    if (p.b.is_zero()) {
        v.level = VerdictLevel::LiouvilleIntegrable;
        v.rule = "angular-momentum";
        v.witness.second_integral = "L = x*py - y*px";
        if (p.a.is_zero()) v.notes.push_back("harmonic oscillator (a = b = 0)");
        return v;
    }

    if (!p.a.is_zero()) {
        if (p.b == Rational(2) * p.a) {
            v.level = VerdictLevel::LiouvilleIntegrable;
            v.rule = "symplectic-rotation-split";
            v.witness.second_integral = "E_u = pu^2/2 - (mu/2)u^2 - (a/2)u^4, u = (x+y)/sqrt(2)";
            return v;
        }
        if (p.b == -p.a) {
            v.level = VerdictLevel::LiouvilleIntegrable;
            v.rule = "duffing-split";
            v.witness.second_integral = "E_x = px^2/2 - (mu/2)x^2 - (a/4)x^4";
            return v;
        }
    }

    if (p.a.is_zero()) {  // b != 0 here
        v.level = VerdictLevel::RationalExcluded;
        if (!p.mu.is_zero()) {
            v.rule = "mathieu-nve";
            v.notes.push_back("normal variational equation is a Mathieu equation; its Galois group is SL(2,C)");
        } else {
            v.rule = "oscillator-nve";
            v.notes.push_back("normal variational equation matches a quantum oscillator at zero energy");
        }
        return v;
    }

    const Rational kappa = *v.kappa;
    if (!p.mu.is_zero()) {
        auto l1 = lambda1_member(kappa);
        auto l2 = lambda2_member(kappa);
        if (l1 && l2) {
            v.level = VerdictLevel::NotExcluded;
            v.rule = "kappa-in-lambda";
            v.witness.l = *l1;
            return v;
        }
        v.level = VerdictLevel::MeromorphicExcluded;
        v.rule = "kappa-not-in-lambda";
        if (l1) {
            v.witness.l = *l1;
            v.notes.push_back("kappa = " + kappa.str() + " lies in Lambda1 (l = " +
                              std::to_string(*l1) + ") but not in Lambda2");
        } else if (l2) {
            v.witness.l = *l2;
            v.notes.push_back("kappa = " + kappa.str() + " lies in Lambda2 (l = " +
                              std::to_string(*l2) + ") but not in Lambda1");
        } else {
            v.notes.push_back("kappa = " + kappa.str() + " lies in neither Lambda1 nor Lambda2");
        }
        return v;
    }

    // a != 0, mu = 0: homogeneous quartic; only the rational criterion applies
    auto rep = rational_integrability_necessary(HomogeneousPoly2::agk_quartic(p.a, p.b));
    v.notes.push_back("mu = 0: Cauchy-Euler normal variational equation gives no obstruction");
    switch (rep.status) {
        case NecessaryReport::Status::Excluded:
            v.level = VerdictLevel::RationalExcluded;
            v.rule = "homogeneous-table";
            for (const auto& f : rep.findings) {
                if (f.state != LambdaFinding::State::Member && f.rational) {
                    v.notes.push_back("lambda = " + f.rational->str() + " admits no table witness");
                    break;
                }
            }
            break;
        case NecessaryReport::Status::NotExcluded:
            v.level = VerdictLevel::NotExcluded;
            v.rule = "homogeneous-table";
            break;
        case NecessaryReport::Status::Inconclusive:
            v.level = VerdictLevel::Inconclusive;
            v.rule = "homogeneous-table";
            break;
    }
    return v;
}

}  // namespace

Verdict classify(const RationalParams& p) { return classify_exact(p); }

Verdict classify(double mu, double a, double b) {
    if (!std::isfinite(mu) || !std::isfinite(a) || !std::isfinite(b)) {
        throw std::domain_error("classify: non-finite parameter");
    }
    auto rmu = Rational::from_double(mu);
    auto ra = Rational::from_double(a);
    auto rb = Rational::from_double(b);
    if (!rmu || !ra || !rb) {
        Verdict v;
        v.level = VerdictLevel::Inconclusive;
        v.rule = "parameter-snap-failed";
        v.notes.push_back("parameters are not close to rationals with denominator <= 10^6");
        return v;
    }
    Verdict v = classify_exact(RationalParams{*rmu, *ra, *rb});
    auto note_snap = [&v](const char* name, double value, const Rational& r) {
        if (r.to_double() != value) {
            v.notes.push_back(std::string(name) + " = " + std::to_string(value) + " snapped to " + r.str());
        }
    };
    note_snap("mu", mu, *rmu);
    note_snap("a", a, *ra);
    note_snap("b", b, *rb);
    return v;
}

}  // namespace agk
