#include "agk/polar.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace agk {

namespace {

std::int64_t binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

GaussianRational minus_i_pow(int j) {
    switch (j & 3) {
        case 0: return {Rational(1), Rational(0)};
        case 1: return {Rational(0), Rational(-1)};
        case 2: return {Rational(-1), Rational(0)};
        default: return {Rational(0), Rational(1)};
    }
}

}  // namespace

PolarForm polar_form(const HomogeneousPoly2& p) {
    const int k = p.degree();
    if (k < 1) throw std::invalid_argument("polar_form: degree must be >= 1");

    // x^i y^j -> r^k (z+1/z)^i (z-1/z)^j / (2^i (2i)^j)
    LaurentPoly F;
    std::int64_t two_k = 1;
    for (int i = 0; i < k; ++i) two_k *= 2;
    for (int i = 0; i <= k; ++i) {
        const Rational& c = p.coef(i);
        if (c.is_zero()) continue;
        const int j = k - i;
        GaussianRational base = (c / Rational(two_k)) * minus_i_pow(j);
        for (int m = 0; m <= i; ++m) {
            for (int n = 0; n <= j; ++n) {
                Rational w(binom(i, m) * binom(j, n) * ((n % 2 == 0) ? 1 : -1));
                F.add_term(k - 2 * (m + n), w * base);
            }
        }
    }
    return PolarForm{k, F};
}

namespace {

// F supported on {-k, 0, k} with real coefficients and coef(k) == coef(-k):
// F' vanishes exactly on z^{2k} = 1, and both root classes give exact values
//   lambda_s = k - 2 k^2 s f_k / (f_0 + 2 s f_k),  s = +-1.
struct CosineFamily {
    Rational f0;
    Rational fk;
};

std::optional<CosineFamily> cosine_family(const PolarForm& pf) {
    const int k = pf.k;
    CosineFamily fam;
    for (const auto& [e, c] : pf.F.terms()) {
        if (!c.im.is_zero()) return std::nullopt;
        if (e == 0) {
            fam.f0 = c.re;
        } else if (e == k || e == -k) {
            // handled below
        } else {
            return std::nullopt;
        }
    }
    GaussianRational ck = pf.F.coef(k);
    GaussianRational cmk = pf.F.coef(-k);
    if (!(ck == cmk)) return std::nullopt;
    fam.fk = ck.re;
    return fam;
}

LambdaReport lambda_set_exact(int k, const CosineFamily& fam) {
    LambdaReport rep;
    rep.exact_available = true;
    if (fam.fk.is_zero()) {
        rep.degenerate_circle = true;
        rep.exact.push_back(Rational(k));
        rep.values.push_back(double(k));
        return rep;
    }
    const Rational two_k2(2 * std::int64_t(k) * k);
    for (int s : {1, -1}) {
        Rational denom = fam.f0 + Rational(2 * s) * fam.fk;
        if (denom.is_zero()) continue;  // F vanishes on this root class
        Rational lam = Rational(k) - Rational(s) * two_k2 * fam.fk / denom;
        if (std::find(rep.exact.begin(), rep.exact.end(), lam) == rep.exact.end()) {
            rep.exact.push_back(lam);
        }
    }
    std::sort(rep.exact.begin(), rep.exact.end());
    for (const auto& r : rep.exact) rep.values.push_back(r.to_double());
    return rep;
}

using cd = std::complex<double>;

cd eval_poly(const std::vector<cd>& c, cd z) {
    cd acc{0.0, 0.0};
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
}

cd eval_poly_deriv(const std::vector<cd>& c, cd z) {
    cd acc{0.0, 0.0};
    for (std::size_t i = c.size(); i-- > 1;) acc = acc * z + double(i) * c[i];
    return acc;
}

}  // namespace

LambdaReport lambda_set(const PolarForm& pf) {
    if (pf.F.is_zero()) throw std::invalid_argument("lambda_set: F is identically zero");
    if (auto fam = cosine_family(pf)) return lambda_set_exact(pf.k, *fam);
    return lambda_set_numeric(pf);
}

LambdaReport lambda_set_numeric(const PolarForm& pf) {
    if (pf.F.is_zero()) throw std::invalid_argument("lambda_set: F is identically zero");
    const int k = pf.k;

    LambdaReport rep;
    LaurentPoly d1 = pf.F.derivative();
    if (d1.is_zero()) {
        rep.degenerate_circle = true;
        rep.values.push_back(double(k));
        return rep;
    }
    LaurentPoly d2 = d1.derivative();

    // numerator of F' as an ordinary polynomial
    const int lo = d1.min_exp();
    const int deg = d1.max_exp() - lo;
    std::vector<cd> c(static_cast<std::size_t>(deg) + 1, cd{0.0, 0.0});
    for (const auto& [e, g] : d1.terms()) c[static_cast<std::size_t>(e - lo)] = g.to_complex();

    // companion-matrix roots of the monic normalization
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(deg, deg);
    for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < deg; ++i) comp(i, deg - 1) = -c[static_cast<std::size_t>(i)] / c[static_cast<std::size_t>(deg)];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
    if (es.info() != Eigen::Success) throw std::runtime_error("lambda_set: eigensolver failed");

    double fscale = 0.0;
    for (const auto& [e, g] : pf.F.terms()) fscale = std::max(fscale, std::abs(g.to_complex()));

    std::vector<cd> lambdas;
    for (int i = 0; i < deg; ++i) {
        cd z = es.eigenvalues()(i);
        for (int it = 0; it < 3; ++it) {  // Newton polish on the numerator
            cd pd = eval_poly_deriv(c, z);
            if (std::abs(pd) < 1e-300) break;
            z -= eval_poly(c, z) / pd;
        }
        if (std::abs(z) < 1e-9) continue;
        cd Fz = pf.F.eval(z);
        if (std::abs(Fz) < 1e-8 * fscale) continue;  // degenerate root class
        lambdas.push_back(cd(double(k), 0.0) - z * z * d2.eval(z) / Fz);
    }

    // cluster-deduplicate
    std::vector<cd> unique;
    for (const cd& l : lambdas) {
        bool seen = false;
        for (const cd& u : unique) {
            if (std::abs(l - u) < 1e-8) {
                seen = true;
                break;
            }
        }
        if (!seen) unique.push_back(l);
    }
    for (const cd& u : unique) {
        if (std::abs(u.imag()) > 1e-8) rep.any_nonreal = true;
        rep.values.push_back(u.real());
    }
    std::sort(rep.values.begin(), rep.values.end());
    return rep;
}

}  // namespace agk
