#include "agk/homogeneous_poly.hpp"

#include <stdexcept>

namespace agk {

HomogeneousPoly2::HomogeneousPoly2(int degree, std::vector<Rational> coef)
    : degree_(degree), coef_(std::move(coef)) {
    if (degree_ < 0) throw std::invalid_argument("HomogeneousPoly2: negative degree");
    if (coef_.size() != static_cast<std::size_t>(degree_) + 1) {
        throw std::invalid_argument("HomogeneousPoly2: coefficient count must be degree + 1");
    }
    bool all_zero = true;
    for (const auto& c : coef_) {
        if (!c.is_zero()) {
            all_zero = false;
            break;
        }
    }
    if (all_zero) throw std::invalid_argument("HomogeneousPoly2: zero polynomial");
}

HomogeneousPoly2 HomogeneousPoly2::agk_quartic(const Rational& a, const Rational& b) {
    Rational quarter(1, 4), half(1, 2);
    std::vector<Rational> c(5);
    c[4] = -(a * quarter);
    c[3] = Rational(0);
    c[2] = -((a + b) * half);
    c[1] = Rational(0);
    c[0] = -(a * quarter);
    return HomogeneousPoly2(4, std::move(c));
}

std::optional<std::pair<Rational, Rational>> HomogeneousPoly2::agk_family_params() const {
    if (degree_ != 4) return std::nullopt;
    if (!coef_[1].is_zero() || !coef_[3].is_zero()) return std::nullopt;
    if (coef_[0] != coef_[4]) return std::nullopt;
    Rational a = Rational(-4) * coef_[4];
    Rational b = Rational(-2) * coef_[2] - a;
    return std::make_pair(a, b);
}

}  // namespace agk
