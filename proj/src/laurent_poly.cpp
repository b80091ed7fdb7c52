#include "agk/laurent_poly.hpp"

#include <stdexcept>

namespace agk {

void LaurentPoly::add_term(int exponent, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto it = coef_.find(exponent);
    if (it == coef_.end()) {
        coef_.emplace(exponent, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) coef_.erase(it);
}

void LaurentPoly::set_term(int exponent, const GaussianRational& c) {
    coef_.erase(exponent);
    if (!c.is_zero()) coef_.emplace(exponent, c);
}

int LaurentPoly::min_exp() const {
    if (coef_.empty()) throw std::logic_error("LaurentPoly: empty");
    return coef_.begin()->first;
}

int LaurentPoly::max_exp() const {
    if (coef_.empty()) throw std::logic_error("LaurentPoly: empty");
    return coef_.rbegin()->first;
}

GaussianRational LaurentPoly::coef(int exponent) const {
    auto it = coef_.find(exponent);
    if (it == coef_.end()) return {};
    return it->second;
}

LaurentPoly LaurentPoly::derivative() const {
    LaurentPoly d;
    for (const auto& [e, c] : coef_) {
        if (e == 0) continue;
        d.add_term(e - 1, Rational(e) * c);
    }
    return d;
}

std::complex<double> LaurentPoly::eval(std::complex<double> z) const {
    std::complex<double> acc{0.0, 0.0};
    for (const auto& [e, c] : coef_) {
        acc += c.to_complex() * std::pow(z, e);
    }
    return acc;
}

}  // namespace agk
