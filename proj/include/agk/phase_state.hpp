#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace agk {

/// Phase-space point (x, y, px, py). Tagged real/complex: the real mode stores
/// plain doubles so the integration layer never touches complex arithmetic,
/// and rejects any nonzero imaginary part at construction.
class PhaseState {
public:
    using cd = std::complex<double>;

    static PhaseState real(double x, double y, double px, double py) {
        PhaseState s;
        s.complex_mode_ = false;
        s.re_ = {x, y, px, py};
        s.im_ = {0.0, 0.0, 0.0, 0.0};
        s.check_finite();
        return s;
    }

    static PhaseState complex(cd x, cd y, cd px, cd py) {
        PhaseState s;
        s.complex_mode_ = true;
        s.re_ = {x.real(), y.real(), px.real(), py.real()};
        s.im_ = {x.imag(), y.imag(), px.imag(), py.imag()};
        s.check_finite();
        return s;
    }

    bool is_complex() const { return complex_mode_; }

    double x() const { return real_component(0); }
    double y() const { return real_component(1); }
    double px() const { return real_component(2); }
    double py() const { return real_component(3); }

    cd xc() const { return {re_[0], im_[0]}; }
    cd yc() const { return {re_[1], im_[1]}; }
    cd pxc() const { return {re_[2], im_[2]}; }
    cd pyc() const { return {re_[3], im_[3]}; }

private:
    PhaseState() = default;

    void check_finite() const {
        for (int i = 0; i < 4; ++i) {
            if (!std::isfinite(re_[i]) || !std::isfinite(im_[i])) {
                throw std::domain_error("PhaseState: non-finite component");
            }
        }
        if (!complex_mode_) {
            for (int i = 0; i < 4; ++i) {
                if (im_[i] != 0.0) throw std::domain_error("PhaseState: imaginary part in real mode");
            }
        }
    }

    double real_component(int i) const {
        if (complex_mode_ && im_[i] != 0.0) {
            throw std::domain_error("PhaseState: real accessor on complex state");
        }
        return re_[i];
    }

    bool complex_mode_ = false;
    std::array<double, 4> re_{};
    std::array<double, 4> im_{};
};

}  // namespace agk
