#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "agk/symplectic.hpp"

namespace agk {

struct IntegratorConfig {
    SymplecticMethod method = SymplecticMethod::Yoshida4;
    double step = 1e-3;
    double max_time = 1e4;
    double escape_radius = 50.0;
    double crossing_refine_tol = 1e-12;
    std::int64_t max_crossings = 0;  // 0 = no cap

    void validate() const;
};

/// One refined crossing of the surface (y = 0, py > 0).
struct SectionEvent {
    std::int64_t index = 0;
    double t = 0.0;
    double x = 0.0;
    double px = 0.0;
    double energy_error = 0.0;
};

struct ChaosMetrics {
    bool escaped = false;
    std::optional<double> escape_time;
    std::int64_t crossings = 0;
    std::optional<double> second_integral_drift;
    double max_energy_error = 0.0;
};

struct SectionResult {
    std::vector<SectionEvent> events;
    ChaosMetrics metrics;
};

struct IntegrationError : std::runtime_error {
    explicit IntegrationError(const std::string& what) : std::runtime_error(what) {}
};

/// Fixed-step symplectic march with upward-crossing detection; each crossing is
/// refined on a copy of the state (one swapped-variable step with y as the
/// independent variable, then Newton corrections, bisection as fallback), so
/// the march itself is never perturbed.
SectionResult section(const PhaseState& seed, const Params& p, const IntegratorConfig& cfg);

struct SecondIntegral {
    std::string name;
    std::function<double(const RealState&)> eval;
};

/// Conserved quantity of the closed families: angular momentum for b = 0, the
/// split oscillator energies for b = -a and b = 2a; absent otherwise.
std::optional<SecondIntegral> second_integral(const Params& p);

}  // namespace agk
