#pragma once

#include <array>
#include <functional>
#include <utility>

#include "scs/algebra.hpp"

namespace scs {

// Single-particle momentum-space configuration, natural units.
// On-shell (particle branch used throughout): (E+μ)² − p² = m².
struct KinematicState {
    double E = 0.0;
    double p = 0.0;
    double m = 0.0;
    double mu = 0.0;

    double e_plus() const { return E + mu + p; }    // E₊
    double e_minus() const { return E + mu - p; }   // E₋
    double shell_residual() const { return (E + mu) * (E + mu) - p * p - m * m; }
};

enum class BoostForm {
    Rapidity,      // tanh η = p/(E+μ), cosh η = (E+μ)/m
    TrigAngle,     // tan φ = p/m, cos φ = m/(E+μ)
    ComplexAngle   // tan φ = p/m, cos φ = m/(E−μ)  (as printed for the complex form)
};

struct BoostParametrization {
    BoostForm form{};
    double value = 0.0;
};

// Both energy branches E = −μ ± sqrt(p²+m²), ascending.
std::pair<double, double> free_dispersion(double p, double m, double mu);

BoostParametrization parametrize(const KinematicState& state, BoostForm which);

// Rebuild (E, p) on the particle branch from a rapidity: E = m cosh η − μ, p = m sinh η.
KinematicState state_from_rapidity(double eta, double m, double mu);

enum class DiracOperatorForm { Linear, Hyperbolic, Trigonometric, ComplexTrig };

// Linear:        [[E+μ+p, −m], [−m, E+μ−p]]
// Hyperbolic:    Linear / m          = [[e^η, −1], [−1, e^{−η}]]
// Trigonometric: Linear / (E+μ)      = [[1+sinφ, −cosφ], [−cosφ, 1−sinφ]]
// ComplexTrig:   [[e^{−iφ}, −1], [−1, e^{iφ}]] with cos φ = m/(E−μ), sin φ = p/(E−μ)
Matrix2c dirac_operator(const KinematicState& state, DiracOperatorForm form);

// Unnormalized plane-wave amplitude (the phase e^{i(px−Et)} excluded):
//   Hyperbolic: (sqrt((E+μ−p)/m), sqrt(m/(E+μ−p)))
//   Complex:    (sqrt((E+μ)/(m−ip)), sqrt((m−ip)/(E+μ)))
Spinor plane_wave_amplitude(const KinematicState& state, GammaRep rep);

SpinorField plane_wave(const KinematicState& state, GammaRep rep);

Spinor normalized_l2(const Spinor& s);

// Residuals of the two printed component equations of the complex representation,
// evaluated on that representation's printed plane-wave amplitude. The momentum-space
// operator (ComplexTrig form) is the source of truth; these are recorded for audit
// and are generally nonzero at μ ≠ 0.
std::array<cdouble, 2> complex_rep_equation_residuals(const KinematicState& state);

}  // namespace scs
