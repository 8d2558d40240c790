#pragma once

#include <array>
#include <utility>
#include <vector>

#include "scs/kinematics.hpp"

namespace scs {

// Mean-field background values. delta_bar == −conj(delta) always.
struct CondensateSet {
    double rho = 0.0;      // ⟨ψ̄γ0ψ⟩
    double sigma = 0.0;    // chiral condensate
    cdouble delta{};       // difermion
    cdouble delta_bar{};   // conjugate difermion, −Δ*
};

// E± = E + μ ± p.
struct EPair {
    double e_plus = 0.0;
    double e_minus = 0.0;
};

inline EPair e_pair(const KinematicState& s) { return {s.e_plus(), s.e_minus()}; }

using Mat4 = std::array<std::array<double, 4>, 4>;

// The 4x4 real system acting on (Re ψ̃1, Im ψ̃1, Re ψ̃2, Im ψ̃2):
//   [ σ−m      0       E₋+ReΔ   ImΔ    ]
//   [ 0        σ−m     −ImΔ     E₋+ReΔ ]
//   [ E₊−ReΔ   −ImΔ    σ−m      0      ]
//   [ ImΔ      E₊−ReΔ  0        σ−m    ]
Mat4 fourier_matrix(double E, double p, double mu, double sigma, double m, cdouble delta);

// Determinant of the matrix (LU with partial pivoting).
double det4(const Mat4& m);

double fourier_determinant(double E, double p, double mu, double sigma, double m, cdouble delta);

// Signed factor whose simple zeros locate the dispersion roots:
//   s² − ImΔ² − (E₋+ReΔ)(E₊−ReΔ),  s = σ−m.
// The full determinant equals this² + ImΔ²(E₋+ReΔ−E₊+ReΔ)², hence is nonnegative.
double reduced_dispersion(double E, double p, double mu, double sigma, double m, cdouble delta);

// The dispersion condition exactly as printed (its leading s² term included verbatim).
double dispersion_condition_printed(double E, double p, double mu, double sigma, double m,
                                    cdouble delta);

struct DispersionWindow {
    double e_min = 0.0;
    double e_max = 0.0;
    int brackets = 4096;
    bool automatic = true;  // derive [e_min, e_max] from the parameters
};

// All real E with det = 0 in the window, by sign-change bracketing of the reduced
// factor plus bisection polish; roots deduplicated at 1e−9 and accepted only if
// |det| < 1e−9 on re-substitution. No sign change → empty list.
std::vector<double> dispersion_solve(double p, double mu, double sigma, double m, cdouble delta,
                                     const DispersionWindow& window = {});

// Printed closed forms for the Fourier components (ψ̃2 anchored at 1). Near a
// dispersion root the printed forms are 0/0; the algebraically cancelled limits
// are used there so the kernel property holds at solved roots.
std::pair<cdouble, cdouble> fourier_components(double E, double p, double mu, double sigma,
                                               double m, cdouble delta);

// Dressed boost e^{η'} = sqrt((E₊+Δ̄)/(E₋−Δ̄)) split as e^η e^ζ (real Δ̄).
struct DressedBoost {
    double eta = 0.0;
    double zeta = 0.0;
    double eta_prime = 0.0;
};

DressedBoost dressed_boost(const EPair& e, double delta_bar);

Spinor dressed_plane_wave_amplitude(const KinematicState& state, double delta_bar);
SpinorField dressed_plane_wave(const KinematicState& state, double delta_bar);

// ρ = 2|φ|² cosh ζ', σ = 2|φ|², Δ = −2φ² sinh ζ', Δ̄ = 2φ*² sinh ζ'.
CondensateSet condensates_from_parameters(cdouble phi, double zeta_prime);

struct CondensateInversion {
    double phi_magnitude = 0.0;
    double zeta_prime = 0.0;
    int sign_branch = +1;  // φ = sign_branch · sqrt(σ/2), both signs valid
};

// Real-Δ̄ branch: e^{ζ'} = (ρ+Δ̄)/σ, φ = ±sqrt(σ/2). Requires ρ > |Δ̄|, σ > 0.
CondensateInversion invert_condensates(const CondensateSet& set);

}  // namespace scs
