#pragma once

#include "scs/algebra.hpp"

namespace scs {

// Factor split of the dressed boost for complex Δ̄:
//   sqrt((e₊+Δ̄)/(e₋−Δ̄)) = e^η · e^ζ · φ · e^{iβ}
// with η kinematic, ζ the real background shift, φ > 0 the fourth-root magnitude
// factor, and β the internal phase.
struct FactorizedBoost {
    double eta = 0.0;
    double zeta = 0.0;
    double phi_mag = 1.0;
    double beta = 0.0;       // principal branch; sign fixed by the reconstruction identity
    double beta_printed = 0.0;  // the minus-sign combination as printed, kept for audit

    cdouble dressing() const;       // e^ζ φ e^{iβ} (background factors only)
    cdouble reconstruction() const; // e^η e^ζ φ e^{iβ}
};

// Domain: e₊ > 0, e₋ > 0, e₊ + ReΔ̄ > 0, e₋ − ReΔ̄ > 0.
FactorizedBoost factorize(double e_plus, double e_minus, cdouble delta_bar);

// Direct principal-branch value sqrt((e₊+Δ̄)/(e₋−Δ̄)).
cdouble dressed_boost_direct(double e_plus, double e_minus, cdouble delta_bar);

// ψ'_± = e^{∓ζ/2} e^{∓iβ/2} φ^{∓1/2} ψ_± (upper component is "+").
Spinor dressed_components(const FactorizedBoost& factor, const Spinor& base);

// Deep-material closed form: ψ'_± = sqrt(ρ) e^{iθ_N} (Δ̄/e₊)^{±1/2}.
Spinor large_p_limit(cdouble delta_bar, double e_plus, double rho, double theta_N);

// Leading small-p form:
//   ψ'_± = [(1+d₁q_Δ/ρ₀)/(1−d₁q_Δ/ρ₀)]^{∓1/2} e^{∓i a₁ q_β /2} sqrt(ρ₀) e^{i c₁ p}.
Spinor small_p_expansion(double d1, double q_delta, double a1, double q_beta, double rho0,
                         double c1, double p);

// Ordered product U(1)_N · boost · Δ-magnitude · Δ-phase acting on (1,1)/√2:
//   Φ_1 = e^{iθ} e^{−η/2} φ^{1/2} e^{−iβ/2} / √2,  Φ_2 with all exponents flipped.
struct ChargeField {
    cdouble phi1{};
    cdouble phi2{};
};

// (e^{−ζ/2}, e^{ζ/2})/√2; chi1·chi2 = 1/2.
struct SpinField {
    double chi1 = 0.0;
    double chi2 = 0.0;
};

ChargeField charge_field(double theta, double eta, double phi_mag, double beta);
SpinField spin_field(double zeta);

// ψ_i = √2 · χ_i · Φ_i (componentwise product of the diagonal factors).
Spinor compose(const SpinField& spin, const ChargeField& charge);

}  // namespace scs
