#pragma once

#include <vector>

#include "scs/grid.hpp"

namespace scs {

// Number phase θ_N and difermion phase β_Δ sampled on a common lattice.
struct PhasePair {
    Grid2D theta_N;
    Grid2D beta_Delta;
};

struct GaugePotential {
    Grid2D A0;
    Grid2D A1;
};

// μ5 = (μ1−μ2)/2, μ̄ = (μ1+μ2)/2.
struct ChemPotentials {
    double mu1 = 0.0;
    double mu2 = 0.0;
    double mu5 = 0.0;
    double mu_bar = 0.0;
};

enum class RegimeLabel { InVacuum, InMediumManifest, BrokenLowEnergy, BrokenHighEnergy };

const char* regime_name(RegimeLabel label);

struct RegimeInputs {
    double rho0 = 0.0;
    double condensate_fraction = 0.0;  // in [0,1]
    double p = 0.0;
    double q_beta = 0.0;
    double q_delta = 0.0;
    double mu = 0.0;
    double m = 0.0;
};

// Cutoffs for the asymptotic orderings: "≈0" below approx_zero of the dominant
// scale, "≪" below much_less as a ratio, molecular scale when p/q_Δ exceeds
// molecular_ratio, broken symmetry when the condensate fraction exceeds
// broken_fraction.
struct RegimeThresholds {
    double approx_zero = 0.05;
    double much_less = 0.1;
    double molecular_ratio = 1.0;
    double broken_fraction = 0.5;
};

// A0 → A0 − (∂_t θ_N + ∂_x β_Δ), A1 → A1 − (∂_x θ_N + ∂_t β_Δ).
GaugePotential gauge_transform(const GaugePotential& A, const PhasePair& phases);

// Pure-gauge potential generated from zero by the given phases.
GaugePotential pure_gauge_potential(const PhasePair& phases);

// Emergent field strength E = (∂_t² − ∂_x²) β_Δ; F^{01} = −E. Needs ≥ 4 points
// per direction for the one-sided boundary stencils.
Grid2D field_strength(const Grid2D& beta_grid);

ChemPotentials chemical_potentials(double mu, double omega_Delta, double k_Delta, double omega_N,
                                   double k_N);

// Inverse of the (μ1,μ2) ↔ (μ5,μ̄) arithmetic.
ChemPotentials chem_from_mu12(double mu1, double mu2);

RegimeLabel classify_regime(const RegimeInputs& in, const RegimeThresholds& thr = {});

enum class GaugeCondition { Lorentz, Coulomb, Weyl, Dirac };

// Pointwise residual of the chosen condition for the pure-gauge potential built
// from the phases. Lorentz: (∂_t²−∂_x²)θ_N; Coulomb: ∂_x²θ_N + ∂_x∂_tβ_Δ;
// Weyl: ∂_tθ_N + ∂_xβ_Δ; Dirac: A_μA^μ − k².
Grid2D gauge_residual(GaugeCondition condition, const PhasePair& phases, double k = 0.0);

// High-energy form: E = (∂_x u_bg) θ_N, ρ_E = (∂_x² u_bg) θ_N + (∂_x u_bg)(∂_x θ_N).
struct HighEnergyField {
    std::vector<double> E;
    std::vector<double> rho_E;
};

HighEnergyField highenergy_efield(const std::vector<double>& u_bg,
                                  const std::vector<double>& theta_N, double dx);

}  // namespace scs
