#include "scs/gauge.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace scs {

const char* regime_name(RegimeLabel label) {
    switch (label) {
        case RegimeLabel::InVacuum: return "in_vacuum";
        case RegimeLabel::InMediumManifest: return "in_medium_manifest";
        case RegimeLabel::BrokenLowEnergy: return "broken_low_energy";
        case RegimeLabel::BrokenHighEnergy: return "broken_high_energy";
    }
    return "unknown";
}

GaugePotential gauge_transform(const GaugePotential& A, const PhasePair& phases) {
    require_commensurate(A.A0, A.A1);
    require_commensurate(A.A0, phases.theta_N);
    require_commensurate(A.A0, phases.beta_Delta);
    GaugePotential out{map_like(A.A0), map_like(A.A1)};
    for (int it = 0; it < A.A0.nt; ++it)
        for (int ix = 0; ix < A.A0.nx; ++ix) {
            const double dth_t = deriv_t(phases.theta_N, ix, it);
            const double dth_x = deriv_x(phases.theta_N, ix, it);
            const double dbe_t = deriv_t(phases.beta_Delta, ix, it);
            const double dbe_x = deriv_x(phases.beta_Delta, ix, it);
            out.A0.at(ix, it) = A.A0.at(ix, it) - (dth_t + dbe_x);
            out.A1.at(ix, it) = A.A1.at(ix, it) - (dth_x + dbe_t);
        }
    return out;
}

GaugePotential pure_gauge_potential(const PhasePair& phases) {
    require_commensurate(phases.theta_N, phases.beta_Delta);
    GaugePotential zero{map_like(phases.theta_N), map_like(phases.theta_N)};
    return gauge_transform(zero, phases);
}

Grid2D field_strength(const Grid2D& beta_grid) {
    if (beta_grid.nx < 3 || beta_grid.nt < 3) throw std::invalid_argument("grid too small");
    Grid2D e = map_like(beta_grid);
    for (int it = 0; it < beta_grid.nt; ++it)
        for (int ix = 0; ix < beta_grid.nx; ++ix)
            e.at(ix, it) = deriv_tt(beta_grid, ix, it) - deriv_xx(beta_grid, ix, it);
    return e;
}

ChemPotentials chemical_potentials(double mu, double omega_Delta, double k_Delta, double omega_N,
                                   double k_N) {
    ChemPotentials c;
    c.mu5 = omega_Delta - k_N;
    c.mu_bar = mu - omega_N + k_Delta;
    c.mu1 = c.mu_bar + c.mu5;
    c.mu2 = c.mu_bar - c.mu5;
    return c;
}

ChemPotentials chem_from_mu12(double mu1, double mu2) {
    ChemPotentials c;
    c.mu1 = mu1;
    c.mu2 = mu2;
    c.mu5 = (mu1 - mu2) / 2.0;
    c.mu_bar = (mu1 + mu2) / 2.0;
    return c;
}

RegimeLabel classify_regime(const RegimeInputs& in, const RegimeThresholds& thr) {
    if (in.condensate_fraction >= thr.broken_fraction) {
        if (in.q_delta > 0.0 && in.p / in.q_delta > thr.molecular_ratio)
            return RegimeLabel::BrokenHighEnergy;
        return RegimeLabel::BrokenLowEnergy;
    }
    const double scale = std::max({in.m, in.p, in.q_delta, in.q_beta, in.rho0, 1e-300});
    const bool rho_zero = in.rho0 <= thr.approx_zero * scale;
    const bool mu_zero = std::abs(in.mu) <= thr.approx_zero * scale;
    if (rho_zero && mu_zero) return RegimeLabel::InVacuum;
    return RegimeLabel::InMediumManifest;
}

Grid2D gauge_residual(GaugeCondition condition, const PhasePair& phases, double k) {
    require_commensurate(phases.theta_N, phases.beta_Delta);
    const Grid2D& th = phases.theta_N;
    const Grid2D& be = phases.beta_Delta;
    Grid2D r = map_like(th);
    switch (condition) {
        case GaugeCondition::Lorentz:
            for (int it = 0; it < th.nt; ++it)
                for (int ix = 0; ix < th.nx; ++ix)
                    r.at(ix, it) = deriv_tt(th, ix, it) - deriv_xx(th, ix, it);
            return r;
        case GaugeCondition::Coulomb: {
            // ∂_x²θ + ∂_x∂_tβ; inner time derivative first.
            Grid2D bt = map_like(be);
            for (int it = 0; it < be.nt; ++it)
                for (int ix = 0; ix < be.nx; ++ix) bt.at(ix, it) = deriv_t(be, ix, it);
            for (int it = 0; it < th.nt; ++it)
                for (int ix = 0; ix < th.nx; ++ix)
                    r.at(ix, it) = deriv_xx(th, ix, it) + deriv_x(bt, ix, it);
            return r;
        }
        case GaugeCondition::Weyl:
            for (int it = 0; it < th.nt; ++it)
                for (int ix = 0; ix < th.nx; ++ix)
                    r.at(ix, it) = deriv_t(th, ix, it) + deriv_x(be, ix, it);
            return r;
        case GaugeCondition::Dirac: {
            const GaugePotential A = pure_gauge_potential(phases);
            for (int it = 0; it < th.nt; ++it)
                for (int ix = 0; ix < th.nx; ++ix) {
                    const double a0 = A.A0.at(ix, it), a1 = A.A1.at(ix, it);
                    r.at(ix, it) = a0 * a0 - a1 * a1 - k * k;
                }
            return r;
        }
    }
    throw std::invalid_argument("unknown gauge condition");
}

HighEnergyField highenergy_efield(const std::vector<double>& u_bg,
                                  const std::vector<double>& theta_N, double dx) {
    if (u_bg.size() != theta_N.size()) throw std::invalid_argument("grid mismatch");
    const int n = static_cast<int>(u_bg.size());
    if (n < 4) throw std::invalid_argument("grid too small");
    HighEnergyField out;
    out.E.resize(n);
    out.rho_E.resize(n);
    for (int i = 0; i < n; ++i) {
        const double du = deriv1_line(u_bg.data(), n, i, dx);
        const double d2u = deriv2_line(u_bg.data(), n, i, dx);
        const double dth = deriv1_line(theta_N.data(), n, i, dx);
        out.E[i] = du * theta_N[i];
        out.rho_E[i] = d2u * theta_N[i] + du * dth;
    }
    return out;
}

}  // namespace scs
