#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "scs/grid.hpp"

namespace scs {

using cdouble = std::complex<double>;

// Runtime numerical breakdown (NaN/divergence) with the offending step.
struct NumericalFailure : std::runtime_error {
    int step;
    explicit NumericalFailure(const std::string& what, int step_)
        : std::runtime_error(what), step(step_) {}
};

// Periodic 1d lattice of the complex pairing field and its time derivative.
struct FieldGrid {
    int nx = 0;
    double dx = 0.0;
    std::vector<cdouble> delta;
    std::vector<cdouble> delta_dt;

    FieldGrid() = default;
    FieldGrid(int nx_, double dx_) : nx(nx_), dx(dx_), delta(nx_), delta_dt(nx_) {}
};

enum class MassSign { Manifest, Broken };  // +m²|Δ|² vs −m²|Δ|² in the potential
enum class BoundaryKind { Periodic, FixedAsymptote };

struct SolverConfig {
    double dx = 0.1;
    double dt = 0.025;
    int steps = 0;
    double m_delta = 1.0;
    double g_delta = 0.0;
    MassSign sign = MassSign::Manifest;
    BoundaryKind boundary = BoundaryKind::Periodic;
    // Uniform background the field is measured against; a constant source keeps
    // Δ ≡ rho0 an exact static solution (fluctuations over a maintained medium).
    double rho0 = 0.0;
    int snapshot_every = 0;  // 0: keep only the final state
    int diag_every = 1;
};

struct DiagnosticsRow {
    double t = 0.0;
    double energy = 0.0;
    double charge = 0.0;
    double max_abs = 0.0;
    double efield_norm = 0.0;
};

struct Trajectory {
    std::vector<double> snapshot_times;
    std::vector<FieldGrid> snapshots;
    std::vector<DiagnosticsRow> diagnostics;
    FieldGrid final_state;
};

// Explicit leapfrog (velocity-Verlet) evolution of
//   ∂_t²Δ = ∂_x²Δ ∓ m_Δ²Δ − (g_Δ/6)|Δ|²Δ + S(rho0),
// upper sign Manifest, lower Broken. Refuses dt > 0.5 dx; aborts on NaN.
Trajectory evolve(const FieldGrid& initial, const SolverConfig& cfg);

double field_energy(const FieldGrid& grid, const SolverConfig& cfg);
double field_charge(const FieldGrid& grid);  // Σ Im(Δ* ∂_tΔ) dx

struct SplitField {
    std::vector<double> rho;
    std::vector<double> beta;              // unwrapped along x
    std::vector<char> phase_undefined;     // |Δ| below threshold
};

SplitField density_phase_split(const FieldGrid& grid);

// ∂_t(ρ ∂_t β) − ∂_x(ρ ∂_x β) by composed centered differences.
Grid2D continuity_residual(const Grid2D& rho, const Grid2D& beta);

// Printed traveling profile (m_Δ/sqrt(g_Δ/3)) tanh[m_Δ(x ± t)].
double kink_profile(double x, double t, double m_delta, double g_delta, int sign = +1);

// Residual ρ□ρ − m²ρ² + (g/6)ρ⁴ of the printed profile against the decoupled
// traveling equation with ω = ±k (analytic; nonzero except at the vacua).
double kink_profile_residual(double x, double t, double m_delta, double g_delta, int sign = +1);

// Four-branch asymptotic value ±(m/sqrt(g/3))[1 ± sqrt(1 + 2gC(ω²−k²)/(3m⁴))]^{1/2}.
double kink_asymptote(int outer_sign, int inner_sign, double C, double omega, double k,
                      double m_delta, double g_delta);

// Static kink of ρ'' = −m²ρ + (g/6)ρ³ on x_i = (i−(nx−1)/2)dx, ends pinned to
// the vacua ±sqrt(6)m/sqrt(g); Newton relaxation on the centered-difference
// system until the discrete residual is below 1e−10.
std::vector<double> static_kink_oracle(double m_delta, double g_delta, int nx, double dx);

// Max interior residual |ρ''_h + m²ρ − (g/6)ρ³| of a sampled profile.
double static_kink_residual(const std::vector<double>& profile, double m_delta, double g_delta,
                            double dx);

// ω = sqrt(k² + m_Δ² + g_Δ ρ₀²/2) (density branch over a uniform background).
double linearized_dispersion(double rho0, double m_delta, double g_delta, double k);

// β_Δ(x,t) = f(k_β(x ± t)) + constant.
std::function<double(double, double)> phase_mode(double k_beta, int sign,
                                                 std::function<double(double)> f,
                                                 double constant = 0.0);

struct EfieldCoupling {
    Grid2D full;        // ∂_μ ln(1+ρ/ρ₀)^{−1} ∂^μ β
    Grid2D asymptotic;  // −(1/ρ₀) ∂_μρ ∂^μβ
};

EfieldCoupling efield_coupling(const Grid2D& rho, const Grid2D& beta, double rho0);

struct TravelingParams {
    double omega_rho = 0.0;
    double k_rho = 0.0;
    double omega_beta = 0.0;
    double k_beta = 0.0;
    double C = 0.0;
    double rho_init = 1.0;
};

// r = (ω_βω_ρ − k_βk_ρ)/(ω_β² − k_β²).
double traveling_r(const TravelingParams& p);

struct Allowedness {
    bool allowed = false;
    double r = 0.0;
};

Allowedness allowedness(const TravelingParams& p);

struct TravelingSolution {
    std::vector<double> u;
    std::vector<double> rho;
    std::vector<double> beta;
    std::vector<double> E;
    std::optional<double> stop_u;  // set when the integration halted early
    std::string stop_reason;
    bool logarithmic_branch = false;
};

// RK4 integration of the traveling system; the logarithmic branch is selected
// for ω_β = 2ω_ρ, k_β = 2k_ρ exactly.
TravelingSolution traveling_integrate(const TravelingParams& p, double u_max, double du);

}  // namespace scs
