#include "scs/kinematics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace scs {

namespace {
constexpr cdouble I{0.0, 1.0};
constexpr double kShellTol = 1e-9;

void require_on_shell(const KinematicState& s) {
    const double r = s.shell_residual();
    const double scale = std::max({1.0, s.m * s.m, s.p * s.p, (s.E + s.mu) * (s.E + s.mu)});
    if (std::abs(r) > kShellTol * scale)
        throw std::invalid_argument("not on mass shell, residual " + std::to_string(r));
}
}  // namespace

std::pair<double, double> free_dispersion(double p, double m, double mu) {
    if (m < 0.0) throw std::invalid_argument("mass must be nonnegative");
    const double w = std::sqrt(p * p + m * m);
    return {-mu - w, -mu + w};
}

BoostParametrization parametrize(const KinematicState& state, BoostForm which) {
    switch (which) {
        case BoostForm::Rapidity: {
            require_on_shell(state);
            if (state.m <= 0.0) throw std::invalid_argument("rapidity form needs m > 0");
            // e^η = (E+μ+p)/m
            return {which, std::log(state.e_plus() / state.m)};
        }
        case BoostForm::TrigAngle: {
            require_on_shell(state);
            if (state.m <= 0.0) throw std::invalid_argument("angle form needs m > 0");
            return {which, std::atan2(state.p, state.m)};
        }
        case BoostForm::ComplexAngle: {
            // This branch normalizes by (E−μ): shell condition (E−μ)² = p²+m².
            const double em = state.E - state.mu;
            const double r = em * em - state.p * state.p - state.m * state.m;
            const double scale = std::max({1.0, state.m * state.m, state.p * state.p, em * em});
            if (std::abs(r) > kShellTol * scale)
                throw std::invalid_argument("not on mass shell, residual " + std::to_string(r));
            if (state.m <= 0.0) throw std::invalid_argument("angle form needs m > 0");
            return {which, std::atan2(state.p, state.m)};
        }
    }
    throw std::invalid_argument("unknown parametrization");
}

KinematicState state_from_rapidity(double eta, double m, double mu) {
    return {m * std::cosh(eta) - mu, m * std::sinh(eta), m, mu};
}

Matrix2c dirac_operator(const KinematicState& state, DiracOperatorForm form) {
    const double ep = state.e_plus();
    const double em = state.e_minus();
    switch (form) {
        case DiracOperatorForm::Linear:
            return {ep, -state.m, -state.m, em};
        case DiracOperatorForm::Hyperbolic: {
            if (state.m == 0.0) throw std::invalid_argument("mass-normalized form undefined");
            return {ep / state.m, -1.0, -1.0, em / state.m};
        }
        case DiracOperatorForm::Trigonometric: {
            if (state.m == 0.0) throw std::invalid_argument("mass-normalized form undefined");
            const double emu = state.E + state.mu;
            if (emu == 0.0) throw std::invalid_argument("mass-normalized form undefined");
            const double s = state.p / emu, c = state.m / emu;
            return {1.0 + s, -c, -c, 1.0 - s};
        }
        case DiracOperatorForm::ComplexTrig: {
            const double d = state.E - state.mu;
            if (state.m == 0.0 || d == 0.0)
                throw std::invalid_argument("mass-normalized form undefined");
            const double c = state.m / d, s = state.p / d;
            return {c - I * s, -1.0, -1.0, c + I * s};
        }
    }
    throw std::invalid_argument("unknown operator form");
}

Spinor plane_wave_amplitude(const KinematicState& state, GammaRep rep) {
    require_on_shell(state);
    if (rep == GammaRep::Hyperbolic) {
        const double em = state.e_minus();
        if (em <= 0.0 || state.m <= 0.0)
            throw std::invalid_argument("plane wave undefined: E+μ−p must be positive");
        return {std::sqrt(em / state.m), std::sqrt(state.m / em)};
    }
    const cdouble mip = state.m - I * state.p;
    const double emu = state.E + state.mu;
    if (emu == 0.0 || mip == cdouble{})
        throw std::invalid_argument("plane wave undefined: vanishing denominator");
    return {std::sqrt(cdouble(emu) / mip), std::sqrt(mip / cdouble(emu))};
}

SpinorField plane_wave(const KinematicState& state, GammaRep rep) {
    const Spinor amp = plane_wave_amplitude(state, rep);
    const double p = state.p, E = state.E;
    return [amp, p, E](double x, double t) {
        const cdouble phase = std::exp(I * (p * x - E * t));
        return Spinor{phase * amp.psi1, phase * amp.psi2};
    };
}

Spinor normalized_l2(const Spinor& s) {
    const double n = std::sqrt(std::norm(s.psi1) + std::norm(s.psi2));
    if (n == 0.0) return s;
    return {s.psi1 / n, s.psi2 / n};
}

std::array<cdouble, 2> complex_rep_equation_residuals(const KinematicState& state) {
    // Printed component equations, Fourier space (∂_x → ip, i∂_t → E):
    //   (m − ip) ψ̃1 + (E + μ) ψ̃2
    //   (E + μ) ψ̃2 + (m + ip) ψ̃1
    const Spinor a = plane_wave_amplitude(state, GammaRep::Complex);
    const cdouble m_minus = state.m - I * state.p;
    const cdouble m_plus = state.m + I * state.p;
    const double emu = state.E + state.mu;
    return {m_minus * a.psi1 + emu * a.psi2, emu * a.psi2 + m_plus * a.psi1};
}

}  // namespace scs
