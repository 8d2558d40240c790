#include "scs/scsfactor.hpp"

#include <cmath>
#include <stdexcept>

namespace scs {

namespace {
constexpr cdouble I{0.0, 1.0};
}

cdouble FactorizedBoost::dressing() const {
    return std::exp(zeta) * phi_mag * std::exp(I * beta);
}

cdouble FactorizedBoost::reconstruction() const {
    return std::exp(eta) * std::exp(zeta) * phi_mag * std::exp(I * beta);
}

cdouble dressed_boost_direct(double e_plus, double e_minus, cdouble delta_bar) {
    return std::sqrt((e_plus + delta_bar) / (e_minus - delta_bar));
}

FactorizedBoost factorize(double e_plus, double e_minus, cdouble delta_bar) {
    const double R = delta_bar.real();
    const double Im = delta_bar.imag();
    if (e_plus <= 0.0 || e_minus <= 0.0 || e_plus + R <= 0.0 || e_minus - R <= 0.0)
        throw std::invalid_argument("factorization domain");

    FactorizedBoost f;
    f.eta = 0.5 * std::log(e_plus / e_minus);
    f.zeta = 0.5 * std::log((1.0 + R / e_plus) / (1.0 - R / e_minus));
    if (Im == 0.0) {
        f.phi_mag = 1.0;
        f.beta = 0.0;
        f.beta_printed = 0.0;
        return f;
    }
    const double up = e_plus + R;
    const double dn = e_minus - R;
    f.phi_mag = std::pow((1.0 + Im * Im / (up * up)) / (1.0 + Im * Im / (dn * dn)), 0.25);
    const double t_up = std::atan(Im / up);
    const double t_dn = std::atan(Im / dn);
    // The principal-branch square root fixes the plus combination; the printed
    // minus combination is retained for comparison.
    f.beta = 0.5 * (t_up + t_dn);
    f.beta_printed = 0.5 * (t_up - t_dn);
    return f;
}

Spinor dressed_components(const FactorizedBoost& f, const Spinor& base) {
    const cdouble up = std::exp(-0.5 * f.zeta) * std::exp(-0.5 * I * f.beta) /
                       std::sqrt(f.phi_mag);
    const cdouble dnf = std::exp(0.5 * f.zeta) * std::exp(0.5 * I * f.beta) *
                        std::sqrt(f.phi_mag);
    return {up * base.psi1, dnf * base.psi2};
}

Spinor large_p_limit(cdouble delta_bar, double e_plus, double rho, double theta_N) {
    if (delta_bar == cdouble{}) throw std::invalid_argument("degenerate limit");
    if (e_plus <= 0.0) throw std::invalid_argument("degenerate limit");
    const cdouble ratio = delta_bar / e_plus;
    const cdouble root = std::sqrt(ratio);  // principal branch
    const cdouble front = std::sqrt(rho) * std::exp(I * theta_N);
    return {front * root, front / root};
}

Spinor small_p_expansion(double d1, double q_delta, double a1, double q_beta, double rho0,
                         double c1, double p) {
    const double x = d1 * q_delta / rho0;
    if (std::abs(x) >= 1.0) throw std::invalid_argument("small-p prefactor domain");
    const double pre = std::sqrt((1.0 + x) / (1.0 - x));
    const cdouble front = std::sqrt(rho0) * std::exp(I * (c1 * p));
    const cdouble up_phase = std::exp(-0.5 * I * (a1 * q_beta));
    return {front * up_phase / pre, front * pre / up_phase};
}

ChargeField charge_field(double theta, double eta, double phi_mag, double beta) {
    if (phi_mag <= 0.0) throw std::invalid_argument("phi_mag must be positive");
    const cdouble u1 = std::exp(I * theta);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    ChargeField c;
    c.phi1 = u1 * std::exp(-0.5 * eta) * std::sqrt(phi_mag) * std::exp(-0.5 * I * beta) * inv_sqrt2;
    c.phi2 = u1 * std::exp(0.5 * eta) / std::sqrt(phi_mag) * std::exp(0.5 * I * beta) * inv_sqrt2;
    return c;
}

SpinField spin_field(double zeta) {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    return {std::exp(-0.5 * zeta) * inv_sqrt2, std::exp(0.5 * zeta) * inv_sqrt2};
}

Spinor compose(const SpinField& spin, const ChargeField& charge) {
    const double s2 = std::sqrt(2.0);
    return {s2 * spin.chi1 * charge.phi1, s2 * spin.chi2 * charge.phi2};
}

}  // namespace scs
