#include "scs/meanfield.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace scs {

namespace {
constexpr cdouble I{0.0, 1.0};
}

Mat4 fourier_matrix(double E, double p, double mu, double sigma, double m, cdouble delta) {
    const double s = sigma - m;
    const double a = (E + mu - p) + delta.real();  // E₋ + ReΔ
    const double b = (E + mu + p) - delta.real();  // E₊ − ReΔ
    const double c = delta.imag();
    return Mat4{{{s, 0.0, a, c}, {0.0, s, -c, a}, {b, -c, s, 0.0}, {c, b, 0.0, s}}};
}

double det4(const Mat4& m) {
    Mat4 a = m;
    double det = 1.0;
    for (int col = 0; col < 4; ++col) {
        int piv = col;
        for (int r = col + 1; r < 4; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        if (a[piv][col] == 0.0) return 0.0;
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (int r = col + 1; r < 4; ++r) {
            const double f = a[r][col] / a[col][col];
            for (int c = col; c < 4; ++c) a[r][c] -= f * a[col][c];
        }
    }
    return det;
}

double fourier_determinant(double E, double p, double mu, double sigma, double m, cdouble delta) {
    return det4(fourier_matrix(E, p, mu, sigma, m, delta));
}

double reduced_dispersion(double E, double p, double mu, double sigma, double m, cdouble delta) {
    const double s = sigma - m;
    const double a = (E + mu - p) + delta.real();
    const double b = (E + mu + p) - delta.real();
    const double c = delta.imag();
    return s * s - c * c - a * b;
}

double dispersion_condition_printed(double E, double p, double mu, double sigma, double m,
                                    cdouble delta) {
    const double s = sigma - m;
    const double a = (E + mu - p) + delta.real();
    const double b = (E + mu + p) - delta.real();
    const double c = delta.imag();
    const double s2 = s * s, c2 = c * c;
    return s2 - 2.0 * s2 * c2 + a * a * c2 + c2 * c2 - 2.0 * s2 * a * b + a * a * b * b +
           c2 * b * b;
}

std::vector<double> dispersion_solve(double p, double mu, double sigma, double m, cdouble delta,
                                     const DispersionWindow& window) {
    DispersionWindow w = window;
    if (w.automatic) {
        const double scale =
            std::max({m, std::abs(sigma), std::abs(delta), std::abs(p)});
        w.e_min = -mu - 10.0 * scale - 1.0;
        w.e_max = -mu + 10.0 * scale + 1.0;
    }
    if (w.brackets < 2) throw std::invalid_argument("bracket count too small");

    auto f = [&](double E) { return reduced_dispersion(E, p, mu, sigma, m, delta); };

    std::vector<double> roots;
    const double h = (w.e_max - w.e_min) / w.brackets;
    double x0 = w.e_min, f0 = f(x0);
    for (int i = 1; i <= w.brackets; ++i) {
        const double x1 = w.e_min + i * h;
        const double f1 = f(x1);
        if (f0 == 0.0) roots.push_back(x0);
        if (f0 * f1 < 0.0) {
            // bisection with a secant polish
            double lo = x0, hi = x1, flo = f0;
            for (int it = 0; it < 200; ++it) {
                const double mid = 0.5 * (lo + hi);
                const double fm = f(mid);
                if (fm == 0.0) {
                    lo = hi = mid;
                    break;
                }
                if (flo * fm < 0.0)
                    hi = mid;
                else {
                    lo = mid;
                    flo = fm;
                }
                if (hi - lo < 1e-15 * std::max(1.0, std::abs(mid))) break;
            }
            double r = 0.5 * (lo + hi);
            const double fl = f(lo), fh = f(hi);
            if (fh != fl) {
                const double sec = lo - fl * (hi - lo) / (fh - fl);
                if (sec >= lo && sec <= hi && std::abs(f(sec)) < std::abs(f(r))) r = sec;
            }
            roots.push_back(r);
        }
        x0 = x1;
        f0 = f1;
    }
    if (f0 == 0.0) roots.push_back(x0);

    std::sort(roots.begin(), roots.end());
    std::vector<double> out;
    for (double r : roots) {
        if (!out.empty() && std::abs(r - out.back()) < 1e-9) continue;
        if (std::abs(fourier_determinant(r, p, mu, sigma, m, delta)) < 1e-9) out.push_back(r);
    }
    return out;
}

std::pair<cdouble, cdouble> fourier_components(double E, double p, double mu, double sigma,
                                               double m, cdouble delta) {
    const double s = sigma - m;
    const double a = (E + mu - p) + delta.real();
    const double b = (E + mu + p) - delta.real();
    const double c = delta.imag();
    const double D = s * s - c * c - a * b;

    const double scale = std::max({1.0, s * s, std::abs(a * b), c * c});
    if (std::abs(s) < 1e-12 * std::sqrt(scale))
        throw std::invalid_argument("degenerate component formula");

    if (std::abs(D) > 1e-7 * scale) {
        const cdouble psi1 = cdouble(-s * s * a + a * a * b + c * c * b, c * (s * s - b * b - c * c)) /
                             (s * D);
        const cdouble psi2 = cdouble(1.0, c * (a - b) / D);
        return {psi1, psi2};
    }
    // At a dispersion root D → 0 and the c(a−b) numerators vanish identically;
    // the cancelled limits keep the pair in the matrix kernel.
    if (std::abs(c * (a - b)) > 1e-7 * scale)
        throw std::invalid_argument("degenerate component formula");
    const cdouble psi2{1.0, 0.0};
    const cdouble psi1 = -(cdouble(a, -c)) / s;  // −(E₋+Δ*)/s with ψ̃2 = 1
    return {psi1, psi2};
}

DressedBoost dressed_boost(const EPair& e, double delta_bar) {
    if (e.e_plus + delta_bar <= 0.0 || e.e_minus - delta_bar <= 0.0)
        throw std::invalid_argument("boost domain");
    if (e.e_plus <= 0.0 || e.e_minus <= 0.0) throw std::invalid_argument("boost domain");
    DressedBoost d;
    d.eta = 0.5 * std::log(e.e_plus / e.e_minus);
    d.eta_prime = 0.5 * std::log((e.e_plus + delta_bar) / (e.e_minus - delta_bar));
    d.zeta = d.eta_prime - d.eta;
    return d;
}

Spinor dressed_plane_wave_amplitude(const KinematicState& state, double delta_bar) {
    const EPair e = e_pair(state);
    if (e.e_plus + delta_bar <= 0.0 || e.e_minus - delta_bar <= 0.0)
        throw std::invalid_argument("boost domain");
    const double ep = std::sqrt((e.e_plus + delta_bar) / (e.e_minus - delta_bar));  // e^{η'}
    return {1.0 / std::sqrt(ep), std::sqrt(ep)};
}

SpinorField dressed_plane_wave(const KinematicState& state, double delta_bar) {
    const Spinor amp = dressed_plane_wave_amplitude(state, delta_bar);
    const double p = state.p, E = state.E;
    return [amp, p, E](double x, double t) {
        const cdouble phase = std::exp(I * (p * x - E * t));
        return Spinor{phase * amp.psi1, phase * amp.psi2};
    };
}

CondensateSet condensates_from_parameters(cdouble phi, double zeta_prime) {
    CondensateSet s;
    const double n2 = std::norm(phi);
    s.rho = 2.0 * n2 * std::cosh(zeta_prime);
    s.sigma = 2.0 * n2;
    s.delta = -2.0 * phi * phi * std::sinh(zeta_prime);
    s.delta_bar = 2.0 * std::conj(phi) * std::conj(phi) * std::sinh(zeta_prime);
    return s;
}

CondensateInversion invert_condensates(const CondensateSet& set) {
    if (std::abs(set.delta_bar.imag()) > 1e-12 * std::max(1.0, std::abs(set.delta_bar)))
        throw std::invalid_argument("no real-branch inversion");
    const double db = set.delta_bar.real();
    if (set.rho <= std::abs(db)) throw std::invalid_argument("no real-branch inversion");
    if (set.sigma <= 0.0) throw std::invalid_argument("no real-branch inversion");
    CondensateInversion inv;
    inv.zeta_prime = std::log((set.rho + db) / set.sigma);
    inv.phi_magnitude = std::sqrt(set.sigma / 2.0);
    inv.sign_branch = +1;
    return inv;
}

}  // namespace scs
