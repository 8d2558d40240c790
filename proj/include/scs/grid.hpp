#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace scs {

// Uniform space-time lattice of real samples, time-major: value(ix, it) = v[it*nx + ix].
struct Grid2D {
    int nx = 0;
    int nt = 0;
    double dx = 0.0;
    double dt = 0.0;
    std::vector<double> v;

    Grid2D() = default;
    Grid2D(int nx_, int nt_, double dx_, double dt_, double fill = 0.0)
        : nx(nx_), nt(nt_), dx(dx_), dt(dt_), v(static_cast<std::size_t>(nx_) * nt_, fill) {}

    double& at(int ix, int it) { return v[static_cast<std::size_t>(it) * nx + ix]; }
    double at(int ix, int it) const { return v[static_cast<std::size_t>(it) * nx + ix]; }

    bool commensurate(const Grid2D& o) const {
        return nx == o.nx && nt == o.nt && dx == o.dx && dt == o.dt;
    }
};

inline void require_commensurate(const Grid2D& a, const Grid2D& b) {
    if (!a.commensurate(b)) throw std::invalid_argument("grid mismatch");
}

// Second-order first derivative along a sampled line; one-sided at the ends.
inline double deriv1_line(const double* f, int n, int i, double h) {
    if (n < 3) throw std::invalid_argument("grid too small");
    if (i == 0) return (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * h);
    if (i == n - 1) return (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) / (2.0 * h);
    return (f[i + 1] - f[i - 1]) / (2.0 * h);
}

// Second-order second derivative; 4-point one-sided at the ends.
inline double deriv2_line(const double* f, int n, int i, double h) {
    if (n < 4) throw std::invalid_argument("grid too small");
    const double h2 = h * h;
    if (i == 0) return (2.0 * f[0] - 5.0 * f[1] + 4.0 * f[2] - f[3]) / h2;
    if (i == n - 1) return (2.0 * f[n - 1] - 5.0 * f[n - 2] + 4.0 * f[n - 3] - f[n - 4]) / h2;
    return (f[i + 1] - 2.0 * f[i] + f[i - 1]) / h2;
}

inline double deriv_x(const Grid2D& g, int ix, int it) {
    const double* row = g.v.data() + static_cast<std::size_t>(it) * g.nx;
    return deriv1_line(row, g.nx, ix, g.dx);
}

inline double deriv_t(const Grid2D& g, int ix, int it) {
    if (g.nt < 3) throw std::invalid_argument("grid too small");
    auto f = [&](int n) { return g.at(ix, n); };
    if (it == 0) return (-3.0 * f(0) + 4.0 * f(1) - f(2)) / (2.0 * g.dt);
    if (it == g.nt - 1) return (3.0 * f(g.nt - 1) - 4.0 * f(g.nt - 2) + f(g.nt - 3)) / (2.0 * g.dt);
    return (f(it + 1) - f(it - 1)) / (2.0 * g.dt);
}

inline double deriv_xx(const Grid2D& g, int ix, int it) {
    const double* row = g.v.data() + static_cast<std::size_t>(it) * g.nx;
    return deriv2_line(row, g.nx, ix, g.dx);
}

inline double deriv_tt(const Grid2D& g, int ix, int it) {
    if (g.nt < 4) throw std::invalid_argument("grid too small");
    auto f = [&](int n) { return g.at(ix, n); };
    const double h2 = g.dt * g.dt;
    if (it == 0) return (2.0 * f(0) - 5.0 * f(1) + 4.0 * f(2) - f(3)) / h2;
    if (it == g.nt - 1) return (2.0 * f(g.nt - 1) - 5.0 * f(g.nt - 2) + 4.0 * f(g.nt - 3) - f(g.nt - 4)) / h2;
    return (f(it + 1) - 2.0 * f(it) + f(it - 1)) / h2;
}

inline Grid2D map_like(const Grid2D& g) { return Grid2D(g.nx, g.nt, g.dx, g.dt); }

}  // namespace scs
