#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace scs {

using cdouble = std::complex<double>;

// Dense 2x2 complex matrix. Entries of the gamma matrices are exact
// ({0, ±1, ±i}), so equality can be tested bitwise where needed.
struct Matrix2c {
    std::array<cdouble, 4> e{};  // row-major: e[0] e[1] / e[2] e[3]

    Matrix2c() = default;
    Matrix2c(cdouble a, cdouble b, cdouble c, cdouble d) : e{a, b, c, d} {}

    static Matrix2c identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static Matrix2c zero() { return {0.0, 0.0, 0.0, 0.0}; }

    cdouble& operator()(int r, int c) { return e[2 * r + c]; }
    cdouble operator()(int r, int c) const { return e[2 * r + c]; }

    Matrix2c operator+(const Matrix2c& o) const {
        return {e[0] + o.e[0], e[1] + o.e[1], e[2] + o.e[2], e[3] + o.e[3]};
    }
    Matrix2c operator-(const Matrix2c& o) const {
        return {e[0] - o.e[0], e[1] - o.e[1], e[2] - o.e[2], e[3] - o.e[3]};
    }
    Matrix2c operator*(const Matrix2c& o) const {
        return {e[0] * o.e[0] + e[1] * o.e[2], e[0] * o.e[1] + e[1] * o.e[3],
                e[2] * o.e[0] + e[3] * o.e[2], e[2] * o.e[1] + e[3] * o.e[3]};
    }
    Matrix2c operator*(cdouble s) const { return {e[0] * s, e[1] * s, e[2] * s, e[3] * s}; }

    cdouble det() const { return e[0] * e[3] - e[1] * e[2]; }
    cdouble trace() const { return e[0] + e[3]; }

    bool equals_exact(const Matrix2c& o) const {
        for (int i = 0; i < 4; ++i)
            if (e[i] != o.e[i]) return false;
        return true;
    }
    double max_abs_diff(const Matrix2c& o) const {
        double m = 0.0;
        for (int i = 0; i < 4; ++i) m = std::max(m, std::abs(e[i] - o.e[i]));
        return m;
    }
    double max_abs() const {
        double m = 0.0;
        for (int i = 0; i < 4; ++i) m = std::max(m, std::abs(e[i]));
        return m;
    }
};

inline Matrix2c operator*(cdouble s, const Matrix2c& m) { return m * s; }

}  // namespace scs
