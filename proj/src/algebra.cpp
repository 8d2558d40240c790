#include "scs/algebra.hpp"

#include <cmath>
#include <stdexcept>

namespace scs {

namespace {
constexpr cdouble I{0.0, 1.0};
}

Matrix2c gamma(GammaRep rep, GammaIndex index) {
    if (rep == GammaRep::Hyperbolic) {
        switch (index) {
            case GammaIndex::G0: return {0.0, 1.0, 1.0, 0.0};    // σ1
            case GammaIndex::G1: return {0.0, -1.0, 1.0, 0.0};   // −iσ2
            case GammaIndex::G5: return {1.0, 0.0, 0.0, -1.0};   // σ3
            case GammaIndex::C: return {1.0, 0.0, 0.0, -1.0};    // ψ_C = γ5 ψ*
        }
    } else {
        switch (index) {
            case GammaIndex::G0: return {0.0, -1.0, -1.0, 0.0};  // −σ1
            case GammaIndex::G1: return {I, 0.0, 0.0, -I};       // iσ3
            case GammaIndex::G5: return {0.0, I, -I, 0.0};       // −σ2
            case GammaIndex::C: return {0.0, -1.0, -1.0, 0.0};   // C = γ0
        }
    }
    throw std::invalid_argument("unknown gamma index");
}

double metric(int mu, int nu) {
    if (mu != nu) return 0.0;
    return mu == 0 ? 1.0 : -1.0;
}

Matrix2c anticommutator(const Matrix2c& a, const Matrix2c& b) { return a * b + b * a; }

Matrix2c lorentz_matrix(GammaRep rep, double parameter) {
    if (!std::isfinite(parameter)) throw std::invalid_argument("boost parameter not finite");
    if (rep == GammaRep::Hyperbolic)
        return {std::exp(parameter), 0.0, 0.0, std::exp(-parameter)};
    return {std::exp(-I * parameter), 0.0, 0.0, std::exp(I * parameter)};
}

std::optional<double> Spinor::relative_phase() const {
    if (psi1 == cdouble{} || psi2 == cdouble{}) return std::nullopt;
    return std::arg(psi1 * std::conj(psi2));
}

Spinor apply_matrix(const Matrix2c& m, const Spinor& s) {
    return {m(0, 0) * s.psi1 + m(0, 1) * s.psi2, m(1, 0) * s.psi1 + m(1, 1) * s.psi2};
}

cdouble bilinear(GammaRep rep, BilinearKind kind, const Spinor& psi) {
    const Matrix2c g0 = gamma(rep, GammaIndex::G0);
    // ψ̄ = ψ†γ0 as a row vector.
    const cdouble bar1 = std::conj(psi.psi1) * g0(0, 0) + std::conj(psi.psi2) * g0(1, 0);
    const cdouble bar2 = std::conj(psi.psi1) * g0(0, 1) + std::conj(psi.psi2) * g0(1, 1);

    auto sandwich = [&](const Matrix2c& m) {
        const Spinor mp = apply_matrix(m, psi);
        return bar1 * mp.psi1 + bar2 * mp.psi2;
    };

    switch (kind) {
        case BilinearKind::Scalar: return sandwich(Matrix2c::identity());
        case BilinearKind::Pseudoscalar: return sandwich(gamma(rep, GammaIndex::G5));
        case BilinearKind::Vector0: return sandwich(gamma(rep, GammaIndex::G0));
        case BilinearKind::Vector1: return sandwich(gamma(rep, GammaIndex::G1));
        case BilinearKind::AxialVector0:
            return sandwich(gamma(rep, GammaIndex::G5) * gamma(rep, GammaIndex::G0));
        case BilinearKind::AxialVector1:
            return sandwich(gamma(rep, GammaIndex::G5) * gamma(rep, GammaIndex::G1));
        case BilinearKind::Difermion: {
            const Matrix2c c = gamma(rep, GammaIndex::C);
            const Spinor cp = apply_matrix(c, psi);
            return psi.psi1 * cp.psi1 + psi.psi2 * cp.psi2;  // ψ^T C ψ, no conjugation
        }
        case BilinearKind::Density: return sandwich(gamma(rep, GammaIndex::G0));
    }
    throw std::invalid_argument("unknown bilinear kind");
}

cdouble bilinear_square_contracted(GammaRep rep, BilinearKind vector0, BilinearKind vector1,
                                   const Spinor& psi) {
    const cdouble v0 = bilinear(rep, vector0, psi);
    const cdouble v1 = bilinear(rep, vector1, psi);
    return v0 * v0 - v1 * v1;
}

SpinorField apply_discrete_symmetry(GammaRep rep, DiscreteSymmetry kind, SpinorField field) {
    switch (kind) {
        case DiscreteSymmetry::ParityG0: {
            const Matrix2c g0 = gamma(rep, GammaIndex::G0);
            return [g0, field](double x, double t) { return apply_matrix(g0, field(-x, t)); };
        }
        case DiscreteSymmetry::ParityG1: {
            const Matrix2c g1 = gamma(rep, GammaIndex::G1);
            return [g1, field](double x, double t) { return apply_matrix(g1, field(-x, t)); };
        }
        case DiscreteSymmetry::TimeReversal: {
            const Matrix2c g0 = gamma(rep, GammaIndex::G0);
            return [g0, field](double x, double t) {
                const Spinor s = field(x, -t);
                return apply_matrix(g0, Spinor{std::conj(s.psi1), std::conj(s.psi2)});
            };
        }
    }
    throw std::invalid_argument("unknown discrete symmetry");
}

}  // namespace scs
