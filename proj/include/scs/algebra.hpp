#pragma once

#include <functional>
#include <optional>

#include "scs/complex_matrix.hpp"

namespace scs {

// Two 2x2 realizations of the Clifford algebra {γ^μ,γ^ν} = 2g^{μν}, g = diag(1,−1).
//   Hyperbolic:  γ0 = σ1,  γ1 = −iσ2, γ5 = γ0γ1 = σ3,  conjugation ψ_C = γ5 ψ*
//   Complex:     γ0 = −σ1, γ1 = iσ3,  γ5 = γ0γ1 = −σ2, C = γ0
enum class GammaRep { Hyperbolic, Complex };

enum class GammaIndex { G0, G1, G5, C };

Matrix2c gamma(GammaRep rep, GammaIndex index);

// Metric component g^{μν} for μ,ν ∈ {0,1}.
double metric(int mu, int nu);

Matrix2c anticommutator(const Matrix2c& a, const Matrix2c& b);

// Hyperbolic: diag(e^η, e^{−η}) = e^{ηγ5}.  Complex: diag(e^{−iφ}, e^{iφ}).
Matrix2c lorentz_matrix(GammaRep rep, double parameter);

struct Spinor {
    cdouble psi1{};
    cdouble psi2{};

    // arg(ψ1) − arg(ψ2), principal value; undefined when a component vanishes.
    std::optional<double> relative_phase() const;
};

enum class BilinearKind {
    Scalar,        // ψ̄ψ
    Pseudoscalar,  // ψ̄γ5ψ
    Vector0,       // ψ̄γ0ψ
    Vector1,       // ψ̄γ1ψ
    AxialVector0,  // ψ̄γ5γ0ψ
    AxialVector1,  // ψ̄γ5γ1ψ
    Difermion,     // ψ^T C ψ
    Density        // ψ̄γ0ψ (number density)
};

cdouble bilinear(GammaRep rep, BilinearKind kind, const Spinor& psi);

// Metric-contracted square (ψ̄γ^μψ)² = (μ=0)² − (μ=1)², same for the axial pair.
cdouble bilinear_square_contracted(GammaRep rep, BilinearKind vector0, BilinearKind vector1,
                                   const Spinor& psi);

using SpinorField = std::function<Spinor(double x, double t)>;

enum class DiscreteSymmetry {
    ParityG0,     // ψ(x,t) → γ0 ψ(−x,t)
    ParityG1,     // ψ(x,t) → γ1 ψ(−x,t)
    TimeReversal  // ψ(x,t) → γ0 ψ*(x,−t)
};

SpinorField apply_discrete_symmetry(GammaRep rep, DiscreteSymmetry kind, SpinorField field);

Spinor apply_matrix(const Matrix2c& m, const Spinor& s);

}  // namespace scs
