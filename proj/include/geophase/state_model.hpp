#pragma once

#include "geophase/matrix_core.hpp"

namespace geophase {

// A validated density matrix: Hermitian, unit trace, PSD (all within the
// tolerances it was validated against). Only validate_density constructs one.
class DensityMatrix {
public:
    const ComplexMatrix& mat() const noexcept { return mat_; }
    Eigen::Index dim() const noexcept { return mat_.rows(); }

private:
    explicit DensityMatrix(ComplexMatrix m) : mat_(std::move(m)) {}
    friend DensityMatrix validate_density(const ComplexMatrix&, const Tolerances&);

    ComplexMatrix mat_;
};

DensityMatrix validate_density(const ComplexMatrix& mat,
                               const Tolerances& tol = kDefaultTolerances);

/// Spectral form of rho(0) with lambdas in descending order. Column j of
/// basis_e is |e_j>; amplitudes are c_j = sqrt(lambda_j).
struct Spectrum {
    RealVector lambdas;
    ComplexMatrix basis_e;
    RealVector amplitudes;
    bool degenerate = false;

    Eigen::Index dim() const noexcept { return lambdas.size(); }
    ComplexMatrix amp_matrix() const;  // C = diag(c_j)
    ComplexMatrix reconstruct() const; // E diag(lambda) E^dagger
};

Spectrum spectral_decompose(const DensityMatrix& rho,
                            const Tolerances& tol = kDefaultTolerances);

/// Re-phases the columns of basis_e, |e_j> -> e^{i theta_j}|e_j>. Everything
/// else is unchanged.
Spectrum rephase(const Spectrum& spec, const RealVector& thetas);

struct Problem {
    DensityMatrix rho0;
    ComplexMatrix hamiltonian_lab;

    Eigen::Index dim() const noexcept { return rho0.dim(); }
};

Problem make_problem(const ComplexMatrix& rho, const ComplexMatrix& hamiltonian,
                     const Tolerances& tol = kDefaultTolerances);

/// H' = E^dagger H_lab E, the Hamiltonian in the rho(0) eigenbasis.
ComplexMatrix hamiltonian_in_eigenbasis(const Problem& problem, const Spectrum& spec,
                                        const Tolerances& tol = kDefaultTolerances);

/// rho(t) = U(t) rho(0) U(t)^dagger in the lab frame.
ComplexMatrix evolve_density(const Problem& problem, double t);

}  // namespace geophase
