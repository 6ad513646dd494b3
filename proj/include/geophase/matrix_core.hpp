#pragma once

#include <complex>

#include <Eigen/Dense>

#include "geophase/tolerances.hpp"

namespace geophase {

using cxd = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kPi = 3.14159265358979323846;

struct HermitianEigResult {
    RealVector eigenvalues;     // ascending
    ComplexMatrix eigenvectors; // orthonormal columns
};

// Throws NotSquare / NonFinite; used at every public entry point.
void require_square_finite(const ComplexMatrix& a, const char* what);

double hermitian_residual(const ComplexMatrix& a);  // ||a - a^dagger||_F

void require_hermitian(const ComplexMatrix& a, const char* what,
                       const Tolerances& tol = kDefaultTolerances);

HermitianEigResult hermitian_eig(const ComplexMatrix& a,
                                 const Tolerances& tol = kDefaultTolerances);

/// exp(-i h t) with hbar = 1, built from the eigendecomposition of h so the
/// result is unitary to roundoff for any t.
ComplexMatrix unitary_from_hamiltonian(const ComplexMatrix& h, double t,
                                       const Tolerances& tol = kDefaultTolerances);

/// Unitary factor U of the left polar form a = P U, P = sqrt(a a^dagger).
/// Computed from the SVD a = X S Y^dagger as X Y^dagger, which also fixes
/// the result for singular a.
ComplexMatrix polar_unitary(const ComplexMatrix& a);

/// Hermitian PSD square root. Eigenvalues in [-psd_negative, 0) are clamped.
ComplexMatrix psd_sqrt(const ComplexMatrix& a, const Tolerances& tol = kDefaultTolerances);

/// Reduce an angle to (-pi, pi].
double wrap_phase(double angle);

/// min(|a - b|, 2 pi - |a - b|) after reduction.
double circular_distance(double a, double b);

/// arg z in (-pi, pi].
double phase_of(cxd z);

}  // namespace geophase
