#pragma once

#include "geophase/matrix_core.hpp"

namespace geophase {

// Ancilla Hamiltonian K together with the representation change Z that
// diagonalizes it: Z K Z^dagger = diag(kappas), kappas ascending.
struct AncillaFrame {
    ComplexMatrix k;
    ComplexMatrix z;
    RealVector kappas;
};

// Time-invariant weights q_j = (Z* C^2 Z^T)_jj of the transported components.
struct ComponentWeights {
    RealVector q;
};

/// Solves C^2 K^T + K^T C^2 = -2 C H' C for diagonal C = diag(amplitudes):
///   (K^T)_kl = -2 c_k c_l H'_kl / (c_k^2 + c_l^2),
/// with entries set to zero where c_k^2 + c_l^2 <= tol.kernel_support.
ComplexMatrix solve_ancilla_hamiltonian(const RealVector& amplitudes,
                                        const ComplexMatrix& h_prime,
                                        const Tolerances& tol = kDefaultTolerances);

/// ||C^2 K^T + K^T C^2 + 2 C H' C||_F restricted to the support pairs.
double ancilla_equation_residual(const RealVector& amplitudes, const ComplexMatrix& h_prime,
                                 const ComplexMatrix& k,
                                 const Tolerances& tol = kDefaultTolerances);

AncillaFrame diagonalizing_frame(const ComplexMatrix& k,
                                 const Tolerances& tol = kDefaultTolerances);

ComponentWeights component_weights(const RealVector& amplitudes, const ComplexMatrix& z);

/// |chi~_j(0)> = C Z^T |e_j>, i.e. entries c_k Z_jk.
ComplexVector component_seed(Eigen::Index j, const RealVector& amplitudes,
                             const ComplexMatrix& z);

/// |chi~_j(t)> = U(t) C Z^T |e_j>. Its squared norm is q_j for every t.
ComplexVector component_state(Eigen::Index j, const ComplexMatrix& u_t,
                              const RealVector& amplitudes, const ComplexMatrix& z);

}  // namespace geophase
