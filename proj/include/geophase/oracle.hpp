#pragma once

#include <cstdint>
#include <vector>

#include "geophase/matrix_core.hpp"
#include "geophase/state_model.hpp"
#include "geophase/transport.hpp"

namespace geophase {

// Uniform grid t_i = i * t_end / steps, i = 0..steps.
struct PathSampling {
    double t_end = 0.0;
    int steps = 0;

    std::vector<double> times() const;
};

struct HolonomyResult {
    double phase = 0.0;                     // arg Tr[W_0^dagger W_N]
    double overlap_magnitude = 0.0;
    double max_parallel_asymmetry = 0.0;    // max_i ||P_i - P_i^dagger||_F, P_i = W_i^dagger W_{i+1}
    double min_parallel_eigenvalue = 0.0;   // min over i of the least eigenvalue of P_i
};

/// Chains amplitudes W_{i+1} = sqrt(rho_{i+1}) S_{i+1} so that every
/// W_i^dagger W_{i+1} is Hermitian PSD. rho(t) is evolved in the lab frame.
/// Throws VanishingOverlap if |Tr[W_0^dagger W_N]| <= tol.overlap_floor.
HolonomyResult discrete_uhlmann_chain(const Problem& problem, const PathSampling& sampling,
                                      const Tolerances& tol = kDefaultTolerances);

double discrete_uhlmann_holonomy(const Problem& problem, const PathSampling& sampling,
                                 const Tolerances& tol = kDefaultTolerances);

/// Geometric part of the pure-state phase: arg<psi|U(t)|psi> + <psi|H|psi> t.
double pancharatnam_phase(const ComplexVector& psi0, const ComplexMatrix& h_lab, double t,
                          const Tolerances& tol = kDefaultTolerances);

/// Forward-difference estimate of the parallel-transport violation of
/// component j at time t:
///   |<chi_j(t)|chi_j(t+delta)> e^{-i kappa_j delta} - 1| / delta.
/// h_prime is the Hamiltonian in the rho(0) eigenbasis.
double parallel_residual(Eigen::Index j, double t, double delta, const AncillaFrame& frame,
                         const ComplexMatrix& h_prime, const RealVector& amplitudes,
                         const Tolerances& tol = kDefaultTolerances);

struct RandomInstanceSpec {
    int dim = 2;
    int rank = 2;
    std::uint64_t seed = 0;
    double h_scale = 1.0;  // target ||H||_F
};

/// Deterministic in spec.seed. rho = G G^dagger / Tr with a complex Gaussian
/// n x rank factor G (redrawn until the top-rank eigenvalues exceed 1e-6),
/// H = (A + A^dagger)/2 rescaled to ||H||_F = h_scale.
Problem random_instance(const RandomInstanceSpec& spec,
                        const Tolerances& tol = kDefaultTolerances);

}  // namespace geophase
