#pragma once

#include <optional>
#include <string>
#include <vector>

#include "geophase/matrix_core.hpp"
#include "geophase/state_model.hpp"
#include "geophase/transport.hpp"

namespace geophase {

struct ComponentReport {
    Eigen::Index j = 0;
    double q = 0.0;
    double visibility = 0.0;   // nu_j = |m_j(t)| / q_j
    double gamma = 0.0;        // geometric phase, (-pi, pi]
    double dyn_phase = 0.0;    // kappa_j t, not reduced
    double total_phase = 0.0;  // arg m_j(t), (-pi, pi]
    bool negligible = false;   // q_j <= weight_floor; nu = gamma = 0 by convention
};

struct PhaseReport {
    double t = 0.0;
    std::optional<double> gamma_total;  // arg sum_j q_j nu_j e^{i gamma_j}
    std::optional<double> uhlmann;      // arg Tr[C C(t)]
    std::optional<double> sjoqvist;     // interferometric phase
    double overlap_magnitude = 0.0;     // |sum_j q_j nu_j e^{i gamma_j}|
    double uhlmann_magnitude = 0.0;
    double sjoqvist_magnitude = 0.0;
    std::vector<ComponentReport> components;
    bool degenerate_spectrum_warning = false;
    std::vector<std::string> warnings;

    bool all_defined() const { return gamma_total && uhlmann && sjoqvist; }
};

/// m_j(t) = <e_j| Z* C U(t) C Z^T |e_j> = <chi~_j(0)|chi~_j(t)>.
cxd overlap_kernel(Eigen::Index j, const ComplexMatrix& u_t, const RealVector& amplitudes,
                   const ComplexMatrix& z);

ComponentReport component_report(Eigen::Index j, double t, const AncillaFrame& frame,
                                 const ComponentWeights& weights, const ComplexMatrix& u_t,
                                 const RealVector& amplitudes,
                                 const Tolerances& tol = kDefaultTolerances);

/// sum over non-negligible components of m_j(t) e^{-i kappa_j t}.
cxd total_overlap(double t, const AncillaFrame& frame, const ComponentWeights& weights,
                  const ComplexMatrix& u_t, const RealVector& amplitudes,
                  const Tolerances& tol = kDefaultTolerances);

/// Total geometric phase from the component sum. Throws VanishingVisibility
/// when the summed overlap is below tol.overlap_floor.
double total_geometric_phase(double t, const AncillaFrame& frame,
                             const ComponentWeights& weights, const ComplexMatrix& u_t,
                             const RealVector& amplitudes,
                             const Tolerances& tol = kDefaultTolerances);

/// Tr[C U(t) C V^T(t)] with V(t) = exp(-i K t).
cxd uhlmann_trace(double t, const ComplexMatrix& u_t, const RealVector& amplitudes,
                  const ComplexMatrix& k, const Tolerances& tol = kDefaultTolerances);

double uhlmann_trace_phase(double t, const ComplexMatrix& u_t, const RealVector& amplitudes,
                           const ComplexMatrix& k, const Tolerances& tol = kDefaultTolerances);

/// sum_j lambda_j <e_j|U(t)|e_j> e^{i H'_jj t}.
cxd sjoqvist_sum(double t, const RealVector& lambdas, const ComplexMatrix& h_prime,
                 const ComplexMatrix& u_t);

double sjoqvist_phase(double t, const RealVector& lambdas, const ComplexMatrix& h_prime,
                      const ComplexMatrix& u_t, const Tolerances& tol = kDefaultTolerances);

// Everything time-independent: spectrum, H' in the eigenbasis, ancilla frame
// and component weights. Build once, evaluate at many t.
struct PhaseSetup {
    Spectrum spectrum;
    ComplexMatrix h_prime;
    AncillaFrame frame;
    ComponentWeights weights;

    Eigen::Index dim() const noexcept { return spectrum.dim(); }
};

PhaseSetup prepare(const Problem& problem, const Tolerances& tol = kDefaultTolerances);

/// Same, with a caller-chosen eigenbasis (e.g. a rephased one).
PhaseSetup prepare(const Problem& problem, Spectrum spectrum,
                   const Tolerances& tol = kDefaultTolerances);

/// U(t) = exp(-i H' t) in the rho(0) eigenbasis.
ComplexMatrix evolution(const PhaseSetup& setup, double t);

PhaseReport analyze(const PhaseSetup& setup, double t,
                    const Tolerances& tol = kDefaultTolerances);

}  // namespace geophase
