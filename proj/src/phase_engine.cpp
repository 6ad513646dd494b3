#include "geophase/phase_engine.hpp"

#include <cmath>
#include <sstream>

#include "geophase/error.hpp"

namespace geophase {
namespace {

void require_defined(cxd overlap, const char* what, const Tolerances& tol) {
    const double mag = std::abs(overlap);
    if (!(mag > tol.overlap_floor)) {
        std::ostringstream msg;
        msg << what << " undefined: overlap magnitude " << mag;
        throw Error(ErrorKind::VanishingVisibility, msg.str());
    }
}

std::string magnitude_warning(const char* what, double mag) {
    std::ostringstream msg;
    msg << what << " undefined: overlap magnitude " << mag;
    return msg.str();
}

}  // namespace

cxd overlap_kernel(Eigen::Index j, const ComplexMatrix& u_t, const RealVector& amplitudes,
                   const ComplexMatrix& z) {
    const ComplexVector seed = component_seed(j, amplitudes, z);
    if (u_t.rows() != seed.size() || u_t.cols() != seed.size()) {
        throw Error(ErrorKind::DimensionMismatch, "U(t) and Z dimensions differ");
    }
    return seed.dot(u_t * seed);  // dot() conjugates the left operand
}

ComponentReport component_report(Eigen::Index j, double t, const AncillaFrame& frame,
                                 const ComponentWeights& weights, const ComplexMatrix& u_t,
                                 const RealVector& amplitudes, const Tolerances& tol) {
    const cxd m = overlap_kernel(j, u_t, amplitudes, frame.z);
    ComponentReport r;
    r.j = j;
    r.q = weights.q(j);
    r.dyn_phase = frame.kappas(j) * t;
    if (r.q <= tol.weight_floor) {
        r.negligible = true;
        r.total_phase = wrap_phase(r.dyn_phase);
        return r;
    }
    r.visibility = std::abs(m) / r.q;
    r.total_phase = phase_of(m);
    r.gamma = wrap_phase(r.total_phase - r.dyn_phase);
    return r;
}

cxd total_overlap(double t, const AncillaFrame& frame, const ComponentWeights& weights,
                  const ComplexMatrix& u_t, const RealVector& amplitudes, const Tolerances& tol) {
    cxd sum = 0.0;
    for (Eigen::Index j = 0; j < frame.kappas.size(); ++j) {
        if (weights.q(j) <= tol.weight_floor) continue;
        sum += overlap_kernel(j, u_t, amplitudes, frame.z) * std::polar(1.0, -frame.kappas(j) * t);
    }
    return sum;
}

double total_geometric_phase(double t, const AncillaFrame& frame,
                             const ComponentWeights& weights, const ComplexMatrix& u_t,
                             const RealVector& amplitudes, const Tolerances& tol) {
    const cxd sum = total_overlap(t, frame, weights, u_t, amplitudes, tol);
    require_defined(sum, "total geometric phase", tol);
    return phase_of(sum);
}

cxd uhlmann_trace(double t, const ComplexMatrix& u_t, const RealVector& amplitudes,
                  const ComplexMatrix& k, const Tolerances& tol) {
    if (u_t.rows() != k.rows() || amplitudes.size() != k.rows()) {
        throw Error(ErrorKind::DimensionMismatch, "U(t), C and K dimensions differ");
    }
    const ComplexMatrix v = unitary_from_hamiltonian(k, t, tol);
    const ComplexMatrix c = amplitudes.cast<cxd>().asDiagonal();
    const ComplexMatrix amplitude_t = u_t * c * v.transpose();  // C(t) = U C V^T
    return (c * amplitude_t).trace();
}

double uhlmann_trace_phase(double t, const ComplexMatrix& u_t, const RealVector& amplitudes,
                           const ComplexMatrix& k, const Tolerances& tol) {
    const cxd tr = uhlmann_trace(t, u_t, amplitudes, k, tol);
    require_defined(tr, "Uhlmann phase", tol);
    return phase_of(tr);
}

cxd sjoqvist_sum(double t, const RealVector& lambdas, const ComplexMatrix& h_prime,
                 const ComplexMatrix& u_t) {
    const Eigen::Index n = lambdas.size();
    if (h_prime.rows() != n || u_t.rows() != n) {
        throw Error(ErrorKind::DimensionMismatch, "spectrum, H' and U(t) dimensions differ");
    }
    cxd sum = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
        sum += lambdas(j) * u_t(j, j) * std::polar(1.0, h_prime(j, j).real() * t);
    }
    return sum;
}

double sjoqvist_phase(double t, const RealVector& lambdas, const ComplexMatrix& h_prime,
                      const ComplexMatrix& u_t, const Tolerances& tol) {
    require_hermitian(h_prime, "H'", tol);
    const cxd sum = sjoqvist_sum(t, lambdas, h_prime, u_t);
    require_defined(sum, "Sjoqvist phase", tol);
    return phase_of(sum);
}

PhaseSetup prepare(const Problem& problem, const Tolerances& tol) {
    return prepare(problem, spectral_decompose(problem.rho0, tol), tol);
}

PhaseSetup prepare(const Problem& problem, Spectrum spectrum, const Tolerances& tol) {
    ComplexMatrix h_prime = hamiltonian_in_eigenbasis(problem, spectrum, tol);
    const ComplexMatrix k = solve_ancilla_hamiltonian(spectrum.amplitudes, h_prime, tol);
    AncillaFrame frame = diagonalizing_frame(k, tol);
    ComponentWeights weights = component_weights(spectrum.amplitudes, frame.z);
    return PhaseSetup{std::move(spectrum), std::move(h_prime), std::move(frame),
                      std::move(weights)};
}

ComplexMatrix evolution(const PhaseSetup& setup, double t) {
    return unitary_from_hamiltonian(setup.h_prime, t);
}

PhaseReport analyze(const PhaseSetup& setup, double t, const Tolerances& tol) {
    const ComplexMatrix u_t = evolution(setup, t);
    const auto& amps = setup.spectrum.amplitudes;

    PhaseReport report;
    report.t = t;
    report.components.reserve(static_cast<std::size_t>(setup.dim()));
    for (Eigen::Index j = 0; j < setup.dim(); ++j) {
        report.components.push_back(
            component_report(j, t, setup.frame, setup.weights, u_t, amps, tol));
    }

    const cxd total = total_overlap(t, setup.frame, setup.weights, u_t, amps, tol);
    report.overlap_magnitude = std::abs(total);
    if (report.overlap_magnitude > tol.overlap_floor) {
        report.gamma_total = phase_of(total);
    } else {
        report.warnings.push_back(magnitude_warning("gamma_total", report.overlap_magnitude));
    }

    const cxd trace = uhlmann_trace(t, u_t, amps, setup.frame.k, tol);
    report.uhlmann_magnitude = std::abs(trace);
    if (report.uhlmann_magnitude > tol.overlap_floor) {
        report.uhlmann = phase_of(trace);
    } else {
        report.warnings.push_back(magnitude_warning("uhlmann", report.uhlmann_magnitude));
    }

    const cxd sjoq = sjoqvist_sum(t, setup.spectrum.lambdas, setup.h_prime, u_t);
    report.sjoqvist_magnitude = std::abs(sjoq);
    if (report.sjoqvist_magnitude > tol.overlap_floor) {
        report.sjoqvist = phase_of(sjoq);
    } else {
        report.warnings.push_back(magnitude_warning("sjoqvist", report.sjoqvist_magnitude));
    }

    report.degenerate_spectrum_warning = setup.spectrum.degenerate;
    if (report.degenerate_spectrum_warning) {
        report.warnings.push_back(
            "degenerate spectrum: sjoqvist phase depends on the eigenbasis chosen inside "
            "the degenerate block");
    }
    return report;
}

}  // namespace geophase
