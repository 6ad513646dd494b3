#include "geophase/oracle.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "geophase/error.hpp"

namespace geophase {

std::vector<double> PathSampling::times() const {
    if (steps < 2) throw Error(ErrorKind::InvalidArgument, "path sampling needs steps >= 2");
    if (!(t_end > 0.0) || !std::isfinite(t_end)) {
        throw Error(ErrorKind::InvalidArgument, "path sampling needs finite t_end > 0");
    }
    std::vector<double> out(static_cast<std::size_t>(steps) + 1);
    for (int i = 0; i <= steps; ++i) out[static_cast<std::size_t>(i)] = t_end * i / steps;
    return out;
}

HolonomyResult discrete_uhlmann_chain(const Problem& problem, const PathSampling& sampling,
                                      const Tolerances& tol) {
    const auto times = sampling.times();
    const auto h_eig = hermitian_eig(problem.hamiltonian_lab, tol);
    auto rho_at = [&](double t) {
        ComplexVector phases(h_eig.eigenvalues.size());
        for (Eigen::Index k = 0; k < phases.size(); ++k)
            phases(k) = std::polar(1.0, -h_eig.eigenvalues(k) * t);
        const ComplexMatrix u = h_eig.eigenvectors * phases.asDiagonal() * h_eig.eigenvectors.adjoint();
        const ComplexMatrix r = u * problem.rho0.mat() * u.adjoint();
        return ComplexMatrix(0.5 * (r + r.adjoint()));
    };

    HolonomyResult out;
    out.min_parallel_eigenvalue = std::numeric_limits<double>::infinity();

    const ComplexMatrix w0 = psd_sqrt(problem.rho0.mat(), tol);
    ComplexMatrix w = w0;
    for (int i = 1; i <= sampling.steps; ++i) {
        const ComplexMatrix rho = rho_at(times[static_cast<std::size_t>(i)]);
        const ComplexMatrix root = psd_sqrt(rho, tol);
        const ComplexMatrix a = w.adjoint() * root;
        const ComplexMatrix next = root * polar_unitary(a).adjoint();

        const ComplexMatrix parallel = w.adjoint() * next;
        out.max_parallel_asymmetry = std::max(out.max_parallel_asymmetry,
                                              hermitian_residual(parallel));
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (parallel + parallel.adjoint()),
                                                        Eigen::EigenvaluesOnly);
        out.min_parallel_eigenvalue = std::min(out.min_parallel_eigenvalue, es.eigenvalues()(0));
        w = next;
    }

    const cxd overlap = (w0.adjoint() * w).trace();
    out.overlap_magnitude = std::abs(overlap);
    if (!(out.overlap_magnitude > tol.overlap_floor)) {
        std::ostringstream msg;
        msg << "holonomy endpoint overlap magnitude " << out.overlap_magnitude;
        throw Error(ErrorKind::VanishingOverlap, msg.str());
    }
    out.phase = phase_of(overlap);
    return out;
}

double discrete_uhlmann_holonomy(const Problem& problem, const PathSampling& sampling,
                                 const Tolerances& tol) {
    return discrete_uhlmann_chain(problem, sampling, tol).phase;
}

double pancharatnam_phase(const ComplexVector& psi0, const ComplexMatrix& h_lab, double t,
                          const Tolerances& tol) {
    if (psi0.size() != h_lab.rows()) {
        throw Error(ErrorKind::DimensionMismatch, "state and Hamiltonian dimensions differ");
    }
    if (std::abs(psi0.norm() - 1.0) > 1e-12) {
        throw Error(ErrorKind::InvalidArgument, "state must be normalized");
    }
    const ComplexMatrix u = unitary_from_hamiltonian(h_lab, t, tol);
    const cxd overlap = psi0.dot(u * psi0);
    if (!(std::abs(overlap) > tol.overlap_floor)) {
        throw Error(ErrorKind::VanishingOverlap, "endpoints are orthogonal");
    }
    const double energy = psi0.dot(h_lab * psi0).real();
    return wrap_phase(std::arg(overlap) + energy * t);
}

double parallel_residual(Eigen::Index j, double t, double delta, const AncillaFrame& frame,
                         const ComplexMatrix& h_prime, const RealVector& amplitudes,
                         const Tolerances& tol) {
    if (!(delta >= 1e-8 && delta <= 1e-4)) {
        throw Error(ErrorKind::InvalidArgument, "delta must lie in [1e-8, 1e-4]");
    }
    const ComplexVector seed = component_seed(j, amplitudes, frame.z);
    const double q = seed.squaredNorm();
    if (!(q > tol.weight_floor)) {
        throw Error(ErrorKind::InvalidArgument, "component weight below the floor");
    }
    const ComplexVector now = unitary_from_hamiltonian(h_prime, t, tol) * seed;
    const ComplexVector later = unitary_from_hamiltonian(h_prime, t + delta, tol) * seed;
    const cxd overlap = now.dot(later) / q;
    return std::abs(overlap * std::polar(1.0, -frame.kappas(j) * delta) - 1.0) / delta;
}

Problem random_instance(const RandomInstanceSpec& spec, const Tolerances& tol) {
    if (spec.dim < 1 || spec.rank < 1 || spec.rank > spec.dim) {
        throw Error(ErrorKind::InvalidArgument, "random instance needs 1 <= rank <= dim");
    }
    const Eigen::Index n = spec.dim;
    std::mt19937_64 rng(spec.seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    auto gaussian = [&](Eigen::Index rows, Eigen::Index cols) {
        ComplexMatrix g(rows, cols);
        for (Eigen::Index c = 0; c < cols; ++c)
            for (Eigen::Index r = 0; r < rows; ++r) g(r, c) = cxd(normal(rng), normal(rng));
        return g;
    };

    ComplexMatrix rho;
    for (;;) {
        const ComplexMatrix g = gaussian(n, spec.rank);
        rho = g * g.adjoint();
        rho /= rho.trace().real();
        rho = 0.5 * (rho + rho.adjoint());
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho, Eigen::EigenvaluesOnly);
        if (es.eigenvalues()(n - spec.rank) > 1e-6) break;
    }

    const ComplexMatrix a = gaussian(n, n);
    ComplexMatrix h = 0.5 * (a + a.adjoint());
    h *= spec.h_scale / h.norm();
    return make_problem(rho, h, tol);
}

}  // namespace geophase
