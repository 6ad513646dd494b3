#include "geophase/state_model.hpp"

#include <cmath>
#include <sstream>

#include "geophase/error.hpp"

namespace geophase {

DensityMatrix validate_density(const ComplexMatrix& mat, const Tolerances& tol) {
    require_hermitian(mat, "density matrix", tol);
    const double trace_err = std::abs(mat.trace() - cxd(1.0, 0.0));
    if (!(trace_err <= tol.unit_trace)) {
        std::ostringstream msg;
        msg << "density matrix trace deviates from 1 by " << trace_err;
        throw Error(ErrorKind::NotUnitTrace, msg.str());
    }
    const auto eig = hermitian_eig(mat, tol);
    const double min_eig = eig.eigenvalues(0);
    if (min_eig < -tol.psd_negative) {
        std::ostringstream msg;
        msg << "density matrix has eigenvalue " << min_eig << " < -" << tol.psd_negative;
        throw Error(ErrorKind::NotPSD, msg.str());
    }
    return DensityMatrix(mat);
}

ComplexMatrix Spectrum::amp_matrix() const {
    return amplitudes.cast<cxd>().asDiagonal();
}

ComplexMatrix Spectrum::reconstruct() const {
    return basis_e * lambdas.cast<cxd>().asDiagonal() * basis_e.adjoint();
}

Spectrum spectral_decompose(const DensityMatrix& rho, const Tolerances& tol) {
    const auto eig = hermitian_eig(rho.mat(), tol);
    const Eigen::Index n = rho.dim();
    Spectrum s;
    s.lambdas.resize(n);
    s.amplitudes.resize(n);
    s.basis_e.resize(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        const Eigen::Index src = n - 1 - j;
        const double lam = std::clamp(eig.eigenvalues(src), 0.0, 1.0);
        s.lambdas(j) = lam;
        s.amplitudes(j) = std::sqrt(lam);
        s.basis_e.col(j) = eig.eigenvectors.col(src);
    }
    for (Eigen::Index j = 0; j + 1 < n; ++j) {
        if (s.lambdas(j) - s.lambdas(j + 1) < tol.degeneracy_gap) s.degenerate = true;
    }
    return s;
}

Spectrum rephase(const Spectrum& spec, const RealVector& thetas) {
    if (thetas.size() != spec.dim()) {
        throw Error(ErrorKind::DimensionMismatch, "rephase needs one angle per eigenvector");
    }
    Spectrum out = spec;
    for (Eigen::Index j = 0; j < spec.dim(); ++j) {
        out.basis_e.col(j) *= std::polar(1.0, thetas(j));
    }
    return out;
}

Problem make_problem(const ComplexMatrix& rho, const ComplexMatrix& hamiltonian,
                     const Tolerances& tol) {
    auto density = validate_density(rho, tol);
    require_hermitian(hamiltonian, "hamiltonian", tol);
    if (hamiltonian.rows() != density.dim()) {
        std::ostringstream msg;
        msg << "hamiltonian is " << hamiltonian.rows() << "x" << hamiltonian.cols()
            << " but rho is " << density.dim() << "x" << density.dim();
        throw Error(ErrorKind::DimensionMismatch, msg.str());
    }
    return Problem{std::move(density), hamiltonian};
}

ComplexMatrix hamiltonian_in_eigenbasis(const Problem& problem, const Spectrum& spec,
                                        const Tolerances& tol) {
    const auto& h = problem.hamiltonian_lab;
    if (h.rows() != spec.dim() || spec.basis_e.rows() != spec.dim()) {
        throw Error(ErrorKind::DimensionMismatch, "hamiltonian and spectrum dimensions differ");
    }
    require_hermitian(h, "hamiltonian", tol);
    const ComplexMatrix rotated = spec.basis_e.adjoint() * h * spec.basis_e;
    return 0.5 * (rotated + rotated.adjoint());
}

ComplexMatrix evolve_density(const Problem& problem, double t) {
    const ComplexMatrix u = unitary_from_hamiltonian(problem.hamiltonian_lab, t);
    const ComplexMatrix r = u * problem.rho0.mat() * u.adjoint();
    return 0.5 * (r + r.adjoint());
}

}  // namespace geophase
