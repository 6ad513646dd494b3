#include "geophase/matrix_core.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "geophase/error.hpp"

namespace geophase {

void require_square_finite(const ComplexMatrix& a, const char* what) {
    if (a.rows() == 0 || a.rows() != a.cols()) {
        std::ostringstream msg;
        msg << what << " must be square with n >= 1, got " << a.rows() << "x" << a.cols();
        throw Error(ErrorKind::NotSquare, msg.str());
    }
    if (!a.allFinite()) {
        throw Error(ErrorKind::NonFinite, std::string(what) + " has non-finite entries");
    }
}

double hermitian_residual(const ComplexMatrix& a) {
    return (a - a.adjoint()).norm();
}

void require_hermitian(const ComplexMatrix& a, const char* what, const Tolerances& tol) {
    require_square_finite(a, what);
    const double r = hermitian_residual(a);
    if (!(r <= tol.hermitian)) {
        std::ostringstream msg;
        msg << what << " is not Hermitian: ||A - A^dagger||_F = " << r
            << " > " << tol.hermitian;
        throw Error(ErrorKind::NotHermitian, msg.str());
    }
}

HermitianEigResult hermitian_eig(const ComplexMatrix& a, const Tolerances& tol) {
    require_hermitian(a, "matrix", tol);
    const ComplexMatrix sym = 0.5 * (a + a.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
    return {solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix unitary_from_hamiltonian(const ComplexMatrix& h, double t, const Tolerances& tol) {
    if (!std::isfinite(t)) throw Error(ErrorKind::NonFinite, "time must be finite");
    const auto eig = hermitian_eig(h, tol);
    ComplexVector phases(eig.eigenvalues.size());
    for (Eigen::Index k = 0; k < phases.size(); ++k) {
        phases(k) = std::polar(1.0, -eig.eigenvalues(k) * t);
    }
    return eig.eigenvectors * phases.asDiagonal() * eig.eigenvectors.adjoint();
}

ComplexMatrix polar_unitary(const ComplexMatrix& a) {
    require_square_finite(a, "polar input");
    Eigen::JacobiSVD<ComplexMatrix> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    return svd.matrixU() * svd.matrixV().adjoint();
}

ComplexMatrix psd_sqrt(const ComplexMatrix& a, const Tolerances& tol) {
    const auto eig = hermitian_eig(a, tol);
    RealVector roots(eig.eigenvalues.size());
    for (Eigen::Index k = 0; k < roots.size(); ++k) {
        const double w = eig.eigenvalues(k);
        if (w < -tol.psd_negative) {
            std::ostringstream msg;
            msg << "eigenvalue " << w << " < -" << tol.psd_negative;
            throw Error(ErrorKind::NotPSD, msg.str());
        }
        roots(k) = std::sqrt(std::max(w, 0.0));
    }
    ComplexMatrix r = eig.eigenvectors * roots.asDiagonal() * eig.eigenvectors.adjoint();
    return 0.5 * (r + r.adjoint());
}

double wrap_phase(double angle) {
    double r = std::remainder(angle, 2.0 * kPi);  // [-pi, pi]
    if (r <= -kPi) r += 2.0 * kPi;
    return r;
}

double circular_distance(double a, double b) {
    const double d = std::abs(wrap_phase(a - b));
    return std::min(d, 2.0 * kPi - d);
}

double phase_of(cxd z) {
    return wrap_phase(std::arg(z));
}

}  // namespace geophase
