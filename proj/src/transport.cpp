#include "geophase/transport.hpp"

#include <cmath>
#include <sstream>

#include "geophase/error.hpp"

namespace geophase {
namespace {

void require_amplitudes(const RealVector& amplitudes, Eigen::Index n) {
    if (amplitudes.size() != n) {
        std::ostringstream msg;
        msg << "expected " << n << " amplitudes, got " << amplitudes.size();
        throw Error(ErrorKind::DimensionMismatch, msg.str());
    }
    for (Eigen::Index k = 0; k < n; ++k) {
        if (!(amplitudes(k) >= 0.0) || !std::isfinite(amplitudes(k))) {
            throw Error(ErrorKind::InvalidArgument, "amplitudes must be finite and non-negative");
        }
    }
}

void require_index(Eigen::Index j, Eigen::Index n) {
    if (j < 0 || j >= n) {
        std::ostringstream msg;
        msg << "component index " << j << " outside [0, " << n << ")";
        throw Error(ErrorKind::IndexOutOfRange, msg.str());
    }
}

}  // namespace

ComplexMatrix solve_ancilla_hamiltonian(const RealVector& amplitudes,
                                        const ComplexMatrix& h_prime, const Tolerances& tol) {
    require_hermitian(h_prime, "H'", tol);
    const Eigen::Index n = h_prime.rows();
    require_amplitudes(amplitudes, n);

    ComplexMatrix k_transposed = ComplexMatrix::Zero(n, n);
    for (Eigen::Index a = 0; a < n; ++a) {
        for (Eigen::Index b = 0; b < n; ++b) {
            const double ca = amplitudes(a);
            const double cb = amplitudes(b);
            const double denom = ca * ca + cb * cb;
            if (denom <= tol.kernel_support) continue;
            k_transposed(a, b) = (-2.0 * ca * cb / denom) * h_prime(a, b);
        }
    }
    return k_transposed.transpose();
}

double ancilla_equation_residual(const RealVector& amplitudes, const ComplexMatrix& h_prime,
                                 const ComplexMatrix& k, const Tolerances& tol) {
    const Eigen::Index n = h_prime.rows();
    require_amplitudes(amplitudes, n);
    if (k.rows() != n || k.cols() != n) {
        throw Error(ErrorKind::DimensionMismatch, "K and H' dimensions differ");
    }
    const ComplexMatrix c = amplitudes.cast<cxd>().asDiagonal();
    const ComplexMatrix c2 = c * c;
    const ComplexMatrix kt = k.transpose();
    ComplexMatrix r = c2 * kt + kt * c2 + 2.0 * c * h_prime * c;
    for (Eigen::Index a = 0; a < n; ++a) {
        for (Eigen::Index b = 0; b < n; ++b) {
            const double denom = amplitudes(a) * amplitudes(a) + amplitudes(b) * amplitudes(b);
            if (denom <= tol.kernel_support) r(a, b) = 0.0;
        }
    }
    return r.norm();
}

AncillaFrame diagonalizing_frame(const ComplexMatrix& k, const Tolerances& tol) {
    auto eig = hermitian_eig(k, tol);
    return AncillaFrame{k, eig.eigenvectors.adjoint(), std::move(eig.eigenvalues)};
}

ComponentWeights component_weights(const RealVector& amplitudes, const ComplexMatrix& z) {
    require_square_finite(z, "Z");
    require_amplitudes(amplitudes, z.rows());
    const RealVector c2 = amplitudes.array().square();
    return ComponentWeights{z.cwiseAbs2() * c2};
}

ComplexVector component_seed(Eigen::Index j, const RealVector& amplitudes,
                             const ComplexMatrix& z) {
    require_square_finite(z, "Z");
    require_amplitudes(amplitudes, z.rows());
    require_index(j, z.rows());
    return amplitudes.cast<cxd>().cwiseProduct(z.row(j).transpose());
}

ComplexVector component_state(Eigen::Index j, const ComplexMatrix& u_t,
                              const RealVector& amplitudes, const ComplexMatrix& z) {
    if (u_t.rows() != z.rows() || u_t.cols() != z.rows()) {
        throw Error(ErrorKind::DimensionMismatch, "U(t) and Z dimensions differ");
    }
    return u_t * component_seed(j, amplitudes, z);
}

}  // namespace geophase
