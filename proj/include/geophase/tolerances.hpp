#pragma once

namespace geophase {

// Numeric thresholds shared by every module. Defaults are the contract values;
// pass a modified copy only for experiments.
struct Tolerances {
    double hermitian = 1e-10;        // ||A - A^dagger||_F
    double unit_trace = 1e-10;       // |Tr rho - 1|
    double psd_negative = 1e-12;     // eigenvalues in [-psd_negative, 0) are clamped
    double kernel_support = 1e-14;   // c_k^2 + c_l^2 below this is treated as 0/0
    double weight_floor = 1e-10;     // components with q_j <= this are negligible
    double overlap_floor = 1e-12;    // |overlap| <= this means the phase is undefined
    double degeneracy_gap = 1e-9;    // eigenvalue gaps below this are flagged
};

inline constexpr Tolerances kDefaultTolerances{};

}  // namespace geophase
