#include "doctest.h"

#include "geophase/error.hpp"
#include "geophase/oracle.hpp"
#include "geophase/phase_engine.hpp"
#include "test_support.hpp"

using namespace geophase;
using namespace geophase::testing;

namespace {

constexpr double kOmega = 1.7;

ComplexMatrix plus_state() {
    return 0.5 * ComplexMatrix::Ones(2, 2);
}

// Bloch vector r along x, H = omega/2 sigma_z:
//   Tr[C U' C V^T] = cos a cos b + sqrt(1-r^2) sin a sin b,
//   a = omega t / 2, b = a sqrt(1-r^2).
double great_circle_trace(double r, double t) {
    const double s = std::sqrt(1.0 - r * r);
    const double a = 0.5 * kOmega * t;
    const double b = a * s;
    return std::cos(a) * std::cos(b) + s * std::sin(a) * std::sin(b);
}

}  // namespace

TEST_CASE("overlap kernel at t = 0 is the weight") {
    for (int trial = 0; trial < 10; ++trial) {
        const auto setup = prepare(random_instance({4, 4, static_cast<std::uint64_t>(trial), 1.0}));
        const ComplexMatrix id = ComplexMatrix::Identity(4, 4);
        for (int j = 0; j < 4; ++j) {
            const cxd m = overlap_kernel(j, id, setup.spectrum.amplitudes, setup.frame.z);
            CHECK(std::abs(m - setup.weights.q(j)) <= 1e-14);
        }
    }
}

TEST_CASE("overlap kernel matches inner products of the component states") {
    for (int trial = 0; trial < 10; ++trial) {
        const auto setup = prepare(random_instance({3, 3, static_cast<std::uint64_t>(60 + trial), 1.0}));
        const auto& c = setup.spectrum.amplitudes;
        for (double t : {0.5, 2.5}) {
            const ComplexMatrix u = evolution(setup, t);
            for (int j = 0; j < 3; ++j) {
                const ComplexVector chi0 =
                    component_state(j, ComplexMatrix::Identity(3, 3), c, setup.frame.z);
                const ComplexVector chit = component_state(j, u, c, setup.frame.z);
                const cxd m = overlap_kernel(j, u, c, setup.frame.z);
                CHECK(std::abs(m - chi0.dot(chit)) <= 1e-13);
                CHECK(std::abs(m) <= setup.weights.q(j) + 1e-12);
            }
        }
    }

    // maximally mixed qubit, H' = omega/2 sigma_x
    const auto setup = prepare(make_problem(0.5 * ComplexMatrix::Identity(2, 2), 0.5 * kOmega * pauli_x()));
    const ComplexMatrix u = evolution(setup, 0.8);
    for (int j = 0; j < 2; ++j) {
        const ComplexVector chi0 = component_state(j, ComplexMatrix::Identity(2, 2),
                                                   setup.spectrum.amplitudes, setup.frame.z);
        const ComplexVector chit = component_state(j, u, setup.spectrum.amplitudes, setup.frame.z);
        const cxd direct = chi0.dot(chit) * std::polar(1.0, setup.frame.kappas(j) * 0.8);
        CHECK(std::abs(overlap_kernel(j, u, setup.spectrum.amplitudes, setup.frame.z)) ==
              doctest::Approx(std::abs(direct)).epsilon(1e-12));
    }
}

TEST_CASE("pure state overlap kernel is the survival amplitude") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 10; ++trial) {
        ComplexVector psi = gaussian_matrix(3, 1, rng).col(0);
        psi.normalize();
        const ComplexMatrix h = random_hermitian(3, rng);
        const auto setup = prepare(make_problem(psi * psi.adjoint(), h));
        const double t = 1.3;
        const cxd survival = psi.dot(unitary_from_hamiltonian(h, t) * psi);
        Eigen::Index top = 0;
        setup.weights.q.maxCoeff(&top);
        const cxd m = overlap_kernel(top, evolution(setup, t), setup.spectrum.amplitudes, setup.frame.z);
        CHECK(std::abs(m) == doctest::Approx(std::abs(survival)).epsilon(1e-12));
    }
}

TEST_CASE("commuting rho and H give vanishing geometric phases") {
    ComplexMatrix rho = ComplexMatrix::Zero(3, 3);
    rho(0, 0) = 0.5;
    rho(1, 1) = 0.3;
    rho(2, 2) = 0.2;
    ComplexMatrix h = ComplexMatrix::Zero(3, 3);
    h(0, 0) = 0.4;
    h(1, 1) = -1.1;
    h(2, 2) = 2.5;
    const auto setup = prepare(make_problem(rho, h));
    for (double t : {0.3, 1.0, 4.0, 11.0}) {
        const auto report = analyze(setup, t);
        for (const auto& c : report.components) {
            CHECK(std::abs(c.gamma) <= 1e-12);
            CHECK(c.visibility == doctest::Approx(1.0).epsilon(1e-12));
        }
        REQUIRE(report.gamma_total);
        REQUIRE(report.sjoqvist);
        CHECK(circular_distance(*report.gamma_total, 0.0) <= 1e-9);
        CHECK(circular_distance(*report.sjoqvist, 0.0) <= 1e-9);
    }
}

TEST_CASE("pure |+> on the equator: gamma = pi, no dynamical phase") {
    const double period = 2.0 * kPi / kOmega;
    const auto setup = prepare(make_problem(plus_state(), 0.5 * kOmega * pauli_z()));
    const ComplexMatrix u = evolution(setup, period);
    const auto& c = setup.spectrum.amplitudes;

    CHECK(setup.frame.k.norm() <= 1e-15);
    Eigen::Index top = 0;
    setup.weights.q.maxCoeff(&top);
    const auto comp = component_report(top, period, setup.frame, setup.weights, u, c);
    CHECK(circular_distance(comp.gamma, kPi) <= 1e-12);
    CHECK(std::abs(comp.dyn_phase) <= 1e-15);

    CHECK(circular_distance(total_geometric_phase(period, setup.frame, setup.weights, u, c), kPi) <= 1e-9);
    CHECK(circular_distance(uhlmann_trace_phase(period, u, c, setup.frame.k), kPi) <= 1e-9);
    CHECK(circular_distance(sjoqvist_phase(period, setup.spectrum.lambdas, setup.h_prime, u), kPi) <= 1e-9);
    ComplexVector plus(2);
    plus << 1.0, 1.0;
    plus /= std::sqrt(2.0);
    CHECK(circular_distance(pancharatnam_phase(plus, 0.5 * kOmega * pauli_z(), period), kPi) <= 1e-9);
}

TEST_CASE("component reports: gamma = total - dynamical, visibility bounded") {
    for (int trial = 0; trial < 20; ++trial) {
        const auto setup = prepare(random_instance({3, 3, static_cast<std::uint64_t>(90 + trial), 1.0}));
        for (double t : {0.0, 0.7, 3.1, 8.0}) {
            const auto report = analyze(setup, t);
            REQUIRE(report.components.size() == 3);
            for (const auto& c : report.components) {
                CHECK(circular_distance(c.gamma, c.total_phase - c.dyn_phase) <= 1e-10);
                CHECK(c.visibility >= 0.0);
                CHECK(c.visibility <= 1.0 + 1e-10);
                CHECK(c.gamma > -kPi);
                CHECK(c.gamma <= kPi);
                CHECK(c.dyn_phase == doctest::Approx(setup.frame.kappas(c.j) * t));
                if (t == 0.0) CHECK(c.visibility == doctest::Approx(1.0).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("negligible components follow the sentinel convention") {
    const auto setup = prepare(make_problem(plus_state(), 0.5 * kOmega * pauli_y() + 0.3 * pauli_z()));
    const auto report = analyze(setup, 1.1);
    int negligible = 0;
    for (const auto& c : report.components) {
        if (!c.negligible) continue;
        ++negligible;
        CHECK(c.visibility == 0.0);
        CHECK(c.gamma == 0.0);
    }
    CHECK(negligible == 1);
    CHECK(report.components.size() == 2);
}

TEST_CASE("maximally mixed states have zero phase for every H and t") {
    std::mt19937_64 rng(101);
    for (int n : {2, 3, 5}) {
        const ComplexMatrix rho = ComplexMatrix::Identity(n, n) / static_cast<double>(n);
        const auto setup = prepare(make_problem(rho, random_hermitian(n, rng)));
        CHECK((setup.frame.k + setup.h_prime.transpose()).norm() <= 1e-12);
        for (double t : {0.2, 1.9, 7.5, 30.0}) {
            const auto report = analyze(setup, t);
            REQUIRE(report.gamma_total);
            REQUIRE(report.uhlmann);
            CHECK(circular_distance(*report.gamma_total, 0.0) <= 1e-9);
            CHECK(circular_distance(*report.uhlmann, 0.0) <= 1e-9);
            CHECK(report.overlap_magnitude == doctest::Approx(1.0).epsilon(1e-10));
            CHECK(report.degenerate_spectrum_warning);
        }
    }
}

TEST_CASE("Uhlmann trace at t = 0 is Tr C^2 = 1") {
    const auto setup = prepare(random_instance({4, 4, 5, 1.0}));
    const cxd tr = uhlmann_trace(0.0, ComplexMatrix::Identity(4, 4), setup.spectrum.amplitudes, setup.frame.k);
    CHECK(std::abs(tr - 1.0) <= 1e-14);
}

TEST_CASE("qubit great circle: closed-form trace, and the two definitions disagree") {
    const double r = 0.6;
    const auto setup = prepare(make_problem(bloch_x_state(r), 0.5 * kOmega * pauli_z()));
    const auto& c = setup.spectrum.amplitudes;
    for (double t : {0.4, 1.3, 2.0, 3.0}) {
        const ComplexMatrix u = evolution(setup, t);
        const cxd tr = uhlmann_trace(t, u, c, setup.frame.k);
        CHECK(std::abs(tr - great_circle_trace(r, t)) <= 1e-12);
        CHECK(std::abs(total_overlap(t, setup.frame, setup.weights, u, c) - great_circle_trace(r, t)) <= 1e-12);
    }

    const double period = 2.0 * kPi / kOmega;
    CHECK(great_circle_trace(r, period) == doctest::Approx(-std::cos(kPi * 0.8)));
    const auto report = analyze(setup, period);
    REQUIRE(report.gamma_total);
    REQUIRE(report.sjoqvist);
    CHECK(circular_distance(*report.gamma_total, 0.0) <= 1e-9);
    CHECK(circular_distance(*report.sjoqvist, kPi) <= 1e-9);
    CHECK(circular_distance(*report.gamma_total, *report.sjoqvist) > 0.5);
    CHECK(report.components[0].q == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("unified phase equals the Uhlmann trace phase on random instances") {
    for (int n : {2, 3, 4, 6}) {
        for (int trial = 0; trial < 25; ++trial) {
            const auto setup = prepare(random_instance({n, n, static_cast<std::uint64_t>(7000 + 100 * n + trial), 1.0}));
            for (double t : {0.3, 1.7, 5.0}) {
                const ComplexMatrix u = evolution(setup, t);
                const auto& c = setup.spectrum.amplitudes;
                const double g = total_geometric_phase(t, setup.frame, setup.weights, u, c);
                const double uhl = uhlmann_trace_phase(t, u, c, setup.frame.k);
                CHECK(circular_distance(g, uhl) <= 1e-9);
            }
        }
    }
}

TEST_CASE("gauge rephasing of the eigenbasis leaves Gamma unchanged") {
    std::mt19937_64 rng(131);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    for (int trial = 0; trial < 20; ++trial) {
        const Problem p = random_instance({4, 4, static_cast<std::uint64_t>(300 + trial), 1.0});
        const auto base = prepare(p);
        RealVector th(4);
        for (auto& x : th) x = angle(rng);
        const auto moved = prepare(p, rephase(base.spectrum, th));
        for (double t : {0.6, 2.4}) {
            CHECK(circular_distance(*analyze(base, t).gamma_total, *analyze(moved, t).gamma_total) <= 1e-9);
        }
    }
}

TEST_CASE("pure-state limit: unified, Sjoqvist and Pancharatnam agree") {
    std::mt19937_64 rng(151);
    for (int n : {2, 3}) {
        for (int trial = 0; trial < 15; ++trial) {
            ComplexVector psi = gaussian_matrix(n, 1, rng).col(0);
            psi.normalize();
            const ComplexMatrix h = random_hermitian(n, rng);
            const auto setup = prepare(make_problem(psi * psi.adjoint(), h));
            const double t = 0.9;
            const auto report = analyze(setup, t);
            const double ref = pancharatnam_phase(psi, h, t);
            CHECK(circular_distance(*report.gamma_total, ref) <= 1e-8);
            CHECK(circular_distance(*report.sjoqvist, ref) <= 1e-8);
            CHECK(circular_distance(*report.uhlmann, ref) <= 1e-8);
        }
    }
}

TEST_CASE("singular rho: kernel freedom of K does not move the phase") {
    std::mt19937_64 rng(171);
    for (int trial = 0; trial < 10; ++trial) {
        const Problem p = random_instance({4, 2, static_cast<std::uint64_t>(900 + trial), 1.0});
        const auto setup = prepare(p);
        ComplexMatrix k = setup.frame.k;
        k.bottomRightCorner(2, 2) += random_hermitian(2, rng);
        const AncillaFrame alt = diagonalizing_frame(k);
        const ComponentWeights alt_w = component_weights(setup.spectrum.amplitudes, alt.z);
        for (double t : {0.8, 3.6}) {
            const ComplexMatrix u = evolution(setup, t);
            const auto& c = setup.spectrum.amplitudes;
            const double ref = total_geometric_phase(t, setup.frame, setup.weights, u, c);
            CHECK(circular_distance(total_geometric_phase(t, alt, alt_w, u, c), ref) <= 1e-9);
            CHECK(circular_distance(uhlmann_trace_phase(t, u, c, k), ref) <= 1e-9);
        }
    }
}

TEST_CASE("nodal points are reported as undefined") {
    const double node = kPi / kOmega;  // <+|U|+> = cos(pi/2)
    const auto pure = prepare(make_problem(plus_state(), 0.5 * kOmega * pauli_z()));
    const ComplexMatrix u = evolution(pure, node);
    try {
        total_geometric_phase(node, pure.frame, pure.weights, u, pure.spectrum.amplitudes);
        FAIL("expected VanishingVisibility");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::VanishingVisibility);
    }
    const auto report = analyze(pure, node);
    CHECK_FALSE(report.gamma_total);
    CHECK_FALSE(report.all_defined());
    CHECK(report.overlap_magnitude <= 1e-12);
    CHECK_FALSE(report.warnings.empty());

    // the mixed great-circle state has a Sjoqvist node at the same time but a finite Gamma
    const auto mixed = prepare(make_problem(bloch_x_state(0.6), 0.5 * kOmega * pauli_z()));
    const auto mr = analyze(mixed, node);
    CHECK_FALSE(mr.sjoqvist);
    REQUIRE(mr.gamma_total);
    CHECK_THROWS_AS(sjoqvist_phase(node, mixed.spectrum.lambdas, mixed.h_prime, evolution(mixed, node)), Error);
}
