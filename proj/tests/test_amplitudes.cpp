#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "compton/amplitudes.hpp"
#include "compton/errors.hpp"
#include "compton/observables.hpp"

using namespace compton;

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kP3Root = 1.0000828324202071;

ScatteringGeometry calibrated_backscatter() {
    ScatteringGeometry g;
    g.kp = 0.02;
    g.p3 = kP3Root;
    g.theta = kPi;
    g.phi = 0.0;
    return g;
}

double max_entry(const Mat4& m) {
    double worst = 0.0;
    for (const auto& x : m.e) worst = std::max(worst, std::abs(x));
    return worst;
}
} // namespace

TEST_CASE("outgoing polarization basis is orthonormal, transverse, right-handed") {
    for (double th : {0.0, 0.7, kPi / 2, 2.9, kPi, 4.4})
        for (double ph : {0.0, kPi / 2, 1.2}) {
            const auto [h, v] = polarization_basis(th, ph);
            // Spacelike unit vectors, mutually orthogonal (epsilon.epsilon = -1).
            CHECK(std::abs(mdot(h, conj(h)) + 1.0) < 1e-14);
            CHECK(std::abs(mdot(v, conj(v)) + 1.0) < 1e-14);
            CHECK(std::abs(mdot(h, conj(v))) < 1e-14);
            // Transverse to the scattered photon direction.
            const auto n = scatter_direction(th, ph);
            const FourVector kp{1.0, n[0], n[1], n[2]};
            CHECK(std::abs(mdot(h, CFourVector(kp))) < 1e-14);
            CHECK(std::abs(mdot(v, CFourVector(kp))) < 1e-14);
            // V' x H' = n.
            const double cx = std::real(v.y * h.z - v.z * h.y);
            const double cy = std::real(v.z * h.x - v.x * h.z);
            const double cz = std::real(v.x * h.y - v.y * h.x);
            CHECK(std::abs(cx - n[0]) + std::abs(cy - n[1]) +
                      std::abs(cz - n[2]) <
                  1e-14);
        }
}

TEST_CASE("polarization basis matches the fixed pair at backscatter in x-y") {
    const auto [h, v] = polarization_basis(kPi, 0.0);
    CHECK(std::abs(h.y - 1.0) + std::abs(h.x) + std::abs(h.z) < 1e-15);
    CHECK(std::abs(v.z - 1.0) + std::abs(v.x) + std::abs(v.y) < 1e-15);
}

TEST_CASE("p3 calibration root is reproducible") {
    CHECK(calibrate_p3(0.02) == doctest::Approx(kP3Root).epsilon(1e-13));
    CHECK(calibrate_p3(0.0) == 1.0);
    // At the root the V->V photon block is traceless.
    const Mat4 m = amplitude_matrix(calibrated_backscatter()).m;
    CHECK(std::abs(m(2, 2) + m(3, 3)) < 1e-12);
}

TEST_CASE("frozen backscatter projection quadruple") {
    const AmplitudeMatrix M = amplitude_matrix(calibrated_backscatter());
    const JointState out = scatter(M, Vec4{{0.0, 0.0, 1.0, 0.0}});  // V, se
    const auto [se, nw] = basis_spinors(SpinBasis::tilted);
    CHECK(channel_amp2(PhotonState::left, se, out) ==
          doctest::Approx(1.715018273e-13).epsilon(1e-5));
    CHECK(channel_amp2(PhotonState::left, nw, out) ==
          doctest::Approx(3.999737287e-04).epsilon(1e-6));
    CHECK(channel_amp2(PhotonState::right, se, out) ==
          doctest::Approx(1.715018390e-13).epsilon(1e-5));
    CHECK(channel_amp2(PhotonState::right, nw, out) ==
          doctest::Approx(2.942262493e-14).epsilon(1e-5));
    // The dominant transition amplitude is (+-i) alpha-like: phase +- pi/2.
    const cplx a = projection_amplitude(PhotonState::left, nw, out);
    CHECK(std::abs(std::abs(std::arg(a)) - kPi / 2) < 2e-3);
}

TEST_CASE("tilted matrix block structure at the calibrated point") {
    const Mat4 m = amplitude_matrix(calibrated_backscatter()).m;
    // H->H block: near-identity diagonal, antisymmetric spin rotation.
    CHECK(std::abs(m(0, 0) - kP3Root) < 1e-6);
    CHECK(std::abs(m(1, 1) - kP3Root) < 1e-6);
    CHECK(std::real(m(0, 1)) == doctest::Approx(-5.858207e-3).epsilon(1e-4));
    CHECK(std::abs(m(0, 1) + m(1, 0)) < 1e-5);
    // V->V block: vanishing diagonal, pure spin rotation off the diagonal.
    CHECK(std::abs(m(2, 2)) < 1e-12);
    CHECK(std::abs(m(3, 3)) < 1e-12);
    CHECK(std::abs(m(2, 3)) == doctest::Approx(1.414179e-2).epsilon(1e-4));
    CHECK(std::abs(m(2, 3) + m(3, 2)) < 1e-5);
    // Polarization-flip blocks: spin-flip scale alpha/sqrt(2).
    Mat4 hv, vh;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
            hv(r, c) = m(r, c + 2);
            vh(r, c) = m(r + 2, c);
        }
    CHECK(max_entry(hv) == doctest::Approx(1.414155e-2).epsilon(1e-3));
    CHECK(max_entry(vh) == doctest::Approx(1.414155e-2).epsilon(1e-3));
}

TEST_CASE("standard and tilted evaluations agree through the basis map") {
    ScatteringGeometry g = calibrated_backscatter();
    g.theta = 2.2;
    g.phi = 0.35;
    g.p2 = 0.1;
    const Mat4 tilt = amplitude_matrix(g, SpinBasis::tilted).m;
    const Mat4 std_m = amplitude_matrix(g, SpinBasis::standard).m;
    const Mat4 j = joint_spin_rotation();
    CHECK(frobenius_norm(tilt - dagger(j) * std_m * j) < 1e-12);
    CHECK(frobenius_norm(dagger(j) * j - identity4()) < 1e-14);
}

TEST_CASE("gauge invariance: longitudinal polarizations decouple") {
    ScatteringGeometry g = calibrated_backscatter();
    g.theta = 1.9;
    g.phi = 0.6;
    g.p2 = 0.07;
    const auto [k, p] = initial_momenta(g);
    const auto fin = final_momenta(g);
    const auto eps = polarization_basis(g.theta, g.phi);
    const Vec2 se = tilted_spinor(SpinLabel::se);
    const Vec2 nw = tilted_spinor(SpinLabel::nw);
    // Replace either polarization with its photon momentum: amplitude -> 0.
    const cplx w_in = compton_tensor_element(p, se, fin.pprime, nw, k,
                                             CFourVector(k), fin.kprime, eps.h);
    const cplx w_out = compton_tensor_element(p, se, fin.pprime, nw, k,
                                              incoming_v(), fin.kprime,
                                              CFourVector(fin.kprime));
    CHECK(std::abs(w_in) < 1e-12);
    CHECK(std::abs(w_out) < 1e-12);
}

TEST_CASE("polarization completeness of |amplitude|^2") {
    ScatteringGeometry g = calibrated_backscatter();
    g.theta = 2.7;
    g.phi = kPi / 2;
    const auto [k, p] = initial_momenta(g);
    const auto fin = final_momenta(g);
    const auto eps = polarization_basis(g.theta, g.phi);
    const Vec2 si = tilted_spinor(SpinLabel::se);
    const Vec2 sf = tilted_spinor(SpinLabel::nw);

    const auto amp2_out = [&](PhotonState s) {
        const CFourVector e = photon_vector(s, eps.h, eps.v);
        const cplx a = compton_tensor_element(p, si, fin.pprime, sf, k,
                                              incoming_v(), fin.kprime, e);
        return std::norm(a);
    };
    const double lin = amp2_out(PhotonState::h) + amp2_out(PhotonState::v);
    const double diag = amp2_out(PhotonState::diag) + amp2_out(PhotonState::antidiag);
    const double circ = amp2_out(PhotonState::left) + amp2_out(PhotonState::right);
    CHECK(lin == doctest::Approx(diag).epsilon(1e-12));
    CHECK(lin == doctest::Approx(circ).epsilon(1e-12));
}

TEST_CASE("small-parameter model converges to the full matrix") {
    // Residual of the order-1 model scales as alpha^2.
    const auto residual = [](double alpha, double p3, int order) {
        ScatteringGeometry g;
        g.kp = alpha;
        g.p3 = p3;
        g.theta = kPi;
        g.phi = 0.0;
        const Mat4 full = amplitude_matrix(g, SpinBasis::standard).m;
        return max_entry(full - taylor_amplitude(alpha, 0.0, 1.0 - p3, order));
    };
    const double r2 = residual(0.02, kP3Root, 1);
    const double r1 = residual(0.01, kP3Root, 1);
    CHECK(r2 == doctest::Approx(8.2832e-5).epsilon(1e-2));
    CHECK(r1 / r2 == doctest::Approx(0.25).epsilon(2e-3));
    // The order-2 model is alpha^3-accurate.
    CHECK(residual(0.02, 1.0, 2) < 1e-5);
    CHECK(residual(1e-3, 1.0, 2) < 2e-9);
    CHECK(residual(1e-6, 1.0, 2) < 1e-8);
}

TEST_CASE("amplitude input validation") {
    CHECK_THROWS_AS(taylor_amplitude(0.02, 0.0, 0.0, 3), precondition_error);
    const AmplitudeMatrix M = amplitude_matrix(calibrated_backscatter());
    CHECK_THROWS_AS(scatter(M, Vec4{}), precondition_error);
    // Vanishing propagator denominator: photon soft against a resting electron.
    const FourVector rest{1.0, 0.0, 0.0, 0.0};
    const FourVector soft{1e-13, 1e-13, 0.0, 0.0};
    CHECK_THROWS_AS(
        compton_tensor_element(rest, Vec2{1.0, 0.0}, rest, Vec2{1.0, 0.0}, soft,
                               incoming_h(), soft, incoming_h()),
        singularity_error);
}
