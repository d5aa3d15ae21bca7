#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cmath>

#include "compton/errors.hpp"
#include "compton/observables.hpp"

using namespace compton;

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kP3Root = 1.0000828324202071;

ScatteringGeometry geo(double theta, double phi) {
    ScatteringGeometry g;
    g.kp = 0.02;
    g.p3 = kP3Root;
    g.theta = theta;
    g.phi = phi;
    return g;
}

JointState scattered(const ScatteringGeometry& g,
                     const Vec4& psi = Vec4{{0.0, 0.0, 1.0, 0.0}}) {
    return scatter(amplitude_matrix(g), psi);
}
} // namespace

TEST_CASE("projection probabilities are complete over a joint basis") {
    const JointState out = scattered(geo(2.3, kPi / 2));
    const auto [se, nw] = basis_spinors(SpinBasis::tilted);
    double sum = 0.0;
    for (PhotonState e : {PhotonState::h, PhotonState::v})
        for (const Vec2& s : {se, nw}) sum += projection_probability(e, s, out);
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-13));
    // Equivalent complete photon pairs give the same total.
    double sum_circ = 0.0;
    for (PhotonState e : {PhotonState::left, PhotonState::right})
        for (const Vec2& s : {se, nw})
            sum_circ += projection_probability(e, s, out);
    CHECK(sum_circ == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("cross-section aggregates are consistent sums") {
    const ScatteringGeometry g = geo(1.7, 0.0);
    const JointState out = scattered(g);
    const auto [se, nw] = basis_spinors(SpinBasis::tilted);
    const double pieces =
        channel_amp2(PhotonState::left, se, out) +
        channel_amp2(PhotonState::left, nw, out);
    CHECK(spin_summed_amp2(PhotonState::left, out) ==
          doctest::Approx(pieces).epsilon(1e-12));
    const double all =
        spin_summed_amp2(PhotonState::h, out) +
        spin_summed_amp2(PhotonState::v, out);
    CHECK(total_amp2(out) == doctest::Approx(all).epsilon(1e-12));
    // differential_cross_section = prefactor * |projection|^2.
    const double want = cross_section_prefactor(g) *
                        channel_amp2(PhotonState::left, nw, out);
    CHECK(differential_cross_section(PhotonState::left, nw, g,
                                     Vec4{{0.0, 0.0, 1.0, 0.0}}) ==
          doctest::Approx(want).epsilon(1e-13));
}

TEST_CASE("frozen peak cross section of the dominant channel") {
    const ScatteringGeometry g = geo(kPi, 0.0);
    const double xs = differential_cross_section(
                          PhotonState::left, tilted_spinor(SpinLabel::nw), g,
                          Vec4{{0.0, 0.0, 1.0, 0.0}}) /
                      constants::barn_per_microbarn;
    CHECK(xs == doctest::Approx(12.903598854049772).epsilon(1e-9));
    CHECK(std::abs(xs / 12.0 - 1.0) < 0.10);
}

TEST_CASE("backscatter photon is circularly polarized") {
    for (double phi : {0.0, kPi / 2}) {
        const auto out = scattered(geo(kPi, phi));
        const auto s = stokes(out, Aggregation::conditional);
        CHECK(s[3] / s[0] > 0.999);
        CHECK(std::abs(s[1]) < 1e-3);
        CHECK(std::abs(s[2]) < 1e-3);
        const auto ss = stokes(out, Aggregation::summed);
        CHECK(std::abs(ss[0] - 1.0) < 1e-12);  // summed S0 is an identity
    }
}

TEST_CASE("summed Stokes parameters at frozen sample angles (x-y plane)") {
    const auto s1 = stokes(scattered(geo(0.01 * kPi, 0.0)),
                           Aggregation::summed);
    CHECK(s1[1] == doctest::Approx(-0.999).epsilon(2e-3));
    const auto s2 = stokes(scattered(geo(0.4 * kPi, 0.0)),
                           Aggregation::summed);
    CHECK(s2[2] == doctest::Approx(1.0).epsilon(5e-3));
    const auto s3 = stokes(scattered(geo(1.6 * kPi, 0.0)),
                           Aggregation::summed);
    CHECK(s3[2] == doctest::Approx(-1.0).epsilon(5e-3));
    // In the x-z plane the outgoing linear basis rotates with the plane, so
    // the near-forward photon reads as +1 there instead.
    const auto sz = stokes(scattered(geo(0.01 * kPi, kPi / 2)),
                           Aggregation::summed);
    CHECK(sz[1] == doctest::Approx(1.0).epsilon(2e-3));
}

TEST_CASE("electron spin expectations at frozen sample angles") {
    const auto x_fwd = spin_expectation(scattered(geo(1e-6, kPi / 2)),
                                        Aggregation::summed);
    CHECK(x_fwd[3] == doctest::Approx(1.0).epsilon(2e-3));
    const auto x_back = spin_expectation(scattered(geo(kPi, kPi / 2)),
                                         Aggregation::summed);
    CHECK(x_back[3] == doctest::Approx(-1.0).epsilon(2e-3));
    const auto x_mid = spin_expectation(scattered(geo(kPi / 2, 0.0)),
                                        Aggregation::conditional);
    CHECK(x_mid[3] == doctest::Approx(0.5068).epsilon(2e-3));
}

TEST_CASE("photon longitudinal spin of the basis states") {
    const std::array<double, 3> x_axis{1.0, 0.0, 0.0};
    const CFourVector l = photon_vector(PhotonState::left, incoming_h(),
                                        incoming_v());
    const CFourVector r = photon_vector(PhotonState::right, incoming_h(),
                                        incoming_v());
    CHECK(photon_longitudinal_spin(l, x_axis) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(photon_longitudinal_spin(r, x_axis) == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(std::abs(photon_longitudinal_spin(incoming_h(), x_axis)) < 1e-14);
    CHECK(std::abs(photon_longitudinal_spin(incoming_v(), x_axis)) < 1e-14);
}

TEST_CASE("angular momentum bookkeeping of the dominant transition") {
    const auto basis = polarization_basis(kPi, 0.0);
    const CFourVector eps_out =
        photon_vector(PhotonState::left, basis.h, basis.v);
    const auto b = spin_budget(incoming_v(), tilted_spinor(SpinLabel::se),
                               eps_out, tilted_spinor(SpinLabel::nw));
    const double half_inv_sqrt2 = 0.5 / std::sqrt(2.0);
    CHECK(std::abs(b.photon_in) < 1e-14);
    CHECK(b.photon_out == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(b.electron_in == doctest::Approx(half_inv_sqrt2).epsilon(1e-12));
    CHECK(b.electron_out == doctest::Approx(-half_inv_sqrt2).epsilon(1e-12));
    CHECK(b.net_transfer ==
          doctest::Approx(1.0 - 1.0 / std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("concurrence: product states, frozen scattered value, invariance") {
    CHECK(concurrence({Vec4{{0.0, 0.0, 1.0, 0.0}}, SpinBasis::tilted}) == 0.0);
    const double r2 = std::sqrt(2.0);
    // Maximally entangled reference.
    CHECK(concurrence({Vec4{{1.0 / r2, 0.0, 0.0, 1.0 / r2}},
                       SpinBasis::tilted}) == doctest::Approx(1.0));

    const Vec4 psi_v_sw{{0.0, 0.0, 1.0 / r2, 1.0 / r2}};
    const JointState out = scattered(geo(kPi, 0.0), psi_v_sw);
    CHECK(concurrence(out) ==
          doctest::Approx(0.999999994872488).epsilon(1e-7));
    // Local change of the spin basis leaves the concurrence alone.
    const JointState out_std{joint_spin_rotation() * out.amp,
                             SpinBasis::standard};
    CHECK(concurrence(out_std) == doctest::Approx(concurrence(out)).epsilon(1e-12));
    CHECK_THROWS_AS(concurrence({Vec4{}, SpinBasis::tilted}),
                    precondition_error);
}

TEST_CASE("frozen event rates") {
    const double dsdo_barn = 12.903617686336423 * constants::barn_per_microbarn;
    CHECK(event_rate(5e16, 4.0, dsdo_barn, 1.0, 1.0) ==
          doctest::Approx(16.129522107920305).epsilon(1e-9));
    const double half_angle = 5e-3 * kPi;
    const double det = event_rate(5e16, 4.0, dsdo_barn,
                                  kPi * half_angle * half_angle, 0.5);
    CHECK(1.0 / det == doctest::Approx(159.96275260932902).epsilon(1e-9));
}

TEST_CASE("event-rate input validation") {
    CHECK_THROWS_AS(event_rate(-1.0, 4.0, 1e-5, 1.0, 0.5), precondition_error);
    CHECK_THROWS_AS(event_rate(5e16, 0.0, 1e-5, 1.0, 0.5), precondition_error);
    CHECK_THROWS_AS(event_rate(5e16, 4.0, 1e-5, 1.0, 1.5), precondition_error);
}
