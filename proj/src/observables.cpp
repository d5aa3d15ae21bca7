#include "compton/observables.hpp"

#include <cmath>

#include "compton/errors.hpp"

namespace compton {

namespace {

// Complex 3-vector cross product restricted to the spatial part.
std::array<cplx, 3> cross3(const std::array<cplx, 3>& a,
                           const std::array<cplx, 3>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]};
}

} // namespace

cplx projection_amplitude(PhotonState eps, const Vec2& s, const JointState& psi) {
    const auto [b1, b2] = basis_spinors(psi.basis);
    // <s|b_k>: coordinates of the projector spinor against psi's spin pair.
    const cplx c1 = dot(s, b1), c2 = dot(s, b2);
    const auto pc = photon_coeffs(eps);
    const cplx aH = std::conj(pc.h) * (c1 * psi.amp[0] + c2 * psi.amp[1]);
    const cplx aV = std::conj(pc.v) * (c1 * psi.amp[2] + c2 * psi.amp[3]);
    return aH + aV;
}

double projection_probability(PhotonState eps, const Vec2& s,
                              const JointState& psi) {
    const double n2 = norm2(psi.amp);
    if (n2 <= 0) throw precondition_error("projection_probability: null state");
    return std::norm(projection_amplitude(eps, s, psi)) / n2;
}

double cross_section_prefactor(const ScatteringGeometry& g, double alpha) {
    const auto [k, p] = initial_momenta(g);
    const double w = omega_prime(g);
    const double m = g.mass;
    const double rel = relative_speed(p, k);
    return alpha * alpha / (m * m) * (w * w) / (g.kp * g.kp) * m /
           (p.t * rel) * m / (p.t + g.kp) * constants::natural_xs_barn;
}

double channel_amp2(PhotonState eps, const Vec2& s, const JointState& psi) {
    return std::norm(projection_amplitude(eps, s, psi));
}

double spin_summed_amp2(PhotonState eps, const JointState& psi) {
    const auto [b1, b2] = basis_spinors(psi.basis);
    return channel_amp2(eps, b1, psi) + channel_amp2(eps, b2, psi);
}

double polarization_summed_amp2(const Vec2& s, const JointState& psi) {
    return channel_amp2(PhotonState::h, s, psi) +
           channel_amp2(PhotonState::v, s, psi);
}

double total_amp2(const JointState& psi) { return norm2(psi.amp); }

double differential_cross_section(PhotonState eps, const Vec2& s,
                                  const ScatteringGeometry& g,
                                  const Vec4& psi_in, SpinBasis basis,
                                  double alpha) {
    const JointState out = scatter(amplitude_matrix(g, basis), psi_in);
    return cross_section_prefactor(g, alpha) * channel_amp2(eps, s, out);
}

std::array<double, 4> stokes(const JointState& psi_f, Aggregation how) {
    const auto [se, nw] = basis_spinors(SpinBasis::tilted);
    const auto P = [&](PhotonState e, const Vec2& s) {
        return projection_probability(e, s, psi_f);
    };
    const auto pair_val = [&](PhotonState e) {
        return how == Aggregation::conditional ? P(e, nw)
                                               : P(e, se) + P(e, nw);
    };
    return {pair_val(PhotonState::h) + pair_val(PhotonState::v),
            pair_val(PhotonState::h) - pair_val(PhotonState::v),
            pair_val(PhotonState::diag) - pair_val(PhotonState::antidiag),
            pair_val(PhotonState::left) - pair_val(PhotonState::right)};
}

std::array<double, 4> spin_expectation(const JointState& psi_f, Aggregation how) {
    const auto P = [&](const Vec2& s) {
        const double pl = projection_probability(PhotonState::left, s, psi_f);
        if (how == Aggregation::conditional) return pl;
        return pl + projection_probability(PhotonState::right, s, psi_f);
    };
    const Vec2 sw = tilted_spinor(SpinLabel::sw);
    const Vec2 ne = tilted_spinor(SpinLabel::ne);
    const Vec2 in = tilted_spinor(SpinLabel::into_plane);
    const Vec2 out = tilted_spinor(SpinLabel::out_of_plane);
    const Vec2 se = tilted_spinor(SpinLabel::se);
    const Vec2 nw = tilted_spinor(SpinLabel::nw);
    return {P(sw) + P(ne), P(sw) - P(ne), P(in) - P(out), P(se) - P(nw)};
}

double photon_longitudinal_spin(const CFourVector& eps,
                                const std::array<double, 3>& axis) {
    const std::array<cplx, 3> e{eps.x, eps.y, eps.z};
    const std::array<cplx, 3> ec{std::conj(eps.x), std::conj(eps.y),
                                 std::conj(eps.z)};
    const auto c = cross3(ec, e);
    const cplx s = -I * (c[0] * axis[0] + c[1] * axis[1] + c[2] * axis[2]);
    return std::real(s);
}

std::array<double, 3> electron_spin_vector(const Vec2& s) {
    auto v = pauli_expectation(s);
    return {v[0] / 2, v[1] / 2, v[2] / 2};
}

SpinBudget spin_budget(const CFourVector& eps_in, const Vec2& s_in,
                       const CFourVector& eps_out, const Vec2& s_out) {
    const std::array<double, 3> beam{1.0, 0.0, 0.0};
    SpinBudget b{};
    b.photon_in = photon_longitudinal_spin(eps_in, beam);
    b.photon_out = photon_longitudinal_spin(eps_out, beam);
    b.electron_in = electron_spin_vector(s_in)[0];
    b.electron_out = electron_spin_vector(s_out)[0];
    b.net_transfer =
        (b.photon_out - b.photon_in) + (b.electron_out - b.electron_in);
    return b;
}

double concurrence(const JointState& psi) {
    const double n2 = norm2(psi.amp);
    if (n2 <= 0) throw precondition_error("concurrence: null state");
    return 2.0 *
           std::abs(psi.amp[0] * psi.amp[3] - psi.amp[1] * psi.amp[2]) / n2;
}

double event_rate(double flux_per_s, double focus_area_nm2,
                  double dsdo_barn_per_sr, double domega_sr,
                  double transmittivity) {
    if (flux_per_s < 0 || focus_area_nm2 <= 0 || dsdo_barn_per_sr < 0 ||
        domega_sr < 0 || transmittivity < 0 || transmittivity > 1)
        throw precondition_error("event_rate: arguments out of range");
    const double sigma_nm2 =
        dsdo_barn_per_sr * domega_sr * constants::nm2_per_barn;
    return flux_per_s * (sigma_nm2 / focus_area_nm2) * transmittivity;
}

} // namespace compton
