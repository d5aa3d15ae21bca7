#pragma once

#include <array>

#include "compton/amplitudes.hpp"
#include "compton/constants.hpp"
#include "compton/kinematics.hpp"

// Spin- and polarization-resolved observables built from scattered joint
// states: projection probabilities, differential cross sections, Stokes
// parameters of the outgoing photon conditioned on (or summed over) the
// electron spin, electron spin expectations conditioned on the photon,
// angular-momentum bookkeeping, entanglement, and event-rate estimates.

namespace compton {

// Raw projection amplitude <eps, s | psi>. The photon part of the projector
// is taken in psi's (H, V) photon basis; the electron spinor s may be any
// normalized spinor and is decomposed onto psi's spin basis pair.
cplx projection_amplitude(PhotonState eps, const Vec2& s, const JointState& psi);

// P = |<eps, s|psi>|^2 / <psi|psi>. Sums to 1 over any complete joint basis.
double projection_probability(PhotonState eps, const Vec2& s,
                              const JointState& psi);

// |amp|^2 -> barn/sr conversion factor for the geometry:
// alpha^2 (w'/kp)^2 / (E |dv| (E + kp)) in natural units, times the
// Compton-wavelength-squared barn scale.
double cross_section_prefactor(const ScatteringGeometry& g,
                               double alpha = constants::alpha_fs);

// Raw |amplitude|^2 aggregates of a scattered state.
double channel_amp2(PhotonState eps, const Vec2& s, const JointState& psi);
double spin_summed_amp2(PhotonState eps, const JointState& psi);
double polarization_summed_amp2(const Vec2& s, const JointState& psi);
double total_amp2(const JointState& psi);

// dsigma/dOmega in barn/sr for projecting the scattered state of psi_in
// (coordinates in `basis`) onto (eps, s).
double differential_cross_section(PhotonState eps, const Vec2& s,
                                  const ScatteringGeometry& g,
                                  const Vec4& psi_in,
                                  SpinBasis basis = SpinBasis::tilted,
                                  double alpha = constants::alpha_fs);

enum class Aggregation { conditional, summed };

// Stokes parameters (S0, S1, S2, S3) of the outgoing photon in the scan basis:
// S1 from (H, V), S2 from (D, A), S3 from (L, R). `conditional` uses the
// probabilities with the electron projected on the tilted nw state only;
// `summed` adds both tilted spin projections (then S0 = 1 identically).
std::array<double, 4> stokes(const JointState& psi_f, Aggregation how);

// Electron spin expectation quadruple (X0, X1, X2, X3): X1 from (sw, ne),
// X2 from (into, out of plane), X3 from (se, nw). `conditional` uses
// left-photon projections only; `summed` adds left and right.
std::array<double, 4> spin_expectation(const JointState& psi_f, Aggregation how);

// Longitudinal photon spin -i (eps* x eps) . axis for a normalized
// polarization vector (the time component is ignored).
double photon_longitudinal_spin(const CFourVector& eps,
                                const std::array<double, 3>& axis);

// <sigma>/2 of a normalized Pauli spinor.
std::array<double, 3> electron_spin_vector(const Vec2& s);

// Angular momentum along the beam axis (+x) before and after scattering.
struct SpinBudget {
    double photon_in, photon_out;
    double electron_in, electron_out;
    double net_transfer;  // (photon_out - photon_in) + (electron_out - electron_in)
};

SpinBudget spin_budget(const CFourVector& eps_in, const Vec2& s_in,
                       const CFourVector& eps_out, const Vec2& s_out);

// Concurrence 2 |a1 a4 - a2 a3| / ||psi||^2 of the photon-electron state.
// Invariant under local (photon or spin) unitaries, so the basis tag does
// not matter. Throws precondition_error on a null state.
double concurrence(const JointState& psi);

// Expected events per second: flux * (dsigma/dOmega * dOmega / focus area)
// * transmittivity, with one target electron per focus area.
double event_rate(double flux_per_s, double focus_area_nm2,
                  double dsdo_barn_per_sr, double domega_sr,
                  double transmittivity);

} // namespace compton
