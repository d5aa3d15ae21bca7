#pragma once

#include <array>

#include "compton/algebra.hpp"

// Scattering kinematics. The incoming photon travels along +x with momentum
// kp; the electron counter-propagates with p1 = -kp + p1_offset and carries
// transverse momentum (p2, p3) along (y, z). All momenta are in units of the
// electron mass. The scattered photon direction is
// n = (cos theta, sin theta cos phi, sin theta sin phi), so phi = 0 scans the
// x-y plane and phi = pi/2 the x-z plane.

namespace compton {

struct ScatteringGeometry {
    double kp = 0.02;       // incoming photon momentum / m
    double p2 = 0.0;        // electron transverse momentum along y / m
    double p3 = 1.0;        // electron transverse momentum along z / m
    double theta = 3.14159265358979323846;
    double phi = 0.0;
    double p1_offset = 0.0; // electron p1 = -kp + p1_offset
    double mass = 1.0;
};

struct InitialState {
    FourVector k;  // photon
    FourVector p;  // electron
};

struct FinalState {
    FourVector kprime;  // photon
    FourVector pprime;  // electron
    double omega;       // scattered photon energy
};

// Unit scatter direction for (theta, phi).
std::array<double, 3> scatter_direction(double theta, double phi);

// On-shell initial momenta; throws kinematics_error if kp < 0.
InitialState initial_momenta(const ScatteringGeometry& g);

// Scattered photon energy from four-momentum conservation with the final
// electron on shell. Reduces to kp (E+kp) / (E + kp - p2 st cp - p3 st sp)
// when p1_offset = 0. Throws kinematics_error if the result is not positive.
double omega_prime(const ScatteringGeometry& g);

// Full final state; pprime = p + k - kprime by construction.
FinalState final_momenta(const ScatteringGeometry& g);

// Flux-normalization speed of the incoming pair: |v_e + v_gamma|, the norm
// of the vector sum of the two velocities (axial components subtract for the
// head-on geometry, the electron's transverse velocity adds in quadrature).
// For the photon along +x this is sqrt((E - kp)^2 + p2^2 + p3^2) / E.
double relative_speed(const FourVector& p_electron, const FourVector& k_photon);

// Pure boost along x with the given rapidity: t' = t cosh - x sinh, etc.
Mat4Real boost_matrix(double rapidity);

// Rapidity of the boost along x that restores the symmetric frame
// (electron p1 = -photon kp) when the electron momentum is offset by
// p1_offset. Zero at p1_offset = 0. In the boosted frame the geometry is
// standard with kp_tilde = kp exp(-rapidity) and unchanged p2, p3.
double symmetric_frame_rapidity(double kp, double p2, double p3,
                                double p1_offset, double mass = 1.0);

} // namespace compton
