#pragma once

#include <array>

#include "compton/algebra.hpp"

// Dirac algebra in the Dirac representation, metric (+,-,-,-), and the
// electron spin states used throughout: computational (up/down along z),
// Bloch-sphere, and the six "tilted" states whose spin directions lie on the
// diagonals of the x-z plane or along +-y.

namespace compton {

// Pauli matrix sigma_i, i = 1..3.
const Mat2& pauli(int i);

// Gamma matrix gamma^mu, mu = 0..3 (Dirac representation).
const Mat4& gamma(int mu);

// Feynman slash: a_mu gamma^mu for a contravariant argument.
Mat4 slash(const CFourVector& a);

// Spinor (cos(theta/2), e^{i phi} sin(theta/2)) pointing along the Bloch
// direction (theta, phi).
Vec2 bloch_spinor(double theta, double phi);

// Unit vector (sin t cos p, sin t sin p, cos t) — the spin direction of
// bloch_spinor(t, p).
std::array<double, 3> bloch_direction(double theta, double phi);

// Tilted spin states. Compass labels describe the spin direction in the
// x-z plane as drawn with x to the right and z up: se = (+x,-z)/sqrt(2),
// nw = (-x,+z)/sqrt(2), sw, ne likewise; into/out_of_plane point along -+y.
enum class SpinLabel { sw, ne, into_plane, out_of_plane, se, nw };

Vec2 tilted_spinor(SpinLabel which);

// Unitary whose columns are (tilted se, tilted nw): maps coordinates in the
// tilted spin basis to the computational basis.
Mat2 tilted_frame();

// <s|sigma|s> for a normalized spinor; throws precondition_error if
// | ||s|| - 1 | > 1e-10. The expectation is exactly real by hermiticity.
std::array<double, 3> pauli_expectation(const Vec2& s);

// Positive-energy solution of the free Dirac equation with momentum p and
// Pauli spinor s, normalized to ubar u = 1 (so u^dag u = E/m).
// Throws precondition_error if p is off-shell (relative 1e-10) or E <= 0,
// or if s is not normalized.
Vec4 dirac_spinor(const FourVector& p, const Vec2& s, double mass = 1.0);

// ubar_f M u_i with ubar = u^dag gamma^0.
cplx sandwich(const Vec4& u_f, const Mat4& M, const Vec4& u_i);

} // namespace compton
