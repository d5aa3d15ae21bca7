#pragma once

#include <utility>

#include "compton/algebra.hpp"
#include "compton/dirac.hpp"
#include "compton/kinematics.hpp"

// Invariant scattering amplitudes. The 4x4 joint matrix acts on
// photon (x) electron-spin product states ordered {H s1, H s2, V s1, V s2},
// where (s1, s2) is either the computational pair (up, down) or the tilted
// pair (se, nw). Incoming photon basis: H = e_y, V = e_z. Outgoing photon
// basis: the plane-adapted pair from polarization_basis(theta, phi), which
// coincides with (e_y, e_z) at backscatter in the x-y plane.

namespace compton {

// Outgoing linear polarization pair for scatter direction (theta, phi):
// V' = e_x x n / |e_x x n| = (0, -sin phi, cos phi),
// H' = n x V'            = (sin theta, -cos theta cos phi, -cos theta sin phi).
// V' x H' = n, so (H', V') match the incoming (e_y, e_z) pair at backscatter
// in the x-y plane. Well-defined at all theta.
struct PolarizationPair {
    CFourVector h, v;
};

PolarizationPair polarization_basis(double theta, double phi);

// Incoming basis vectors (zero time component).
CFourVector incoming_h();
CFourVector incoming_v();

// Photon states expressed in an (H, V) basis.
enum class PhotonState { h, v, diag, antidiag, left, right };

// Coefficients (c_h, c_v) with left = (H + iV)/sqrt(2), diag = (H+V)/sqrt(2).
struct PhotonCoeffs {
    cplx h, v;
};

PhotonCoeffs photon_coeffs(PhotonState s);

// Complex polarization vector for a state in the basis (h4, v4).
CFourVector photon_vector(PhotonState s, const CFourVector& h4,
                          const CFourVector& v4);

// Invariant amplitude <eps_out, s_f | M | eps_in, s_i> for photon momenta
// k -> kprime and electron momenta p_i -> p_f. The outgoing polarization
// enters complex conjugated. Throws singularity_error when a propagator
// denominator |p_i.k| or |p_i.kprime| falls below 1e-12.
cplx compton_tensor_element(const FourVector& p_i, const Vec2& s_i,
                            const FourVector& p_f, const Vec2& s_f,
                            const FourVector& k, const CFourVector& eps_in,
                            const FourVector& kprime, const CFourVector& eps_out,
                            double mass = 1.0);

enum class SpinBasis { standard, tilted };

// The basis spinor pair (s1, s2) for a spin basis.
std::pair<Vec2, Vec2> basis_spinors(SpinBasis basis);

struct AmplitudeMatrix {
    Mat4 m;
    SpinBasis basis;
};

// Full 4x4 joint amplitude matrix for the geometry, rows indexed by
// outgoing (H', V') x (s1, s2), columns by incoming (H, V) x (s1, s2).
// Tilted-basis evaluation is direct (tilted spinors fed to the tensor);
// it coincides with conjugating the standard matrix by 1 (x) U.
AmplitudeMatrix amplitude_matrix(const ScatteringGeometry& g,
                                 SpinBasis basis = SpinBasis::tilted);

// 1 (x) U on the joint space, U = tilted_frame(): maps tilted coordinates
// to standard coordinates.
Mat4 joint_spin_rotation();

// Joint state: amplitude vector plus the spin basis its coordinates use.
struct JointState {
    Vec4 amp;
    SpinBasis basis = SpinBasis::tilted;
};

// psi_out = M psi_in (basis carried along). Throws precondition_error on a
// null input state.
JointState scatter(const AmplitudeMatrix& M, const Vec4& psi_in);

// Small-parameter model of the backscatter matrix in the standard basis,
// alpha = kp/m, beta = p2/m, gamma = 1 - p3/m:
//   M_HH = 1 + i (1-sqrt2)/sqrt2 alpha sy            [+ c2 alpha^2]
//   M_HV = -i alpha/2 (sx + sz) - beta
//   M_VH = +i alpha/2 (sx - sz) - beta
//   M_VV = i alpha/sqrt2 sy + gamma                  [+ c2 alpha^2]
// with c2 = (sqrt2 - 1)/2; the alpha^2 diagonal terms enter at order >= 2.
Mat4 taylor_amplitude(double alpha, double beta, double gamma_, int order = 2);

// p3 root of the trace of the V->V photon block at backscatter (the trace is
// spin-basis invariant), bracketed in [1, 1 + 1e-3]. At this p3 the V->V
// block is purely spin-rotating. Returns 1 when kp = 0.
double calibrate_p3(double kp);

} // namespace compton
