#include "compton/amplitudes.hpp"

#include <cmath>

#include "compton/errors.hpp"

namespace compton {

namespace {
constexpr double kDenGuard = 1e-12;
const double kSqrt2 = std::sqrt(2.0);
} // namespace

PolarizationPair polarization_basis(double theta, double phi) {
    const double st = std::sin(theta), ct = std::cos(theta);
    const double sp = std::sin(phi), cp = std::cos(phi);
    PolarizationPair out;
    out.v = CFourVector{0.0, 0.0, -sp, cp};
    out.h = CFourVector{0.0, st, -ct * cp, -ct * sp};
    return out;
}

CFourVector incoming_h() { return {0.0, 0.0, 1.0, 0.0}; }
CFourVector incoming_v() { return {0.0, 0.0, 0.0, 1.0}; }

PhotonCoeffs photon_coeffs(PhotonState s) {
    const double r = 1.0 / kSqrt2;
    switch (s) {
        case PhotonState::h: return {1.0, 0.0};
        case PhotonState::v: return {0.0, 1.0};
        case PhotonState::diag: return {r, r};
        case PhotonState::antidiag: return {r, -r};
        case PhotonState::left: return {r, I * r};
        case PhotonState::right: return {r, -I * r};
    }
    throw precondition_error("unknown photon state");
}

CFourVector photon_vector(PhotonState s, const CFourVector& h4,
                          const CFourVector& v4) {
    const auto c = photon_coeffs(s);
    return c.h * h4 + c.v * v4;
}

cplx compton_tensor_element(const FourVector& p_i, const Vec2& s_i,
                            const FourVector& p_f, const Vec2& s_f,
                            const FourVector& k, const CFourVector& eps_in,
                            const FourVector& kprime, const CFourVector& eps_out,
                            double mass) {
    const double d1 = 2.0 * mdot(p_i, k);
    const double d2 = -2.0 * mdot(p_i, kprime);
    if (std::abs(d1) < kDenGuard || std::abs(d2) < kDenGuard)
        throw singularity_error("compton_tensor_element: propagator pole");

    const Mat4 spi = slash(CFourVector(p_i));
    const Mat4 mI = mass * identity4();
    const Mat4 n1 = spi + slash(CFourVector(k)) + mI;
    const Mat4 n2 = spi - slash(CFourVector(kprime)) + mI;
    const Mat4 so = slash(conj(eps_out));
    const Mat4 si = slash(eps_in);

    const Mat4 G = (1.0 / d1) * (so * n1 * si) + (1.0 / d2) * (si * n2 * so);
    const Vec4 ui = dirac_spinor(p_i, s_i, mass);
    const Vec4 uf = dirac_spinor(p_f, s_f, mass);
    return mass * sandwich(uf, G, ui);
}

std::pair<Vec2, Vec2> basis_spinors(SpinBasis basis) {
    if (basis == SpinBasis::standard) return {Vec2{1.0, 0.0}, Vec2{0.0, 1.0}};
    return {tilted_spinor(SpinLabel::se), tilted_spinor(SpinLabel::nw)};
}

AmplitudeMatrix amplitude_matrix(const ScatteringGeometry& g, SpinBasis basis) {
    const auto [k, p_i] = initial_momenta(g);
    const auto fin = final_momenta(g);
    const auto out = polarization_basis(g.theta, g.phi);
    const CFourVector eps_in[2] = {incoming_h(), incoming_v()};
    const CFourVector eps_out[2] = {out.h, out.v};
    const auto [s1, s2] = basis_spinors(basis);
    const Vec2 spins[2] = {s1, s2};

    AmplitudeMatrix M{{}, basis};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            M.m(r, c) = compton_tensor_element(
                p_i, spins[c % 2], fin.pprime, spins[r % 2], k, eps_in[c / 2],
                fin.kprime, eps_out[r / 2], g.mass);
    return M;
}

Mat4 joint_spin_rotation() {
    const Mat2 U = tilted_frame();
    Mat4 J;
    for (int b = 0; b < 2; ++b)
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) J(2 * b + r, 2 * b + c) = U(r, c);
    return J;
}

JointState scatter(const AmplitudeMatrix& M, const Vec4& psi_in) {
    if (norm2(psi_in) <= 0)
        throw precondition_error("scatter: null input state");
    return {M.m * psi_in, M.basis};
}

Mat4 taylor_amplitude(double alpha, double beta, double gamma_, int order) {
    if (order < 1 || order > 2)
        throw precondition_error("taylor_amplitude: order must be 1 or 2");
    const cplx c1 = I * (1.0 - kSqrt2) / kSqrt2 * alpha;
    const cplx cc = -I * alpha / 2.0;
    const cplx cv = I * alpha / kSqrt2;
    const double c2 = (order >= 2) ? (kSqrt2 - 1.0) / 2.0 * alpha * alpha : 0.0;

    const Mat2 hh = identity2() * (1.0 + c2) + pauli(2) * c1;
    const Mat2 hv = (pauli(1) + pauli(3)) * cc - identity2() * beta;
    const Mat2 vh = (pauli(1) - pauli(3)) * (-cc) - identity2() * beta;
    const Mat2 vv = pauli(2) * cv + identity2() * (gamma_ + c2);

    Mat4 T;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
            T(r, c) = hh(r, c);
            T(r, 2 + c) = hv(r, c);
            T(2 + r, c) = vh(r, c);
            T(2 + r, 2 + c) = vv(r, c);
        }
    return T;
}

double calibrate_p3(double kp) {
    if (kp == 0.0) return 1.0;
    const auto vv_trace = [kp](double p3) {
        ScatteringGeometry g;
        g.kp = kp;
        g.p2 = 0.0;
        g.p3 = p3;
        g.theta = 3.14159265358979323846;
        g.phi = 0.0;
        const auto [k, p_i] = initial_momenta(g);
        const auto fin = final_momenta(g);
        const CFourVector eV = incoming_v();
        const auto out = polarization_basis(g.theta, g.phi);
        const Vec2 up{1.0, 0.0}, dn{0.0, 1.0};
        const cplx t_uu = compton_tensor_element(p_i, up, fin.pprime, up, k, eV,
                                                 fin.kprime, out.v);
        const cplx t_dd = compton_tensor_element(p_i, dn, fin.pprime, dn, k, eV,
                                                 fin.kprime, out.v);
        return std::real(t_uu + t_dd);
    };
    // The trace falls through zero inside [1, 1 + 1e-3]: bisect.
    double lo = 1.0, hi = 1.0 + 1e-3;
    double flo = vv_trace(lo);
    if (flo == 0.0) return lo;
    for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = vv_trace(mid);
        if ((fm > 0) == (flo > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace compton
