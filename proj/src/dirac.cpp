#include "compton/dirac.hpp"

#include <cmath>

#include "compton/errors.hpp"

namespace compton {

namespace {

const std::array<Mat2, 3> kPauli = {
    mat2(0, 1, 1, 0),
    mat2(0, -I, I, 0),
    mat2(1, 0, 0, -1),
};

Mat4 make_gamma0() {
    Mat4 g;
    g(0, 0) = g(1, 1) = 1;
    g(2, 2) = g(3, 3) = -1;
    return g;
}

// gamma^i = [[0, sigma_i], [-sigma_i, 0]]
Mat4 make_gamma(int i) {
    const Mat2& s = kPauli[i - 1];
    Mat4 g;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
            g(r, 2 + c) = s(r, c);
            g(2 + r, c) = -s(r, c);
        }
    return g;
}

const std::array<Mat4, 4> kGamma = {make_gamma0(), make_gamma(1), make_gamma(2),
                                    make_gamma(3)};

constexpr double kNormTol = 1e-10;
constexpr double kShellTol = 1e-10;

} // namespace

const Mat2& pauli(int i) { return kPauli[i - 1]; }

const Mat4& gamma(int mu) { return kGamma[mu]; }

Mat4 slash(const CFourVector& a) {
    Mat4 m = a.t * kGamma[0];
    m = m - a.x * kGamma[1];
    m = m - a.y * kGamma[2];
    m = m - a.z * kGamma[3];
    return m;
}

Vec2 bloch_spinor(double theta, double phi) {
    return {std::cos(theta / 2),
            std::exp(I * phi) * std::sin(theta / 2)};
}

std::array<double, 3> bloch_direction(double theta, double phi) {
    return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
            std::cos(theta)};
}

Vec2 tilted_spinor(SpinLabel which) {
    const double r2 = std::sqrt(2.0);
    const double nm = 1.0 / std::sqrt(2.0 * (2.0 - r2));
    const double np = 1.0 / std::sqrt(2.0 * (2.0 + r2));
    const Vec2 se{nm * (1.0 - r2), -nm};
    const Vec2 nw{np * (1.0 + r2), -np};
    switch (which) {
        case SpinLabel::se: return se;
        case SpinLabel::nw: return nw;
        case SpinLabel::sw: return (se + nw) * (1.0 / r2);
        case SpinLabel::ne: return (se - nw) * (1.0 / r2);
        case SpinLabel::into_plane: return {1.0 / r2, I / r2};
        case SpinLabel::out_of_plane: return {1.0 / r2, -I / r2};
    }
    throw precondition_error("unknown spin label");
}

Mat2 tilted_frame() {
    return columns2(tilted_spinor(SpinLabel::se), tilted_spinor(SpinLabel::nw));
}

std::array<double, 3> pauli_expectation(const Vec2& s) {
    if (std::abs(norm(s) - 1.0) > kNormTol)
        throw precondition_error("pauli_expectation: spinor not normalized");
    std::array<double, 3> out{};
    for (int i = 0; i < 3; ++i) out[i] = std::real(dot(s, kPauli[i] * s));
    return out;
}

Vec4 dirac_spinor(const FourVector& p, const Vec2& s, double mass) {
    if (std::abs(norm(s) - 1.0) > kNormTol)
        throw precondition_error("dirac_spinor: spinor not normalized");
    const double shell = mdot(p, p) - mass * mass;
    const double scale = std::max(1.0, p.t * p.t);
    if (std::abs(shell) > kShellTol * scale || p.t <= 0)
        throw precondition_error("dirac_spinor: momentum off shell");
    // u = sqrt((E+m)/2m) (s ; sigma.p s / (E+m))
    const Mat2 sp = p.x * kPauli[0] + p.y * kPauli[1] + p.z * kPauli[2];
    const Vec2 lower = (sp * s) * (1.0 / (p.t + mass));
    const double pref = std::sqrt((p.t + mass) / (2.0 * mass));
    Vec4 u;
    u[0] = pref * s.u;
    u[1] = pref * s.d;
    u[2] = pref * lower.u;
    u[3] = pref * lower.d;
    return u;
}

cplx sandwich(const Vec4& u_f, const Mat4& M, const Vec4& u_i) {
    // ubar_f M u_i = (gamma^0 u_f)^dag (M u_i); gamma^0 is hermitian.
    return dot(kGamma[0] * u_f, M * u_i);
}

} // namespace compton
