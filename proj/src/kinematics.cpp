#include "compton/kinematics.hpp"

#include <cmath>

#include "compton/errors.hpp"

namespace compton {

std::array<double, 3> scatter_direction(double theta, double phi) {
    return {std::cos(theta), std::sin(theta) * std::cos(phi),
            std::sin(theta) * std::sin(phi)};
}

InitialState initial_momenta(const ScatteringGeometry& g) {
    if (g.kp < 0) throw kinematics_error("initial_momenta: kp must be >= 0");
    if (g.mass <= 0) throw kinematics_error("initial_momenta: mass must be > 0");
    const double p1 = -g.kp + g.p1_offset;
    const double E = std::sqrt(g.mass * g.mass + p1 * p1 + g.p2 * g.p2 +
                               g.p3 * g.p3);
    return {{g.kp, g.kp, 0.0, 0.0}, {E, p1, g.p2, g.p3}};
}

double omega_prime(const ScatteringGeometry& g) {
    const auto [k, p] = initial_momenta(g);
    const FourVector P = p + k;
    const auto n = scatter_direction(g.theta, g.phi);
    // (P - k')^2 = m^2 with k' = w (1, n): w = (P^2 - m^2)/(2 (P^0 - n.P)).
    // P^2 - m^2 = 2 p.k exactly (p on shell, k null); the direct product
    // avoids the catastrophic cancellation of (P^2 - m^2) at small kp.
    const double num = 2.0 * mdot(p, k);
    const double den = 2.0 * (P.t - (n[0] * P.x + n[1] * P.y + n[2] * P.z));
    if (den <= 0) throw kinematics_error("omega_prime: degenerate direction");
    const double w = num / den;
    if (w < 0) throw kinematics_error("omega_prime: negative photon energy");
    return w;
}

FinalState final_momenta(const ScatteringGeometry& g) {
    const auto [k, p] = initial_momenta(g);
    const double w = omega_prime(g);
    const auto n = scatter_direction(g.theta, g.phi);
    const FourVector kprime{w, w * n[0], w * n[1], w * n[2]};
    return {kprime, p + k - kprime, w};
}

double relative_speed(const FourVector& p_electron, const FourVector& k_photon) {
    if (p_electron.t <= 0 || k_photon.t <= 0)
        throw kinematics_error("relative_speed: energies must be positive");
    const double dx = p_electron.x / p_electron.t + k_photon.x / k_photon.t;
    const double dy = p_electron.y / p_electron.t + k_photon.y / k_photon.t;
    const double dz = p_electron.z / p_electron.t + k_photon.z / k_photon.t;
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

Mat4Real boost_matrix(double rapidity) {
    Mat4Real L = identity4_real();
    const double ch = std::cosh(rapidity), sh = std::sinh(rapidity);
    L(0, 0) = ch;
    L(0, 1) = -sh;
    L(1, 0) = -sh;
    L(1, 1) = ch;
    return L;
}

double symmetric_frame_rapidity(double kp, double p2, double p3,
                                double p1_offset, double mass) {
    if (kp <= 0) throw kinematics_error("symmetric_frame_rapidity: kp must be > 0");
    // Transverse mass of the electron; its x-motion lives on this hyperbola.
    const double Et = std::sqrt(mass * mass + p2 * p2 + p3 * p3);
    const double eta = std::asinh(kp / Et);
    // Electron x-rapidity magnitude is eta + Delta.
    const double Delta = std::asinh(std::sinh(eta) - p1_offset / Et) - eta;
    // Solve sinh(eta + Delta + th) = sinh(eta) e^{-th} for the boost th:
    // e^{2 th} = e^{-Delta} - e^{-2 eta - Delta} + e^{-2 eta - 2 Delta}.
    const double u2 = std::exp(-Delta) - std::exp(-2 * eta - Delta) +
                      std::exp(-2 * eta - 2 * Delta);
    if (u2 <= 0)
        throw kinematics_error("symmetric_frame_rapidity: no physical boost");
    return 0.5 * std::log(u2);
}

} // namespace compton
