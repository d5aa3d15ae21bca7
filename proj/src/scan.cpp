#include "compton/scan.hpp"

#include <cmath>

#include "compton/errors.hpp"
#include "compton/golden.hpp"

namespace compton {

namespace {
constexpr double kPi = 3.14159265358979323846;
} // namespace

double plane_phi(ScanPlane plane) {
    return plane == ScanPlane::xy ? 0.0 : kPi / 2.0;
}

ScanRow compute_row(const ScatteringGeometry& g, const Vec4& psi_in) {
    const JointState out = scatter(amplitude_matrix(g, SpinBasis::tilted), psi_in);
    const double pref = cross_section_prefactor(g) / constants::barn_per_microbarn;
    const Vec2 nw = tilted_spinor(SpinLabel::nw);

    ScanRow row;
    row.theta = g.theta;
    row.omega = omega_prime(g);
    row.xs_channel = pref * channel_amp2(PhotonState::left, nw, out);
    row.xs_spin_summed = pref * spin_summed_amp2(PhotonState::left, out);
    row.xs_pol_summed = pref * polarization_summed_amp2(nw, out);
    row.xs_total = pref * total_amp2(out);
    row.stokes_cond = stokes(out, Aggregation::conditional);
    row.stokes_sum = stokes(out, Aggregation::summed);
    row.spin_cond = spin_expectation(out, Aggregation::conditional);
    row.spin_sum = spin_expectation(out, Aggregation::summed);
    return row;
}

std::vector<ScanRow> run_scan(const ScanRequest& req,
                              std::vector<double>* skipped) {
    if (req.samples < 2)
        throw precondition_error("run_scan: need at least 2 samples");
    std::vector<ScanRow> rows;
    rows.reserve(static_cast<size_t>(req.samples));
    const double step = (req.theta_max - req.theta_min) / (req.samples - 1);
    for (int i = 0; i < req.samples; ++i) {
        ScatteringGeometry g = req.geometry;
        g.theta = req.theta_min + step * i;
        g.phi = plane_phi(req.plane);
        try {
            rows.push_back(compute_row(g, req.psi_in));
        } catch (const singularity_error&) {
            if (skipped) skipped->push_back(g.theta);
        }
    }
    return rows;
}

double refine_extremum(const std::function<double(double)>& f, double lo,
                       double hi, int coarse_samples, bool maximize,
                       double tol) {
    if (coarse_samples < 3)
        throw precondition_error("refine_extremum: need at least 3 samples");
    const double step = (hi - lo) / (coarse_samples - 1);
    int best = 0;
    double best_val = f(lo);
    for (int i = 1; i < coarse_samples; ++i) {
        const double v = f(lo + step * i);
        if (maximize ? v > best_val : v < best_val) {
            best = i;
            best_val = v;
        }
    }
    const double a = std::max(lo, lo + step * (best - 1));
    const double b = std::min(hi, lo + step * (best + 1));
    return maximize ? golden_maximize(f, a, b, tol)
                    : golden_minimize(f, a, b, tol);
}

std::array<double, 4> backscatter_quad(const ScatteringGeometry& g) {
    ScatteringGeometry gb = g;
    gb.theta = kPi;
    gb.phi = 0.0;
    const Vec4 psi_v_se{{0.0, 0.0, 1.0, 0.0}};
    const JointState out = scatter(amplitude_matrix(gb, SpinBasis::tilted),
                                   psi_v_se);
    const auto [se, nw] = basis_spinors(SpinBasis::tilted);
    return {channel_amp2(PhotonState::left, se, out),
            channel_amp2(PhotonState::left, nw, out),
            channel_amp2(PhotonState::right, se, out),
            channel_amp2(PhotonState::right, nw, out)};
}

std::vector<P1ScanRow> run_p1_scan(const ScatteringGeometry& base,
                                   double dp_min, double dp_max, int samples) {
    if (samples < 1) throw precondition_error("run_p1_scan: need samples >= 1");
    std::vector<P1ScanRow> rows;
    rows.reserve(static_cast<size_t>(samples));
    const double step =
        samples == 1 ? 0.0 : (dp_max - dp_min) / (samples - 1);
    for (int i = 0; i < samples; ++i) {
        P1ScanRow row;
        row.p1_offset = dp_min + step * i;

        ScatteringGeometry gd = base;
        gd.p1_offset = row.p1_offset;
        row.direct = backscatter_quad(gd);

        row.boost_rapidity = symmetric_frame_rapidity(
            base.kp, base.p2, base.p3, row.p1_offset, base.mass);
        ScatteringGeometry gb = base;
        gb.p1_offset = 0.0;
        gb.kp = base.kp * std::exp(-row.boost_rapidity);
        row.boosted = backscatter_quad(gb);

        rows.push_back(row);
    }
    return rows;
}

} // namespace compton
