#pragma once

#include <functional>
#include <vector>

#include "compton/observables.hpp"

// Angular scans and the p1 (initial electron momentum) scan, plus the
// coarse-then-golden extremum refinement used to locate dips and peaks.

namespace compton {

enum class ScanPlane { xy, xz };

// Azimuth of the scan plane: 0 for xy, pi/2 for xz.
double plane_phi(ScanPlane plane);

struct ScanRow {
    double theta = 0;
    double omega = 0;
    // Differential cross sections, microbarn/sr.
    double xs_channel = 0;      // (left photon, nw spin) projection
    double xs_spin_summed = 0;  // left photon, spin summed
    double xs_pol_summed = 0;   // nw spin, photon summed
    double xs_total = 0;
    std::array<double, 4> stokes_cond{}, stokes_sum{};
    std::array<double, 4> spin_cond{}, spin_sum{};
};

struct ScanRequest {
    ScatteringGeometry geometry;  // theta/phi are overridden per sample
    ScanPlane plane = ScanPlane::xz;
    double theta_min = 0.0;
    double theta_max = 2.0 * 3.14159265358979323846;
    int samples = 2001;
    Vec4 psi_in{{0.0, 0.0, 1.0, 0.0}};  // tilted coordinates; default V, se
};

// Single scan row at the geometry's (theta, phi). Throws on singular points.
ScanRow compute_row(const ScatteringGeometry& g, const Vec4& psi_in);

// Uniform theta grid; singular samples are skipped (their thetas are
// appended to *skipped when given).
std::vector<ScanRow> run_scan(const ScanRequest& req,
                              std::vector<double>* skipped = nullptr);

// Coarse scan on [lo, hi] followed by golden-section refinement around the
// best sample. Returns the refined abscissa.
double refine_extremum(const std::function<double(double)>& f, double lo,
                       double hi, int coarse_samples, bool maximize,
                       double tol = 1e-10);

struct P1ScanRow {
    double p1_offset = 0;  // units of m
    // Raw |amplitude|^2 onto (L,se), (L,nw), (R,se), (R,nw) at backscatter
    // from psi_in = |V, se>.
    std::array<double, 4> direct{};
    std::array<double, 4> boosted{};
    double boost_rapidity = 0;
};

// The backscatter projection quadruple for the given geometry.
std::array<double, 4> backscatter_quad(const ScatteringGeometry& g);

// Scans p1_offset over [dp_min, dp_max]; each row carries the quadruple
// evaluated directly at the offset geometry and via the symmetric-frame
// boost (standard geometry at kp e^{-rapidity}).
std::vector<P1ScanRow> run_p1_scan(const ScatteringGeometry& base,
                                   double dp_min, double dp_max, int samples);

} // namespace compton
