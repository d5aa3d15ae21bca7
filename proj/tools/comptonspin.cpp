#include <clocale>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "compton/amplitudes.hpp"
#include "compton/constants.hpp"
#include "compton/errors.hpp"
#include "compton/kinematics.hpp"
#include "compton/observables.hpp"
#include "compton/scan.hpp"
#include "compton/verify.hpp"

namespace {

constexpr double kPi = 3.14159265358979323846;

using compton::cplx;
using nlohmann::json;

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.8e", v);
    return buf;
}

// Complex literal in the form "re", "imi", or "re+imi" (e.g. "0.5-0.5i").
cplx parse_complex(std::string s) {
    std::erase_if(s, [](unsigned char c) { return std::isspace(c); });
    if (s.empty()) throw compton::precondition_error("empty complex literal");
    if (s.back() != 'i') return {std::stod(s), 0.0};
    s.pop_back();
    if (s.empty() || s == "+") return {0.0, 1.0};
    if (s == "-") return {0.0, -1.0};
    // Split before the last sign that is not an exponent sign.
    size_t split = std::string::npos;
    for (size_t i = s.size() - 1; i > 0; --i) {
        if ((s[i] == '+' || s[i] == '-') &&
            s[i - 1] != 'e' && s[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    if (split == std::string::npos) return {0.0, std::stod(s)};
    const std::string re = s.substr(0, split);
    std::string im = s.substr(split);
    if (im == "+") im = "1";
    if (im == "-") im = "-1";
    return {std::stod(re), std::stod(im)};
}

struct GlobalOptions {
    double kp = 0.02;
    double p2 = 0.0;
    double p3 = std::nan("");  // default: calibrated
    std::string units = "m";
    std::string output = "csv";
    bool quiet = false;

    double scale() const {
        return units == "kev" ? 1.0 / compton::constants::electron_mass_kev
                              : 1.0;
    }
};

compton::ScatteringGeometry make_geometry(const GlobalOptions& g,
                                          bool p3_given, bool* calibrated) {
    compton::ScatteringGeometry geo;
    geo.kp = g.kp * g.scale();
    geo.p2 = g.p2 * g.scale();
    if (p3_given) {
        geo.p3 = g.p3 * g.scale();
        if (calibrated) *calibrated = false;
    } else {
        geo.p3 = compton::calibrate_p3(geo.kp);
        if (calibrated) *calibrated = true;
    }
    return geo;
}

json matrix_json(const compton::Mat4& m) {
    json arr = json::array();
    for (int i = 0; i < 16; ++i)
        arr.push_back({{"re", m.e[i].real()}, {"im", m.e[i].imag()}});
    return arr;
}

int cmd_amplitudes(const GlobalOptions& g, bool p3_given, double theta,
                   double phi, const std::string& spin_basis) {
    bool calibrated = false;
    compton::ScatteringGeometry geo = make_geometry(g, p3_given, &calibrated);
    geo.theta = theta;
    geo.phi = phi;

    const bool fallback = geo.kp == 0.0;
    const auto basis = spin_basis == "standard" ? compton::SpinBasis::standard
                                                : compton::SpinBasis::tilted;
    compton::Mat4 m_report, m_tilted;
    if (fallback) {
        // The full tensor is singular at kp = 0; use the small-parameter
        // model, which is exact there.
        const compton::Mat4 t =
            compton::taylor_amplitude(0.0, geo.p2, 1.0 - geo.p3, 2);
        const compton::Mat4 J = compton::joint_spin_rotation();
        m_tilted = dagger(J) * t * J;
        m_report = basis == compton::SpinBasis::standard ? t : m_tilted;
        if (!g.quiet)
            std::cerr << "note: kp = 0, reporting the small-parameter model "
                         "matrix\n";
    } else {
        m_tilted = compton::amplitude_matrix(geo, compton::SpinBasis::tilted).m;
        m_report = basis == compton::SpinBasis::tilted
                       ? m_tilted
                       : compton::amplitude_matrix(
                             geo, compton::SpinBasis::standard)
                             .m;
    }

    const compton::JointState out{
        m_tilted * compton::Vec4{{0.0, 0.0, 1.0, 0.0}},
        compton::SpinBasis::tilted};
    const auto [se, nw] = compton::basis_spinors(compton::SpinBasis::tilted);
    const cplx a_lnw =
        compton::projection_amplitude(compton::PhotonState::left, nw, out);

    json rep;
    rep["geometry"] = {{"kp_over_m", geo.kp}, {"p2", geo.p2},
                       {"p3", geo.p3},        {"theta", geo.theta},
                       {"phi", geo.phi},      {"p1_offset", geo.p1_offset}};
    rep["spin_basis"] = basis == compton::SpinBasis::standard ? "standard"
                                                              : "tilted";
    rep["matrix"] = matrix_json(m_report);
    rep["amplitudes_sq"] = {
        {"l_se", compton::channel_amp2(compton::PhotonState::left, se, out)},
        {"l_nw", compton::channel_amp2(compton::PhotonState::left, nw, out)},
        {"r_se", compton::channel_amp2(compton::PhotonState::right, se, out)},
        {"r_nw", compton::channel_amp2(compton::PhotonState::right, nw, out)}};
    rep["dominant_phase_rad"] = std::arg(a_lnw);
    rep["p3_calibrated"] = calibrated;
    rep["metadata"] = {{"version", compton::constants::version},
                       {"taylor_fallback", fallback}};
    std::cout << rep.dump(2) << "\n";
    return 0;
}

struct ColumnSelection {
    bool xs = true, stokes_cond = true, stokes_sum = true, spin_cond = true,
         spin_sum = true;
};

void print_scan_csv(const std::vector<compton::ScanRow>& rows,
                    const ColumnSelection& cols) {
    std::string header = "theta_rad,omega_prime";
    if (cols.xs)
        header += ",xs_sel_ub,xs_spin_sum_ub,xs_pol_sum_ub,xs_total_ub";
    if (cols.stokes_cond) header += ",S0,S1,S2,S3";
    if (cols.stokes_sum) header += ",S0_sum,S1_sum,S2_sum,S3_sum";
    if (cols.spin_cond) header += ",X0,X1,X2,X3";
    if (cols.spin_sum) header += ",X0_sum,X1_sum,X2_sum,X3_sum";
    std::cout << header << "\n";
    for (const auto& r : rows) {
        std::string line = num(r.theta) + "," + num(r.omega);
        if (cols.xs)
            line += "," + num(r.xs_channel) + "," + num(r.xs_spin_summed) +
                    "," + num(r.xs_pol_summed) + "," + num(r.xs_total);
        const auto append4 = [&line](const std::array<double, 4>& a) {
            for (double v : a) line += "," + num(v);
        };
        if (cols.stokes_cond) append4(r.stokes_cond);
        if (cols.stokes_sum) append4(r.stokes_sum);
        if (cols.spin_cond) append4(r.spin_cond);
        if (cols.spin_sum) append4(r.spin_sum);
        std::cout << line << "\n";
    }
}

json row_json(const compton::ScanRow& r, const ColumnSelection& cols) {
    json o;
    o["theta_rad"] = r.theta;
    o["omega_prime"] = r.omega;
    if (cols.xs) {
        o["xs_sel_ub"] = r.xs_channel;
        o["xs_spin_sum_ub"] = r.xs_spin_summed;
        o["xs_pol_sum_ub"] = r.xs_pol_summed;
        o["xs_total_ub"] = r.xs_total;
    }
    if (cols.stokes_cond) o["stokes"] = r.stokes_cond;
    if (cols.stokes_sum) o["stokes_sum"] = r.stokes_sum;
    if (cols.spin_cond) o["spin"] = r.spin_cond;
    if (cols.spin_sum) o["spin_sum"] = r.spin_sum;
    return o;
}

struct Recipe {
    const char* name;
    const char* plane;
    const char* columns;
    const char* note;
};

constexpr Recipe kRecipes[] = {
    {"xs-xy", "xy", "xs", "cross sections vs theta in the x-y plane"},
    {"xs-xz", "xz", "xs", "cross sections vs theta in the x-z plane"},
    {"stokes-xy", "xy", "stokes-cond", "conditional Stokes parameters, x-y"},
    {"stokes-xz", "xz", "stokes-cond", "conditional Stokes parameters, x-z"},
    {"stokes-sum-xy", "xy", "stokes-sum", "spin-summed Stokes parameters, x-y"},
    {"stokes-sum-xz", "xz", "stokes-sum", "spin-summed Stokes parameters, x-z"},
    {"spin-xy", "xy", "spin-cond", "conditional spin expectations, x-y"},
    {"spin-xz", "xz", "spin-cond", "conditional spin expectations, x-z"},
    {"spin-sum-xy", "xy", "spin-sum", "photon-summed spin expectations, x-y"},
    {"spin-sum-xz", "xz", "spin-sum", "photon-summed spin expectations, x-z"},
};

int cmd_scan(const GlobalOptions& g, bool p3_given, std::string plane,
             double theta_min, double theta_max, int samples,
             const std::string& state, std::vector<std::string> columns,
             const std::string& recipe, bool list_recipes) {
    if (list_recipes) {
        std::printf("%-15s %-5s %-12s %s\n", "name", "plane", "columns",
                    "description");
        for (const auto& r : kRecipes)
            std::printf("%-15s %-5s %-12s %s\n", r.name, r.plane, r.columns,
                        r.note);
        std::printf("(all recipes: default state |V,se>, theta 0..2pi, %d "
                    "samples)\n",
                    2001);
        return 0;
    }
    if (!recipe.empty()) {
        bool found = false;
        for (const auto& r : kRecipes)
            if (recipe == r.name) {
                plane = r.plane;
                columns = {r.columns};
                found = true;
            }
        if (!found) {
            std::cerr << "unknown recipe: " << recipe
                      << " (see --list-recipes)\n";
            return 2;
        }
    }

    compton::ScanRequest req;
    req.geometry = make_geometry(g, p3_given, nullptr);
    if (req.geometry.kp <= 0) {
        std::cerr << "scan requires kp > 0\n";
        return 2;
    }
    req.plane = plane == "xy" ? compton::ScanPlane::xy : compton::ScanPlane::xz;
    req.theta_min = theta_min;
    req.theta_max = theta_max;
    req.samples = samples;

    if (!state.empty()) {
        std::vector<cplx> comps;
        std::string token;
        std::istringstream is(state);
        while (std::getline(is, token, ',')) comps.push_back(parse_complex(token));
        if (comps.size() != 4) {
            std::cerr << "--state needs 4 comma-separated components\n";
            return 2;
        }
        req.psi_in = {{comps[0], comps[1], comps[2], comps[3]}};
        if (norm2(req.psi_in) <= 0) {
            std::cerr << "--state must be nonzero\n";
            return 2;
        }
    }

    ColumnSelection cols;
    if (!columns.empty() &&
        !(columns.size() == 1 && columns[0] == "all")) {
        cols = {false, false, false, false, false};
        for (const auto& c : columns) {
            if (c == "xs") cols.xs = true;
            else if (c == "stokes-cond") cols.stokes_cond = true;
            else if (c == "stokes-sum") cols.stokes_sum = true;
            else if (c == "spin-cond") cols.spin_cond = true;
            else if (c == "spin-sum") cols.spin_sum = true;
            else {
                std::cerr << "unknown column group: " << c << "\n";
                return 2;
            }
        }
    }

    std::vector<double> skipped;
    const auto rows = compton::run_scan(req, &skipped);
    for (double th : skipped)
        if (!g.quiet)
            std::cerr << "warning: skipped singular sample at theta = "
                      << num(th) << "\n";

    if (g.output == "json") {
        json rep;
        rep["metadata"] = {{"version", compton::constants::version},
                           {"plane", plane},
                           {"samples", samples},
                           {"kp_over_m", req.geometry.kp},
                           {"p2", req.geometry.p2},
                           {"p3", req.geometry.p3}};
        json jrows = json::array();
        for (const auto& r : rows) jrows.push_back(row_json(r, cols));
        rep["rows"] = std::move(jrows);
        std::cout << rep.dump(2) << "\n";
    } else {
        print_scan_csv(rows, cols);
    }
    return 0;
}

int cmd_p1_scan(const GlobalOptions& g, bool p3_given, double dp_min,
                double dp_max, int samples) {
    compton::ScatteringGeometry base = make_geometry(g, p3_given, nullptr);
    if (base.kp <= 0) {
        std::cerr << "p1-scan requires kp > 0\n";
        return 2;
    }
    const double kev = 1.0 / compton::constants::electron_mass_kev;
    // Defaults are +-2 keV/c around the symmetric point.
    double lo = std::isnan(dp_min) ? -2.0 * kev : dp_min * g.scale();
    double hi = std::isnan(dp_max) ? 2.0 * kev : dp_max * g.scale();
    const auto rows = compton::run_p1_scan(base, lo, hi, samples);

    if (g.output == "json") {
        json rep;
        rep["metadata"] = {{"version", compton::constants::version},
                           {"kp_over_m", base.kp},
                           {"p3", base.p3}};
        json jrows = json::array();
        for (const auto& r : rows) {
            jrows.push_back({{"p1_offset", r.p1_offset},
                             {"boost_rapidity", r.boost_rapidity},
                             {"direct", r.direct},
                             {"boosted", r.boosted}});
        }
        rep["rows"] = std::move(jrows);
        std::cout << rep.dump(2) << "\n";
        return 0;
    }
    std::cout << "p1_offset,boost_rapidity,direct_l_se,direct_l_nw,"
                 "direct_r_se,direct_r_nw,boost_l_se,boost_l_nw,boost_r_se,"
                 "boost_r_nw,dominant_rel_diff\n";
    for (const auto& r : rows) {
        std::string line = num(r.p1_offset) + "," + num(r.boost_rapidity);
        for (double v : r.direct) line += "," + num(v);
        for (double v : r.boosted) line += "," + num(v);
        line += "," + num(std::abs(r.direct[1] - r.boosted[1]) / r.direct[1]);
        std::cout << line << "\n";
    }
    return 0;
}

int cmd_rate(const GlobalOptions& g, bool p3_given, double flux,
             double area_nm2, double half_angle_mrad, double transmittivity,
             double dsdo_ub_override) {
    compton::ScatteringGeometry geo = make_geometry(g, p3_given, nullptr);
    double dsdo_ub = dsdo_ub_override;
    if (std::isnan(dsdo_ub)) {
        const auto out = compton::scatter(
            compton::amplitude_matrix(geo, compton::SpinBasis::tilted),
            compton::Vec4{{0.0, 0.0, 1.0, 0.0}});
        dsdo_ub = compton::cross_section_prefactor(geo) *
                  compton::channel_amp2(compton::PhotonState::left,
                                        compton::tilted_spinor(
                                            compton::SpinLabel::nw),
                                        out) /
                  compton::constants::barn_per_microbarn;
    }
    const double dsdo_barn = dsdo_ub * compton::constants::barn_per_microbarn;
    const double ha_rad = half_angle_mrad * 1e-3;
    const double domega = kPi * ha_rad * ha_rad;
    const double coll =
        compton::event_rate(flux, area_nm2, dsdo_barn, 1.0, 1.0);
    const double det = compton::event_rate(flux, area_nm2, dsdo_barn, domega,
                                           transmittivity);
    if (g.output == "json") {
        json rep = {{"dsdo_microbarn", dsdo_ub},
                    {"collision_rate_per_s", coll},
                    {"detected_rate_per_s", det},
                    {"seconds_per_detected_photon", 1.0 / det},
                    {"domega_sr", domega},
                    {"metadata", {{"version", compton::constants::version}}}};
        std::cout << rep.dump(2) << "\n";
        return 0;
    }
    std::cout << "dsigma/dOmega (selected channel): " << num(dsdo_ub)
              << " microbarn/sr\n";
    std::cout << "collision rate (dOmega = 1 sr, T = 1): " << num(coll)
              << " /s\n";
    std::cout << "detected rate (half-angle " << num(half_angle_mrad)
              << " mrad, T = " << num(transmittivity) << "): " << num(det)
              << " /s\n";
    std::cout << "seconds per detected photon: " << num(1.0 / det) << "\n";
    return 0;
}

int cmd_verify(bool quick, double alpha_scale) {
    compton::VerifyOptions opt;
    opt.quick = quick;
    opt.alpha_fs = compton::constants::alpha_fs * alpha_scale;
    const auto results = compton::run_acceptance(opt);
    compton::print_results(results, std::cout);
    return compton::all_passed(results) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    std::setlocale(LC_ALL, "C");

    CLI::App app{"Spin- and polarization-resolved Compton scattering "
                 "observables"};
    app.require_subcommand(1);

    GlobalOptions g;
    app.add_option("--kp-over-m", g.kp,
                   "incoming photon momentum (units of m, or keV with "
                   "--units kev)")
        ->capture_default_str();
    app.add_option("--p2", g.p2, "electron transverse momentum along y")
        ->capture_default_str();
    auto* p3_opt = app.add_option(
        "--p3", g.p3,
        "electron transverse momentum along z (default: calibrated value)");
    app.add_option("--units", g.units, "input units for momenta")
        ->check(CLI::IsMember({"m", "kev"}))
        ->capture_default_str();
    app.add_option("--output", g.output, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_flag("--quiet", g.quiet, "suppress warnings on stderr");

    // amplitudes
    auto* amp = app.add_subcommand(
        "amplitudes", "scattering matrix and projection quadruple (JSON)");
    amp->fallthrough();
    double theta = kPi, phi = 0.0;
    std::string spin_basis = "tilted";
    amp->add_option("--theta", theta, "scatter polar angle (rad)")
        ->capture_default_str();
    amp->add_option("--phi", phi, "scatter azimuth (rad)")
        ->capture_default_str();
    amp->add_option("--spin-basis", spin_basis, "matrix spin basis")
        ->check(CLI::IsMember({"tilted", "standard"}))
        ->capture_default_str();

    // scan
    auto* scan = app.add_subcommand("scan", "angular scan (CSV or JSON)");
    scan->fallthrough();
    std::string plane = "xz";
    double theta_min = 0.0, theta_max = 2.0 * kPi;
    int samples = 2001;
    std::string state;
    std::vector<std::string> columns;
    std::string recipe;
    bool list_recipes = false;
    scan->add_option("--plane", plane, "scan plane")
        ->check(CLI::IsMember({"xy", "xz"}))
        ->capture_default_str();
    scan->add_option("--theta-min", theta_min, "first theta (rad)")
        ->capture_default_str();
    scan->add_option("--theta-max", theta_max, "last theta (rad)")
        ->capture_default_str();
    scan->add_option("--samples", samples, "number of samples")
        ->check(CLI::Range(2, 2000000))
        ->capture_default_str();
    scan->add_option("--state", state,
                     "incoming joint state a1,a2,a3,a4 in the tilted basis "
                     "{H se, H nw, V se, V nw}; complex as re+imi "
                     "(default |V,se> = 0,0,1,0)");
    scan->add_option("--columns", columns,
                     "column groups: xs, stokes-cond, stokes-sum, spin-cond, "
                     "spin-sum, all")
        ->delimiter(',');
    scan->add_option("--recipe", recipe, "named preset (see --list-recipes)");
    scan->add_flag("--list-recipes", list_recipes, "list presets and exit");

    // p1-scan
    auto* p1 = app.add_subcommand(
        "p1-scan", "projection quadruple vs initial electron p1 offset");
    p1->fallthrough();
    double dp_min = std::nan(""), dp_max = std::nan("");
    int p1_samples = 41;
    p1->add_option("--dp-min", dp_min,
                   "lowest p1 offset (units per --units; default -2 keV/c)");
    p1->add_option("--dp-max", dp_max,
                   "highest p1 offset (default +2 keV/c)");
    p1->add_option("--samples", p1_samples, "number of samples")
        ->check(CLI::Range(1, 100000))
        ->capture_default_str();

    // rate
    auto* rate = app.add_subcommand("rate", "event-rate estimate");
    rate->fallthrough();
    double flux = 5e16, area_nm2 = 4.0;
    double half_angle_mrad = 5.0 * kPi, transmittivity = 0.5;
    double dsdo_ub_override = std::nan("");
    rate->add_option("--flux", flux, "photons per second")
        ->capture_default_str();
    rate->add_option("--area-nm2", area_nm2, "focus area (nm^2)")
        ->capture_default_str();
    rate->add_option("--half-angle-mrad", half_angle_mrad,
                     "detector slit half-angle (mrad)")
        ->capture_default_str();
    rate->add_option("--transmittivity", transmittivity,
                     "detection transmittivity")
        ->capture_default_str();
    rate->add_option("--dsdo-microbarn", dsdo_ub_override,
                     "override the computed channel cross section");

    // verify
    auto* verify = app.add_subcommand(
        "verify", "run the acceptance checks (exit 0 iff all pass)");
    verify->fallthrough();
    bool quick = false;
    double alpha_scale = 1.0;
    verify->add_flag("--quick", quick, "skip the whole-curve checks");
    verify->add_option("--alpha-scale", alpha_scale,
                       "scale the coupling constant (testing aid)")
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        const bool p3_given = p3_opt->count() > 0;
        if (amp->parsed())
            return cmd_amplitudes(g, p3_given, theta, phi, spin_basis);
        if (scan->parsed())
            return cmd_scan(g, p3_given, plane, theta_min, theta_max, samples,
                            state, columns, recipe, list_recipes);
        if (p1->parsed()) return cmd_p1_scan(g, p3_given, dp_min, dp_max,
                                             p1_samples);
        if (rate->parsed())
            return cmd_rate(g, p3_given, flux, area_nm2, half_angle_mrad,
                            transmittivity, dsdo_ub_override);
        if (verify->parsed()) return cmd_verify(quick, alpha_scale);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
