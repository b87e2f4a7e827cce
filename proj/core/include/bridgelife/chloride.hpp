#pragma once

#include <optional>
#include <string>

#include "bridgelife/units.hpp"

namespace bridgelife::chloride {

// Unit normalization used throughout this module: cover and diameters are
// stored in mm, diffusion coefficients in cm2/s, i_corr in uA/cm2, times in
// years. Formulas are evaluated in SI after explicit conversion; the source
// models' mixed units (mils, 1e-4 g/cm2, mA/ft2) are converted at the boundary:
//   1 uA/cm2            = 0.01 A/m2
//   1e-4 g/cm2          = 1 g/m2
//   1 mil               = 0.0254 mm
//   j_r [g/(m2 s)]      = (W/F) * i_corr[uA/cm2] * 0.01

struct ChlorideEnvironment {
    double surface_chloride_kg_m3;   // C0
    double threshold_chloride_kg_m3; // Cth
    double diffusion_cm2_s;          // Dca, apparent
    double cover_mm;                 // c
};

struct RebarGeometry {
    double diameter_mm;                    // D (also the initial diameter)
    std::optional<double> perimeter_mm{};  // p; defaults to pi*D
    double perimeter() const;
};

struct CorrosionKinetics {
    double icorr_uA_cm2 = 1.0;
    double equivalent_weight = 27.925; // W, of steel
    double faraday_c = 96847.0;        // F
    double steel_density_kg_m3 = 7850.0;
    double pitting_factor = 5.0;       // R, typically 4..6
};

struct LiuWeyersParams {
    double rust_density_kg_m3 = 3600.0;
    double pore_band_mm = 0.1245;      // d0, 4.9 mils
    double rust_weight_ratio = 0.57;   // alpha: 0.523 Fe(OH)3, 0.622 Fe(OH)2
    double tensile_strength_mpa = 3.3; // f_t
    double effective_modulus_mpa = 18e3; // E_ef
    double poisson_ratio = 0.2;        // nu_c
};

struct VuConstants {
    double a;
    double b;
};

/// Empirical constants keyed by limit crack width; accepts 0.3, 0.5, 1.0 mm.
VuConstants vu_constants(double limit_crack_width_mm);

/// Chloride concentration C(x, t) from the error-function solution of the
/// diffusion equation. x in mm, t in years, result in kg/m3.
double chloride_profile(const ChlorideEnvironment& env, double depth_mm, double t_years);

/// Time to corrosion initiation (diffusion solution inverted at the cover
/// depth). nullopt when Cth >= C0 (threshold never reached).
std::optional<double> t1_fick(const ChlorideEnvironment& env);

/// Initiation time, alternative closed form. Dc in cm2/s.
std::optional<double> t1_bazant(const ChlorideEnvironment& env, double dc_cm2_s);

/// Instantaneous corrosion mass flux j_r in g/(m2 s).
double rust_flux(const CorrosionKinetics& kin);

/// Time from initiation to cover cracking as rust builds a diameter increase
/// of delta_d_mm. nullopt when i_corr == 0 (no cracking).
std::optional<double> t2_bazant(const RebarGeometry& geom, const CorrosionKinetics& kin,
                                double delta_d_mm);

/// Critical corrosion amount Q_cr in 1e-4 g/cm2.
double morinaga_critical_corrosion(double diameter_mm, double cover_mm);

std::optional<double> t2_morinaga(const RebarGeometry& geom, double cover_mm,
                                  const CorrosionKinetics& kin);

/// Ratio of corrosion-product thickness to rebar penetration depth,
/// 0.33 * (D/c)^0.565 * f_cu^1.436 (f_cu in kN/cm2).
double wang_thickness_ratio(double diameter_mm, double cover_mm, double fcu_kn_cm2);

/// Time to longitudinal cover cracking. The critical product thickness the
/// model needs is not fixed by its source; when not supplied it defaults to
/// the thickness whose associated section loss produces a 0.3 mm surface
/// crack (see t3_crackwidth_hu): penetration H = 0.5 * 0.7098 mm.
std::optional<double> t2_wang(const RebarGeometry& geom, double cover_mm, double fcu_kn_cm2,
                              const CorrosionKinetics& kin,
                              std::optional<double> delta_crit_mm = std::nullopt);

/// Thick-walled-cylinder cracking model. W_crit solved in closed form;
/// W_crit and k_p carried in mg/mm of bar. Throws ModelError when
/// alpha*rho_rust/rho_st >= 1.
std::optional<double> t2_liu_weyers(const RebarGeometry& geom, double cover_mm,
                                    const LiuWeyersParams& lw, const CorrosionKinetics& kin);

/// Rebar diameter after t years of propagation, theta(t) = theta_i - 0.023*i*t,
/// clamped at zero.
double t3_andrade(double initial_diameter_mm, const CorrosionKinetics& kin, double t_years);

struct WilliamsonResult {
    double years;
    bool clamped = false; // negative formula value reported as 0
};

/// Propagation time to a given percent deck deterioration.
WilliamsonResult t3_williamson(double percent_deterioration);

/// Piecewise rebar diameter under pitting corrosion; t and t1 on the same
/// clock (years since construction).
double rebar_diameter_hu(double diameter_mm, const CorrosionKinetics& kin, double t1_years,
                         double t_years);

struct CrackWidthResult {
    std::optional<double> years; // smallest t with w_s >= limit; nullopt if unreachable
    bool at_intercept = false;   // limit at or below the 0.164 mm intercept
};

/// Inverts the surface-crack-width relation w_s = 0.1916*dA + 0.164 through
/// the piecewise diameter history.
CrackWidthResult t3_crackwidth_hu(double diameter_mm, const CorrosionKinetics& kin,
                                  double t1_years, double crack_limit_mm);

/// Loading correction factor for accelerated-test corrosion rates.
double vu_loading_correction(double icorr_experiment, double icorr_real);

/// Time to excessive cracking (absolute, includes t1).
double t3_vu(double t1_years, const CorrosionKinetics& kin, double cover_mm,
             double water_cement_ratio, double limit_crack_width_mm, double icorr_experiment,
             double icorr_real);

enum class T1Model { Fick, Bazant };
enum class T2Model { Bazant, Morinaga, Wang, LiuWeyers };
enum class T3Model { Williamson, CrackWidthHu, Vu };

/// Per-stage model selection plus the extra parameters each model needs.
struct ChlorideLifeChoices {
    T1Model t1 = T1Model::Fick;
    T2Model t2 = T2Model::Morinaga;
    T3Model t3 = T3Model::Williamson;

    double bazant_dc_cm2_s = 2e-8;        // t1 Bazant
    double bazant_delta_d_mm = 0.05;      // t2 Bazant
    double wang_fcu_kn_cm2 = 3.0;         // t2 Wang
    std::optional<double> wang_delta_crit_mm{};
    LiuWeyersParams liu_weyers{};         // t2 Liu-Weyers
    double williamson_percent = 12.0;     // t3 Williamson
    double hu_crack_limit_mm = 0.3;       // t3 crack width
    double vu_water_cement = 0.5;         // t3 Vu
    double vu_limit_mm = 0.3;
    double vu_icorr_experiment = 1.0;
    double vu_icorr_real = 1.0;
};

/// Composes the selected stage models into a ServiceLifeBreakdown. All t3
/// models are reported as stage durations so that total = t1 + t2 + t3.
units::ServiceLifeBreakdown total_chloride_life(const ChlorideEnvironment& env,
                                                const RebarGeometry& geom,
                                                const CorrosionKinetics& kin,
                                                const ChlorideLifeChoices& choices);

} // namespace bridgelife::chloride
