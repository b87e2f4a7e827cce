#include "bridgelife/chloride.hpp"

#include <cmath>

#include "bridgelife/specialfn.hpp"

namespace bridgelife::chloride {

using units::kSecondsPerYear;

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_env(const ChlorideEnvironment& env) {
    if (env.surface_chloride_kg_m3 <= 0.0 || env.threshold_chloride_kg_m3 <= 0.0 ||
        env.diffusion_cm2_s <= 0.0 || env.cover_mm <= 0.0) {
        throw DomainError("chloride: environment fields must be positive");
    }
}

} // namespace

double RebarGeometry::perimeter() const {
    return perimeter_mm.value_or(kPi * diameter_mm);
}

VuConstants vu_constants(double limit_crack_width_mm) {
    if (limit_crack_width_mm == 0.3) return {65.0, 0.45};
    if (limit_crack_width_mm == 0.5) return {225.0, 0.29};
    if (limit_crack_width_mm == 1.0) return {700.0, 0.23};
    throw DomainError("vu_constants: limit crack width must be 0.3, 0.5 or 1.0 mm");
}

double chloride_profile(const ChlorideEnvironment& env, double depth_mm, double t_years) {
    check_env(env);
    if (depth_mm < 0.0) throw DomainError("chloride_profile: depth must be non-negative");
    if (t_years <= 0.0) throw DomainError("chloride_profile: time must be positive");
    const double x_cm = depth_mm / 10.0;
    const double t_s = t_years * kSecondsPerYear;
    return env.surface_chloride_kg_m3 *
           (1.0 - specialfn::erf(x_cm / (2.0 * std::sqrt(env.diffusion_cm2_s * t_s))));
}

std::optional<double> t1_fick(const ChlorideEnvironment& env) {
    check_env(env);
    const double arg = 1.0 - env.threshold_chloride_kg_m3 / env.surface_chloride_kg_m3;
    if (arg <= 0.0) return std::nullopt; // threshold at or above surface concentration
    const double inv = specialfn::erf_inv(arg);
    const double c_cm = env.cover_mm / 10.0;
    const double t_s = c_cm * c_cm / (inv * inv * 4.0 * env.diffusion_cm2_s);
    return t_s / kSecondsPerYear;
}

std::optional<double> t1_bazant(const ChlorideEnvironment& env, double dc_cm2_s) {
    check_env(env);
    if (dc_cm2_s <= 0.0) throw DomainError("t1_bazant: Dc must be positive");
    const double ratio = env.threshold_chloride_kg_m3 / env.surface_chloride_kg_m3;
    if (ratio >= 1.0) return std::nullopt;
    const double c_cm = env.cover_mm / 10.0;
    const double denom = 1.0 - std::sqrt(ratio);
    const double t_s = c_cm / (12.0 * dc_cm2_s) * (c_cm / denom) * (c_cm / denom);
    return t_s / kSecondsPerYear;
}

double rust_flux(const CorrosionKinetics& kin) {
    // (W/F) [g/C] * i_corr [uA/cm2 -> A/m2] = g/(m2 s)
    return kin.equivalent_weight / kin.faraday_c * kin.icorr_uA_cm2 * 0.01;
}

std::optional<double> t2_bazant(const RebarGeometry& geom, const CorrosionKinetics& kin,
                                double delta_d_mm) {
    if (delta_d_mm <= 0.0) throw DomainError("t2_bazant: delta D must be positive");
    if (kin.icorr_uA_cm2 == 0.0) return std::nullopt;
    const double q_cor_g_m3 = 3600.0e3;
    const double d_m = geom.diameter_mm * 1e-3;
    const double dd_m = delta_d_mm * 1e-3;
    const double p_m = geom.perimeter() * 1e-3;
    const double t_s = q_cor_g_m3 * d_m * dd_m / (p_m * rust_flux(kin));
    return t_s / kSecondsPerYear;
}

double morinaga_critical_corrosion(double diameter_mm, double cover_mm) {
    if (diameter_mm <= 0.0) throw DomainError("morinaga: diameter must be positive");
    if (cover_mm < 0.0) throw DomainError("morinaga: cover must be non-negative");
    return 0.602 * diameter_mm * std::pow(1.0 + 2.0 * cover_mm / diameter_mm, 0.85);
}

std::optional<double> t2_morinaga(const RebarGeometry& geom, double cover_mm,
                                  const CorrosionKinetics& kin) {
    if (kin.icorr_uA_cm2 == 0.0) return std::nullopt;
    // Q_cr in 1e-4 g/cm2 == g/m2, so Q_cr / j_r is directly in seconds.
    const double q_cr = morinaga_critical_corrosion(geom.diameter_mm, cover_mm);
    return q_cr / rust_flux(kin) / kSecondsPerYear;
}

double wang_thickness_ratio(double diameter_mm, double cover_mm, double fcu_kn_cm2) {
    if (diameter_mm <= 0.0 || cover_mm <= 0.0) {
        throw DomainError("wang_thickness_ratio: D and cover must be positive");
    }
    if (fcu_kn_cm2 <= 0.0) throw DomainError("wang_thickness_ratio: f_cu must be positive");
    return 0.33 * std::pow(diameter_mm / cover_mm, 0.565) * std::pow(fcu_kn_cm2, 1.436);
}

std::optional<double> t2_wang(const RebarGeometry& geom, double cover_mm, double fcu_kn_cm2,
                              const CorrosionKinetics& kin,
                              std::optional<double> delta_crit_mm) {
    const double ratio = wang_thickness_ratio(geom.diameter_mm, cover_mm, fcu_kn_cm2);
    if (kin.icorr_uA_cm2 == 0.0) return std::nullopt;
    // Penetration depth H that must be consumed before the surface cracks.
    double h_mm;
    if (delta_crit_mm) {
        h_mm = *delta_crit_mm / ratio;
    } else {
        // Default: section loss producing a 0.3 mm surface crack,
        // dA = (0.3 - 0.164) / 0.1916 mm of diameter, H = dA / 2.
        h_mm = 0.5 * (0.3 - 0.164) / 0.1916;
    }
    // Penetration rate in m/s: (W/(F rho_st)) * i_corr.
    const double rho_r_m_s = kin.equivalent_weight * 1e-3 / kin.faraday_c *
                             (kin.icorr_uA_cm2 * 0.01) / kin.steel_density_kg_m3;
    return h_mm * 1e-3 / rho_r_m_s / kSecondsPerYear;
}

std::optional<double> t2_liu_weyers(const RebarGeometry& geom, double cover_mm,
                                    const LiuWeyersParams& lw, const CorrosionKinetics& kin) {
    if (lw.tensile_strength_mpa < 0.0 || lw.effective_modulus_mpa <= 0.0) {
        throw DomainError("t2_liu_weyers: need f_t >= 0 and E_ef > 0");
    }
    const double steel_fraction = lw.rust_weight_ratio * lw.rust_density_kg_m3 /
                                  kin.steel_density_kg_m3;
    if (steel_fraction >= 1.0) {
        throw ModelError("t2_liu_weyers: alpha*rho_rust/rho_st >= 1, critical rust mass unbounded");
    }
    if (kin.icorr_uA_cm2 == 0.0) return std::nullopt;

    const double d = geom.diameter_mm;
    const double a = (d + 2.0 * lw.pore_band_mm) / 2.0;
    const double b = cover_mm + a;
    const double ds_mm = cover_mm * (lw.tensile_strength_mpa / lw.effective_modulus_mpa) *
                         ((a * a + b * b) / (b * b - a * a) + lw.poisson_ratio);
    // W_crit in mg per mm of bar (rho in kg/m3 == 1e-3 mg/mm3).
    const double w_crit = lw.rust_density_kg_m3 * 1e-3 * kPi * d * (ds_mm + lw.pore_band_mm) /
                          (1.0 - steel_fraction);
    // k_p in mg2/mm2 per year with D in mm and i_corr in uA/cm2.
    const double k_p = 0.098 * (1.0 / lw.rust_weight_ratio) * kPi * d * kin.icorr_uA_cm2;
    return w_crit * w_crit / (2.0 * k_p);
}

double t3_andrade(double initial_diameter_mm, const CorrosionKinetics& kin, double t_years) {
    if (t_years < 0.0) throw DomainError("t3_andrade: time must be non-negative");
    const double theta = initial_diameter_mm - 0.023 * kin.icorr_uA_cm2 * t_years;
    return theta > 0.0 ? theta : 0.0;
}

WilliamsonResult t3_williamson(double percent_deterioration) {
    if (percent_deterioration < 0.0) {
        throw DomainError("t3_williamson: percent must be non-negative");
    }
    const double t = 8.61 * (std::sqrt(percent_deterioration + 1.38) - 1.45) - 3.34;
    if (t < 0.0) return {0.0, true};
    return {t, false};
}

double rebar_diameter_hu(double diameter_mm, const CorrosionKinetics& kin, double t1_years,
                         double t_years) {
    if (t_years < 0.0) throw DomainError("rebar_diameter_hu: time must be non-negative");
    const double lambda = 0.0116 * kin.pitting_factor * kin.icorr_uA_cm2; // mm/yr
    if (t_years <= t1_years || lambda == 0.0) return diameter_mm;
    const double d = diameter_mm - 2.0 * lambda * (t_years - t1_years);
    return d > 0.0 ? d : 0.0;
}

CrackWidthResult t3_crackwidth_hu(double diameter_mm, const CorrosionKinetics& kin,
                                  double t1_years, double crack_limit_mm) {
    if (crack_limit_mm <= 0.164) {
        // Limit at or below the relation's intercept: reached the moment
        // any section is lost.
        return {t1_years, true};
    }
    const double lambda = 0.0116 * kin.pitting_factor * kin.icorr_uA_cm2;
    const double needed_loss_mm = (crack_limit_mm - 0.164) / 0.1916; // dA_s = D - D(t)
    if (lambda == 0.0 || needed_loss_mm > diameter_mm) return {std::nullopt, false};
    return {t1_years + needed_loss_mm / (2.0 * lambda), false};
}

double vu_loading_correction(double icorr_experiment, double icorr_real) {
    if (icorr_experiment <= 0.0 || icorr_real <= 0.0) {
        throw DomainError("vu_loading_correction: corrosion rates must be positive");
    }
    const double r = icorr_experiment / icorr_real;
    return 0.95 * (std::exp(-0.3 * r) - r / 2500.0) + 0.3;
}

double t3_vu(double t1_years, const CorrosionKinetics& kin, double cover_mm,
             double water_cement_ratio, double limit_crack_width_mm, double icorr_experiment,
             double icorr_real) {
    if (water_cement_ratio <= 0.0) throw DomainError("t3_vu: w/c must be positive");
    const VuConstants k = vu_constants(limit_crack_width_mm);
    const double k_r = vu_loading_correction(icorr_experiment, icorr_real);
    return t1_years + k_r * 0.0114 * kin.icorr_uA_cm2 *
                          (k.a * std::pow(cover_mm / water_cement_ratio, k.b));
}

units::ServiceLifeBreakdown total_chloride_life(const ChlorideEnvironment& env,
                                                const RebarGeometry& geom,
                                                const CorrosionKinetics& kin,
                                                const ChlorideLifeChoices& choices) {
    units::ServiceLifeBreakdown out;

    std::optional<double> t1;
    switch (choices.t1) {
        case T1Model::Fick:
            t1 = t1_fick(env);
            out.model_ids.push_back("t1.fick");
            break;
        case T1Model::Bazant:
            t1 = t1_bazant(env, choices.bazant_dc_cm2_s);
            out.model_ids.push_back("t1.bazant");
            break;
    }
    if (!t1) {
        out.no_initiation = true;
        return out;
    }
    out.t1_years = *t1;

    std::optional<double> t2;
    switch (choices.t2) {
        case T2Model::Bazant:
            t2 = t2_bazant(geom, kin, choices.bazant_delta_d_mm);
            out.model_ids.push_back("t2.bazant");
            break;
        case T2Model::Morinaga:
            t2 = t2_morinaga(geom, env.cover_mm, kin);
            out.model_ids.push_back("t2.morinaga");
            break;
        case T2Model::Wang:
            t2 = t2_wang(geom, env.cover_mm, choices.wang_fcu_kn_cm2, kin,
                         choices.wang_delta_crit_mm);
            out.model_ids.push_back("t2.wang");
            break;
        case T2Model::LiuWeyers:
            t2 = t2_liu_weyers(geom, env.cover_mm, choices.liu_weyers, kin);
            out.model_ids.push_back("t2.liu_weyers");
            break;
    }
    if (!t2) return out; // no-cracking: total stays open
    out.t2_years = *t2;

    // Stage 3 is reported as a duration so total = t1 + t2 + t3.
    double t3 = 0.0;
    switch (choices.t3) {
        case T3Model::Williamson:
            t3 = t3_williamson(choices.williamson_percent).years;
            out.model_ids.push_back("t3.williamson");
            break;
        case T3Model::CrackWidthHu: {
            const CrackWidthResult r =
                t3_crackwidth_hu(geom.diameter_mm, kin, *t1, choices.hu_crack_limit_mm);
            if (!r.years) return out; // unreachable width limit
            t3 = *r.years - *t1;      // width growth is clocked from initiation
            out.model_ids.push_back("t3.crackwidth_hu");
            break;
        }
        case T3Model::Vu:
            t3 = t3_vu(*t1, kin, env.cover_mm, choices.vu_water_cement, choices.vu_limit_mm,
                       choices.vu_icorr_experiment, choices.vu_icorr_real) -
                 *t1;
            out.model_ids.push_back("t3.vu");
            break;
    }
    out.t3_years = t3;
    out.total_years = *t1 + *t2 + t3;
    return out;
}

} // namespace bridgelife::chloride
