// bridgelife: service-life prediction and maintenance-planning CLI.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bridgelife/carbonation.hpp"
#include "bridgelife/chloride.hpp"
#include "bridgelife/csv.hpp"
#include "bridgelife/decksim.hpp"
#include "bridgelife/envmech.hpp"
#include "bridgelife/errors.hpp"
#include "bridgelife/fatigue.hpp"
#include "bridgelife/markov.hpp"
#include "bridgelife/metrics.hpp"
#include "bridgelife/nbi.hpp"
#include "bridgelife/planning.hpp"
#include "bridgelife/stats.hpp"
#include "bridgelife/units.hpp"

using nlohmann::json;
namespace bl = bridgelife;

namespace {

constexpr int kSchemaVersion = 1;

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw bl::SchemaError("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw bl::SchemaError(std::string("invalid JSON in ") + path + ": " + e.what());
    }
    if (!j.is_object() || !j.contains("schema_version")) {
        throw bl::SchemaError(path + ": missing schema_version");
    }
    if (j["schema_version"] != kSchemaVersion) {
        throw bl::SchemaError(path + ": unsupported schema_version");
    }
    return j;
}

void emit(const json& j, const std::string& out_path) {
    json stamped = j;
    stamped["schema_version"] = kSchemaVersion;
    const std::string text = stamped.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw bl::SchemaError("cannot write file: " + out_path);
        out << text;
    }
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw bl::SchemaError("cannot write file: " + path);
    out << text;
}

json breakdown_to_json(const bl::units::ServiceLifeBreakdown& b) {
    json j;
    j["no_initiation"] = b.no_initiation;
    j["model_ids"] = b.model_ids;
    j["t1_years"] = b.t1_years ? json(*b.t1_years) : json(nullptr);
    j["t2_years"] = b.t2_years ? json(*b.t2_years) : json(nullptr);
    j["t3_years"] = b.t3_years ? json(*b.t3_years) : json(nullptr);
    j["total_years"] = b.total_years ? json(*b.total_years) : json(nullptr);
    return j;
}

double need(const json& j, const std::string& key) {
    if (!j.contains(key) || !j[key].is_number()) {
        throw bl::SchemaError("missing numeric field: " + key);
    }
    return j[key].get<double>();
}

double opt(const json& j, const std::string& key, double fallback) {
    if (!j.contains(key)) return fallback;
    if (!j[key].is_number()) throw bl::SchemaError("non-numeric field: " + key);
    return j[key].get<double>();
}

// ------------------------------ predict -----------------------------------

json run_predict_chloride(const json& p) {
    const json& e = p.at("environment");
    bl::chloride::ChlorideEnvironment env;
    env.surface_chloride_kg_m3 = need(e, "surface_chloride_kg_m3");
    env.threshold_chloride_kg_m3 = need(e, "threshold_chloride_kg_m3");
    env.diffusion_cm2_s = need(e, "diffusion_cm2_s");
    env.cover_mm = need(e, "cover_mm");

    bl::chloride::RebarGeometry geom;
    if (p.contains("rebar")) geom.diameter_mm = need(p["rebar"], "diameter_mm");

    bl::chloride::CorrosionKinetics kin;
    if (p.contains("kinetics")) kin.icorr_uA_cm2 = opt(p["kinetics"], "icorr_uA_cm2", 1.0);

    bl::chloride::ChlorideLifeChoices choices;
    if (p.contains("models")) {
        const json& m = p["models"];
        const std::string t1 = m.value("t1", "fick");
        if (t1 == "fick") choices.t1 = bl::chloride::T1Model::Fick;
        else if (t1 == "bazant") choices.t1 = bl::chloride::T1Model::Bazant;
        else throw bl::SchemaError("unknown t1 model: " + t1);
        const std::string t2 = m.value("t2", "liu_weyers");
        if (t2 == "bazant") choices.t2 = bl::chloride::T2Model::Bazant;
        else if (t2 == "morinaga") choices.t2 = bl::chloride::T2Model::Morinaga;
        else if (t2 == "wang") choices.t2 = bl::chloride::T2Model::Wang;
        else if (t2 == "liu_weyers") choices.t2 = bl::chloride::T2Model::LiuWeyers;
        else throw bl::SchemaError("unknown t2 model: " + t2);
        const std::string t3 = m.value("t3", "williamson");
        if (t3 == "williamson") choices.t3 = bl::chloride::T3Model::Williamson;
        else if (t3 == "crackwidth_hu") choices.t3 = bl::chloride::T3Model::CrackWidthHu;
        else if (t3 == "vu") choices.t3 = bl::chloride::T3Model::Vu;
        else throw bl::SchemaError("unknown t3 model: " + t3);
        choices.bazant_dc_cm2_s = opt(m, "bazant_dc_cm2_s", choices.bazant_dc_cm2_s);
        choices.bazant_delta_d_mm = opt(m, "bazant_delta_d_mm", choices.bazant_delta_d_mm);
        choices.wang_fcu_kn_cm2 = opt(m, "wang_fcu_kn_cm2", choices.wang_fcu_kn_cm2);
        choices.williamson_percent = opt(m, "williamson_percent", choices.williamson_percent);
        choices.hu_crack_limit_mm = opt(m, "hu_crack_limit_mm", choices.hu_crack_limit_mm);
        choices.vu_water_cement = opt(m, "vu_water_cement", choices.vu_water_cement);
        choices.vu_limit_mm = opt(m, "vu_limit_mm", choices.vu_limit_mm);
    }
    return breakdown_to_json(bl::chloride::total_chloride_life(env, geom, kin, choices));
}

json run_predict_carbonation(const json& p) {
    const std::string model = p.value("model", "iaea");
    double t_init_years = 0.0;
    if (model == "hookman") {
        t_init_years = bl::carbonation::tc_hookman(need(p, "cover_mm"), need(p, "rate_mm_yr"));
    } else if (model == "coefficient") {
        t_init_years = bl::carbonation::life_coefficient_model(
            need(p, "cover_mm"), need(p, "k_c"), need(p, "k_e"), need(p, "k_a"));
    } else if (model == "iaea") {
        t_init_years = bl::carbonation::time_iaea(need(p, "cover_mm"),
                                                  static_cast<int>(need(p, "grade")));
    } else if (model == "papadakis") {
        const json& c = p.at("concrete");
        bl::carbonation::PapadakisConcrete pc;
        pc.ch_kg_m3 = need(c, "ch_kg_m3");
        pc.csh_kg_m3 = need(c, "csh_kg_m3");
        pc.carbonated_porosity = need(c, "carbonated_porosity");
        pc.entrapped_air = need(c, "entrapped_air");
        pc.aggregate_kg_m3 = need(c, "aggregate_kg_m3");
        pc.aggregate_density_kg_m3 = need(c, "aggregate_density_kg_m3");
        const double t_s = bl::carbonation::papadakis_tcr_s(
            pc, need(p, "co2_percent"), need(p, "rh_percent"), need(p, "cover_mm") * 1e-3);
        t_init_years = bl::carbonation::z_carb(t_s, 0.0);
    } else {
        throw bl::SchemaError("unknown carbonation model: " + model);
    }

    bl::units::ServiceLifeBreakdown b;
    b.t1_years = t_init_years;
    b.t3_years = 0.0;
    b.model_ids = {"carbonation." + model};
    if (p.contains("propagation")) {
        const json& pr = p["propagation"];
        const auto t_pr = bl::carbonation::propagation_morinaga(need(pr, "cover_mm"),
                                                                need(pr, "rh_percent"));
        if (t_pr) {
            b.t2_years = *t_pr;
            b.total_years = t_init_years + *t_pr;
            b.model_ids.push_back("carbonation.propagation_morinaga");
        }
    } else {
        b.t2_years = 0.0;
        b.total_years = t_init_years;
    }
    return breakdown_to_json(b);
}

json run_predict_sulfate(const json& p) {
    bl::envmech::SulfateParams sp;
    sp.elastic_modulus_pa = opt(p, "elastic_modulus_pa", sp.elastic_modulus_pa);
    sp.stress_per_mole_m3_mol = opt(p, "stress_per_mole_m3_mol", sp.stress_per_mole_m3_mol);
    sp.solution_sulfate_mol_m3 = need(p, "solution_sulfate_mol_m3");
    sp.reacted_sulfate_mol_m3 = need(p, "reacted_sulfate_mol_m3");
    sp.diffusion_m2_s = need(p, "diffusion_m2_s");
    sp.roughness = opt(p, "roughness", sp.roughness);
    sp.fracture_energy_j_m2 = opt(p, "fracture_energy_j_m2", sp.fracture_energy_j_m2);
    sp.poisson_ratio = opt(p, "poisson_ratio", sp.poisson_ratio);

    json out;
    out["rate_m_s"] = bl::envmech::sulfate_rate(sp);
    out["rate_mm_yr"] = bl::envmech::sulfate_rate_mm_yr(sp);
    if (p.contains("degraded_thickness_mm")) {
        out["life_years"] = need(p, "degraded_thickness_mm") / bl::envmech::sulfate_rate_mm_yr(sp);
    }
    return out;
}

json run_predict_freezethaw(const json& p) {
    bl::envmech::FreezeThawParams fp;
    fp.equivalence_coefficient = opt(p, "equivalence_coefficient", fp.equivalence_coefficient);
    fp.annual_field_cycles = opt(p, "annual_field_cycles", fp.annual_field_cycles);
    json out;
    if (p.contains("lab_cycles")) {
        fp.lab_cycles = need(p, "lab_cycles");
        out["life_years"] = bl::envmech::freeze_thaw_life(fp);
    }
    if (p.contains("water_content")) {
        fp.water_content = need(p, "water_content");
        fp.unsaturated_pore_content = opt(p, "unsaturated_pore_content", 0.0);
        fp.cycles = need(p, "cycles");
        fp.lab_time_to_limit = need(p, "lab_time_to_limit");
        const auto d = bl::envmech::freeze_thaw_degradation_shuman(fp);
        out["annual_degradation"] = d.rate_per_year;
        out["degradation_clamped"] = d.clamped;
    }
    if (out.empty()) throw bl::SchemaError("freezethaw: no recognized parameter group");
    return out;
}

json run_predict_asr(const json& p) {
    bl::envmech::AsrObservation o;
    o.rating = need(p, "rating");
    o.placed_years = need(p, "placed_years");
    o.cored_years = need(p, "cored_years");
    json out;
    out["rate_per_year"] = bl::envmech::asr_rate(o);
    const auto remaining = bl::envmech::asr_years_remaining(o);
    out["years_remaining"] = remaining ? json(*remaining) : json(nullptr);
    return out;
}

bl::fatigue::StressRangeHistogram histogram_from_json(const json& p) {
    bl::fatigue::StressRangeHistogram hist;
    if (p.contains("histogram")) {
        for (const auto& bin : p["histogram"]) {
            hist.add(bin.at(0).get<double>(), bin.at(1).get<double>());
        }
    } else if (p.contains("history")) {
        const auto h = p["history"].get<std::vector<double>>();
        const std::string method = p.value("counting", "rainflow");
        if (method == "rainflow") hist = bl::fatigue::rainflow_count(h);
        else if (method == "simple_range") hist = bl::fatigue::simple_range_count(h);
        else throw bl::SchemaError("unknown counting method: " + method);
    } else {
        throw bl::SchemaError("fatigue: need 'histogram' or 'history'");
    }
    return hist;
}

json run_predict_fatigue(const json& p) {
    json out;
    const bl::fatigue::StressRangeHistogram hist = histogram_from_json(p);
    json bins = json::array();
    for (const auto& b : hist.bins) bins.push_back({b.range_ksi, b.cycles});
    out["histogram"] = bins;
    out["effective_stress_range_ksi"] = bl::fatigue::effective_stress_range(hist);
    if (p.contains("detail")) {
        bl::fatigue::DetailConstant det;
        det.a_ksi3 = need(p["detail"], "a_ksi3");
        det.cafl_ksi = opt(p["detail"], "cafl_ksi", 0.0);
        det.category = p["detail"].value("category", "");
        out["miner_damage"] = bl::fatigue::miner_damage(hist, det);
    }
    if (p.contains("aashto")) {
        const json& a = p["aashto"];
        out["remaining_life_years"] = bl::fatigue::aashto_remaining_life(
            opt(a, "resistance_factor", 1.0), need(a, "a_ksi3"), need(a, "cycles_per_truck"),
            need(a, "aadt_single_lane"), opt(a, "stress_factor", 1.0),
            need(a, "stress_range_ksi"), opt(a, "current_age_years", 0.0));
    }
    return out;
}

// ------------------------------ markov/plan -------------------------------

bl::markov::TransitionProbabilityMatrix tpm_from_json(const json& j) {
    bl::markov::TransitionProbabilityMatrix tpm;
    tpm.p = j.get<bl::markov::Matrix>();
    tpm.validate();
    return tpm;
}

json run_markov_step(const json& p) {
    const auto tpm = tpm_from_json(p.at("matrix"));
    auto alpha = p.at("state").get<bl::markov::Vector>();
    const unsigned steps = p.value("steps", 1u);
    alpha = bl::markov::ertekin_propagate(alpha, tpm, steps);
    json out;
    out["state"] = alpha;
    return out;
}

json run_markov_calibrate(const json& p) {
    const auto target = p.at("target_ratings").get<bl::markov::Vector>();
    const auto fit = bl::markov::hallberg_calibrate(
        target, p.at("states").get<std::size_t>(), need(p, "initial_rating"),
        need(p, "worst_rating"));
    json out;
    out["matrix"] = fit.tpm.p;
    out["objective"] = fit.objective;
    return out;
}

bl::planning::PlanningInstance planning_from_json(const json& p) {
    bl::planning::PlanningInstance inst;
    inst.groups = p.at("groups").get<std::size_t>();
    inst.states = p.at("states").get<std::size_t>();
    inst.treatments = p.at("treatments").get<std::size_t>();
    inst.periods = p.at("periods").get<std::size_t>();
    inst.group_sizes = p.at("group_sizes").get<std::vector<double>>();
    inst.budgets = p.at("budgets").get<std::vector<double>>();
    inst.costs = p.at("costs").get<std::vector<std::vector<std::vector<double>>>>();
    for (const auto& group : p.at("tpms")) {
        std::vector<bl::markov::TransitionProbabilityMatrix> per_treatment;
        for (const auto& m : group) {
            bl::markov::TransitionProbabilityMatrix tpm;
            tpm.p = m.get<bl::markov::Matrix>();
            per_treatment.push_back(std::move(tpm));
        }
        inst.tpms.push_back(std::move(per_treatment));
    }
    inst.initial = p.at("initial").get<std::vector<std::vector<double>>>();
    if (p.contains("best_state_floor")) inst.best_state_floor = need(p, "best_state_floor");
    inst.validate();
    return inst;
}

json run_plan_lp(const json& p, const std::string& out_path) {
    const auto inst = planning_from_json(p);
    const auto sol = bl::planning::solve_instance(inst);
    json out;
    out["objective"] = sol.objective;
    out["alternate_optima"] = sol.alternate_optima;
    out["x"] = sol.x;
    out["alpha"] = sol.alpha;
    out["z"] = sol.z;
    // Trajectory CSV alongside the JSON report when writing to a file.
    if (!out_path.empty()) {
        std::ostringstream csv;
        csv << "group,state,period,alpha\n";
        for (std::size_t s = 0; s < inst.groups; ++s) {
            for (std::size_t i = 0; i < inst.states; ++i) {
                for (std::size_t t = 0; t < inst.periods; ++t) {
                    csv << s << ',' << i << ',' << t << ','
                        << sol.alpha[inst.alpha_index(s, i, t) - inst.num_x()] << '\n';
                }
            }
        }
        write_text(out_path + ".trajectory.csv", csv.str());
    }
    return out;
}

json run_plan_ip(const json& p) {
    bl::planning::IpInstance inst;
    inst.facilities = p.at("facilities").get<std::size_t>();
    inst.treatments = p.at("treatments").get<std::size_t>();
    inst.periods = p.at("periods").get<std::size_t>();
    inst.initial_condition = p.at("initial_condition").get<std::vector<double>>();
    inst.decay_intercept = need(p, "decay_intercept");
    inst.decay_slope = need(p, "decay_slope");
    inst.effectiveness = p.at("effectiveness").get<std::vector<double>>();
    inst.costs = p.at("costs").get<std::vector<std::vector<std::vector<double>>>>();
    inst.budgets = p.at("budgets").get<std::vector<double>>();
    const auto sol = bl::planning::solve_ip(inst);
    json out;
    out["feasible"] = sol.feasible;
    if (sol.feasible) {
        out["objective"] = sol.objective;
        out["u"] = sol.u;
    }
    return out;
}

json run_plan_replace(const json& p) {
    const auto coeffs = p.at("operating_cost_coeffs").get<std::vector<double>>();
    auto cost = [coeffs](double t) {
        double y = 0.0;
        for (std::size_t k = coeffs.size(); k-- > 0;) y = y * t + coeffs[k];
        return y;
    };
    const auto r = bl::planning::optimal_replacement_interval(
        cost, need(p, "replacement_cost"), opt(p, "t_lo", 1e-3), opt(p, "t_hi", 200.0));
    json out;
    out["interval_years"] = r.interval;
    out["mean_cost"] = r.mean_cost;
    return out;
}

// ------------------------------ simulate/data -----------------------------

bl::decksim::TruncatedNormal tn_from_json(const json& j) {
    bl::decksim::TruncatedNormal tn;
    tn.mean = need(j, "mean");
    tn.sd = opt(j, "sd", 0.0);
    tn.lo = opt(j, "lo", 0.0);
    tn.hi = opt(j, "hi", 1e300);
    return tn;
}

json run_simulate_deck(const json& p, std::uint64_t seed, const std::string& out_path,
                       const std::string& format) {
    bl::decksim::DeckSimConfig cfg;
    cfg.cells = p.value("cells", std::size_t{1000});
    cfg.seed = p.contains("seed") ? p["seed"].get<std::uint64_t>() : seed;
    cfg.surface_chloride = tn_from_json(p.at("surface_chloride"));
    cfg.threshold_chloride = tn_from_json(p.at("threshold_chloride"));
    cfg.diffusion = tn_from_json(p.at("diffusion"));
    cfg.cover = tn_from_json(p.at("cover"));
    cfg.icorr = tn_from_json(p.at("icorr"));
    cfg.rebar_diameter_mm = opt(p, "rebar_diameter_mm", cfg.rebar_diameter_mm);
    cfg.time_step_years = opt(p, "time_step_years", cfg.time_step_years);
    cfg.horizon_years = opt(p, "horizon_years", cfg.horizon_years);
    cfg.damage_target = opt(p, "damage_target", cfg.damage_target);
    const std::string t2 = p.value("t2_model", "liu_weyers");
    if (t2 == "bazant") cfg.t2_model = bl::chloride::T2Model::Bazant;
    else if (t2 == "morinaga") cfg.t2_model = bl::chloride::T2Model::Morinaga;
    else if (t2 == "wang") cfg.t2_model = bl::chloride::T2Model::Wang;
    else if (t2 == "liu_weyers") cfg.t2_model = bl::chloride::T2Model::LiuWeyers;
    else throw bl::SchemaError("unknown t2 model: " + t2);

    const auto series = bl::decksim::simulate_deck(cfg);
    const auto reach = bl::decksim::time_to_fraction(series, cfg.damage_target);

    if (format == "csv") {
        std::ostringstream csv;
        csv << "t_years,damaged_fraction\n";
        for (std::size_t k = 0; k < series.times.size(); ++k) {
            csv << series.times[k] << ',' << series.fractions[k] << '\n';
        }
        if (out_path.empty()) std::cout << csv.str();
        else write_text(out_path, csv.str());
        return json(); // already emitted
    }
    json out;
    out["times"] = series.times;
    out["fractions"] = series.fractions;
    out["time_to_target_years"] = reach ? json(*reach) : json(nullptr);
    return out;
}

json run_ingest(const std::string& in_path, const std::string& out_path) {
    const auto table = bl::csv::read_file(in_path);
    const auto inv = bl::nbi::ingest_nbi(table);

    if (!out_path.empty()) {
        std::ostringstream norm;
        norm << "structure_id,district,county,year_built,age,aadt,design_load,span_type,"
                "skew_degrees,structure_length_ft,deck_width_ft,structural_eval,inspection_year\n";
        for (const auto& r : inv.records) {
            norm << bl::csv::escape(r.structure_id) << ',' << bl::csv::escape(r.district) << ','
                 << bl::csv::escape(r.county) << ',' << r.year_built << ','
                 << r.age_at_inspection() << ',' << r.aadt << ','
                 << bl::csv::escape(r.design_load) << ',' << bl::csv::escape(r.span_type) << ','
                 << r.skew_degrees << ',' << r.structure_length_ft << ',' << r.deck_width_ft
                 << ',' << r.structural_eval << ',' << r.inspection_year << '\n';
        }
        write_text(out_path, norm.str());
        std::ostringstream rej;
        rej << "row,reason\n";
        for (const auto& r : inv.rejects) {
            rej << r.row_number << ',' << bl::csv::escape(r.reason) << '\n';
        }
        write_text(out_path + ".rejects.csv", rej.str());
    }
    json out;
    out["rows_in"] = inv.rows_in;
    out["accepted"] = inv.records.size();
    out["rejected"] = inv.rejects.size();
    json rejects = json::array();
    for (const auto& r : inv.rejects) {
        rejects.push_back({{"row", r.row_number}, {"reason", r.reason}});
    }
    out["rejects"] = rejects;
    return out;
}

json run_metrics(const std::string& pred_path) {
    const auto table = bl::csv::read_file(pred_path);
    const std::size_t ci_actual = table.column("actual");
    const std::size_t ci_pred = table.column("predicted");
    std::vector<double> y, y_hat;
    bool binary = true;
    for (const auto& row : table.rows) {
        if (row.size() <= std::max(ci_actual, ci_pred)) {
            throw bl::SchemaError("metrics: short row");
        }
        const double a = std::stod(row[ci_actual]);
        const double p = std::stod(row[ci_pred]);
        y.push_back(a);
        y_hat.push_back(p);
        if ((a != 0.0 && a != 1.0) || (p != 0.0 && p != 1.0)) binary = false;
    }
    if (y.empty()) throw bl::SchemaError("metrics: no data rows");

    json out;
    const auto rsq = bl::metrics::r2(y, y_hat);
    out["r2"] = rsq ? json(*rsq) : json(nullptr);
    if (binary) {
        bl::metrics::ConfusionMatrix cm;
        for (std::size_t i = 0; i < y.size(); ++i) {
            if (y[i] == 1.0 && y_hat[i] == 1.0) ++cm.tp;
            else if (y[i] == 0.0 && y_hat[i] == 1.0) ++cm.fp;
            else if (y[i] == 1.0 && y_hat[i] == 0.0) ++cm.fn;
            else ++cm.tn;
        }
        const auto m = bl::metrics::evaluate(cm);
        out["precision"] = m.precision ? json(*m.precision) : json(nullptr);
        out["recall"] = m.recall ? json(*m.recall) : json(nullptr);
        out["accuracy"] = m.accuracy ? json(*m.accuracy) : json(nullptr);
        out["f1"] = m.f1 ? json(*m.f1) : json(nullptr);
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"bridge service-life prediction and maintenance planning"};
    app.require_subcommand(1);

    std::string params_path, out_path, format = "json", in_path, pred_path;
    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "random seed for stochastic subcommands");
    app.add_option("--out", out_path, "output file (default: stdout)");
    app.add_option("--format", format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    auto* predict = app.add_subcommand("predict", "mechanistic service-life models");
    predict->require_subcommand(1);
    std::vector<std::string> mechanisms = {"chloride", "carbonation", "sulfate",
                                           "freezethaw", "asr", "fatigue"};
    for (const auto& mech : mechanisms) {
        auto* sub = predict->add_subcommand(mech);
        sub->add_option("-p,--params", params_path, "parameter JSON file")->required();
    }

    auto* empirical = app.add_subcommand("empirical", "published rating models");
    auto* emp_eval = empirical->add_subcommand("eval", "evaluate a catalog model");
    auto* emp_life = empirical->add_subcommand("life", "first crossing of a threshold");
    empirical->require_subcommand(1);
    std::string model_id;
    double age = 0.0, adtt = -1.0, threshold = 3.0, horizon = 120.0;
    for (auto* sub : {emp_eval, emp_life}) {
        sub->add_option("--model", model_id, "catalog model id")->required();
        sub->add_option("--adtt", adtt, "average daily truck traffic (hatami.adtt)");
    }
    emp_eval->add_option("--age", age, "bridge age, years")->required();
    emp_life->add_option("--threshold", threshold, "end-of-life rating");
    emp_life->add_option("--horizon", horizon, "search horizon, years");

    auto* markov_cmd = app.add_subcommand("markov", "condition-state chains");
    markov_cmd->require_subcommand(1);
    for (const char* name : {"step", "calibrate"}) {
        markov_cmd->add_subcommand(name)
            ->add_option("-p,--params", params_path, "parameter JSON file")
            ->required();
    }

    auto* plan = app.add_subcommand("plan", "network maintenance optimization");
    plan->require_subcommand(1);
    for (const char* name : {"lp", "ip", "replace"}) {
        plan->add_subcommand(name)
            ->add_option("-i,--instance", params_path, "instance JSON file")
            ->required();
    }

    auto* simulate = app.add_subcommand("simulate", "Monte Carlo simulation");
    simulate->require_subcommand(1);
    simulate->add_subcommand("deck")
        ->add_option("-c,--config", params_path, "config JSON file")
        ->required();

    auto* ingest = app.add_subcommand("ingest", "inventory CSV ingestion");
    ingest->add_option("--in", in_path, "inventory CSV")->required();

    auto* metrics_cmd = app.add_subcommand("metrics", "prediction quality metrics");
    metrics_cmd->add_option("--pred", pred_path, "CSV with 'actual' and 'predicted' columns")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        json out;
        if (predict->parsed()) {
            const json p = load_json(params_path);
            const std::string mech = predict->get_subcommands().front()->get_name();
            if (mech == "chloride") out = run_predict_chloride(p);
            else if (mech == "carbonation") out = run_predict_carbonation(p);
            else if (mech == "sulfate") out = run_predict_sulfate(p);
            else if (mech == "freezethaw") out = run_predict_freezethaw(p);
            else if (mech == "asr") out = run_predict_asr(p);
            else out = run_predict_fatigue(p);
        } else if (empirical->parsed()) {
            if (model_id == "hatami.adtt") {
                if (adtt < 0.0) throw bl::DomainError("hatami.adtt requires --adtt");
                if (emp_eval->parsed()) {
                    out["rating"] = bl::stats::eval_hatami(adtt, age);
                } else {
                    throw bl::DomainError("first-crossing life is only defined for catalog cubics");
                }
            } else {
                const auto& model = bl::stats::catalog_model(model_id);
                if (emp_eval->parsed()) {
                    out["rating"] = bl::stats::eval_polynomial(model, age);
                } else {
                    const auto life =
                        bl::stats::service_life_first_crossing(model, threshold, horizon);
                    out["service_life_years"] = life ? json(*life) : json(nullptr);
                }
            }
        } else if (markov_cmd->parsed()) {
            const json p = load_json(params_path);
            if (markov_cmd->get_subcommands().front()->get_name() == "step") {
                out = run_markov_step(p);
            } else {
                out = run_markov_calibrate(p);
            }
        } else if (plan->parsed()) {
            const json p = load_json(params_path);
            const std::string which = plan->get_subcommands().front()->get_name();
            if (which == "lp") out = run_plan_lp(p, out_path);
            else if (which == "ip") out = run_plan_ip(p);
            else out = run_plan_replace(p);
        } else if (simulate->parsed()) {
            out = run_simulate_deck(load_json(params_path), seed, out_path, format);
            if (format == "csv") return 0;
        } else if (ingest->parsed()) {
            out = run_ingest(in_path, out_path.empty() ? "" : out_path);
            emit(out, "");
            return 0;
        } else if (metrics_cmd->parsed()) {
            out = run_metrics(pred_path);
        }
        emit(out, out_path);
        return 0;
    } catch (const bl::SchemaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
