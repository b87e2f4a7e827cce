// Acceptance gate: one pass/fail line per criterion, nonzero exit on failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bridgelife/carbonation.hpp"
#include "bridgelife/chloride.hpp"
#include "bridgelife/decksim.hpp"
#include "bridgelife/envmech.hpp"
#include "bridgelife/fatigue.hpp"
#include "bridgelife/field.hpp"
#include "bridgelife/markov.hpp"
#include "bridgelife/planning.hpp"
#include "bridgelife/specialfn.hpp"
#include "bridgelife/stats.hpp"

namespace bl = bridgelife;
using nlohmann::json;
using Clock = std::chrono::steady_clock;

namespace {

double elapsed_s(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// --------------------------------------------------------------------------

bool criterion_1() { // propagation-time gap, timed
    const auto start = Clock::now();
    const double gap = bl::chloride::t3_williamson(12.0).years -
                       bl::chloride::t3_williamson(2.0).years;
    const double secs = elapsed_s(start);
    return gap >= 15.0 && gap <= 17.0 && secs < 1e-3;
}

long double erf_series(long double x) {
    // All-positive-term series: erf(x) = 2/sqrt(pi) e^{-x^2} sum 2^n x^{2n+1} / (1*3*...*(2n+1))
    long double term = x;
    long double sum = x;
    for (int n = 1; n < 500; ++n) {
        term *= 2.0L * x * x / static_cast<long double>(2 * n + 1);
        sum += term;
        if (term < 1e-25L * sum) break;
    }
    return 2.0L / std::sqrt(3.14159265358979323846264338327950288L) * std::exp(-x * x) * sum;
}

bool criterion_2() { // initiation-time round trip + erf oracle, timed
    const auto start = Clock::now();
    for (int i = 0; i <= 400; ++i) {
        const double x = 4.0 * i / 400.0;
        if (std::fabs(bl::specialfn::erf(x) - static_cast<double>(erf_series(x))) > 1e-10) {
            return false;
        }
    }
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int k = 0; k < 1000; ++k) {
        bl::chloride::ChlorideEnvironment env;
        env.surface_chloride_kg_m3 = 1.0 + 9.0 * u(rng);
        env.threshold_chloride_kg_m3 = env.surface_chloride_kg_m3 * (0.05 + 0.9 * u(rng));
        env.diffusion_cm2_s = 1e-9 * std::pow(10.0, 2.0 * u(rng));
        env.cover_mm = 20.0 + 80.0 * u(rng);
        const auto t1 = bl::chloride::t1_fick(env);
        if (!t1) return false;
        const double c = bl::chloride::chloride_profile(env, env.cover_mm, *t1);
        if (std::fabs(c - env.threshold_chloride_kg_m3) >
            1e-6 * env.threshold_chloride_kg_m3) {
            return false;
        }
    }
    return elapsed_s(start) < 1.0;
}

bool criterion_3() { // lab-to-field freeze-thaw life, exact
    for (int n = 0; n <= 1000; ++n) {
        bl::envmech::FreezeThawParams p;
        p.lab_cycles = static_cast<double>(n);
        if (bl::envmech::freeze_thaw_life(p) != 6.5 * static_cast<double>(n) / 200.0) {
            return false;
        }
    }
    return true;
}

bool criterion_4() { // catalog intercepts, exact
    if (bl::stats::eval_polynomial(bl::stats::catalog_model("jiang.concrete.superstructure"),
                                   0.0) != 9.0) {
        return false;
    }
    if (bl::stats::eval_hatami(50.0, 0.0) != 10.189) return false;
    if (bl::stats::eval_hatami(300.0, 0.0) != 10.754) return false;
    if (bl::stats::eval_hatami(600.0, 0.0) != 10.372) return false;
    for (const char* id : {"agrawal.curb.granite", "agrawal.curb.steel_plate",
                           "agrawal.curb.timber", "agrawal.curb.concrete"}) {
        if (bl::stats::eval_polynomial(bl::stats::catalog_model(id), 0.0) != 7.0) return false;
    }
    return true;
}

bool criterion_5() { // crack-width constants + migration-coefficient bands
    const auto c03 = bl::chloride::vu_constants(0.3);
    const auto c05 = bl::chloride::vu_constants(0.5);
    const auto c10 = bl::chloride::vu_constants(1.0);
    if (c03.a != 65.0 || c03.b != 0.45) return false;
    if (c05.a != 225.0 || c05.b != 0.29) return false;
    if (c10.a != 700.0 || c10.b != 0.23) return false;

    using PC = bl::field::PenetrationClass;
    const std::pair<double, PC> probes[] = {
        {16.0, PC::Low},          {15.0, PC::Low},
        {14.999, PC::Moderate},   {10.0, PC::Moderate},
        {9.999, PC::High},        {5.0, PC::High},
        {4.999, PC::VeryHigh},    {2.5, PC::VeryHigh},
        {2.499, PC::ExtremelyHigh}, {0.0, PC::ExtremelyHigh},
    };
    for (const auto& [d, expect] : probes) {
        if (bl::field::classify_penetration(d) != expect) return false;
    }
    return true;
}

// --------------------------------------------------------------------------

bl::planning::PlanningInstance random_planning_instance(std::mt19937& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    auto dim = [&](std::size_t lo, std::size_t hi) {
        return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
    };
    bl::planning::PlanningInstance inst;
    inst.groups = dim(1, 3);
    inst.states = dim(2, 4);
    inst.treatments = dim(1, 3);
    inst.periods = dim(2, 5);
    for (std::size_t s = 0; s < inst.groups; ++s) inst.group_sizes.push_back(0.5 + 1.5 * u(rng));
    for (std::size_t t = 0; t < inst.periods; ++t) inst.budgets.push_back(2.0 * u(rng));

    inst.costs.assign(inst.groups, {});
    inst.tpms.assign(inst.groups, {});
    for (std::size_t s = 0; s < inst.groups; ++s) {
        for (std::size_t m = 0; m < inst.treatments; ++m) {
            std::vector<double> per_t(inst.periods);
            for (double& c : per_t) c = (m == 0) ? 0.0 : 0.1 + 0.9 * u(rng);
            inst.costs[s].push_back(std::move(per_t));

            bl::markov::Matrix p(inst.states, bl::markov::Vector(inst.states, 0.0));
            if (m == 0) {
                // Deterioration: upper-triangular, absorbing worst state.
                for (std::size_t i = 0; i + 1 < inst.states; ++i) {
                    double sum = 0.0;
                    for (std::size_t j = i; j < inst.states; ++j) sum += (p[i][j] = u(rng) + 1e-3);
                    for (std::size_t j = i; j < inst.states; ++j) p[i][j] /= sum;
                }
                p[inst.states - 1][inst.states - 1] = 1.0;
            } else {
                // Treatment: may improve the state, only row-stochastic.
                for (auto& row : p) {
                    double sum = 0.0;
                    for (double& v : row) sum += (v = u(rng) + 1e-3);
                    for (double& v : row) v /= sum;
                }
            }
            inst.tpms[s].push_back({std::move(p)});
        }
        std::vector<double> init(inst.states);
        double sum = 0.0;
        for (double& v : init) sum += (v = u(rng) + 1e-3);
        for (double& v : init) v /= sum;
        inst.initial.push_back(std::move(init));
    }
    return inst;
}

// Best objective over `policies` random feasible policies, built by scaling a
// random treatment mix toward the zero-cost do-nothing treatment whenever the
// budget binds.
double random_policy_bound(const bl::planning::PlanningInstance& inst, std::mt19937& rng,
                           int policies) {
    const std::size_t S = inst.groups, I = inst.states, M = inst.treatments, T = inst.periods;
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> alpha(S * I), next(S * I), w(S * M);
    double best = -1e300;
    for (int p = 0; p < policies; ++p) {
        for (std::size_t s = 0; s < S; ++s) {
            for (std::size_t i = 0; i < I; ++i) alpha[s * I + i] = inst.initial[s][i];
        }
        double obj = 0.0;
        for (std::size_t s = 0; s < S; ++s) obj += alpha[s * I];
        for (std::size_t t = 0; t + 1 < T; ++t) {
            double spend = 0.0;
            for (std::size_t s = 0; s < S; ++s) {
                double sum = 0.0;
                for (std::size_t m = 0; m < M; ++m) sum += (w[s * M + m] = u(rng) + 1e-9);
                for (std::size_t m = 0; m < M; ++m) {
                    w[s * M + m] /= sum;
                    spend += inst.group_sizes[s] * inst.costs[s][m][t] * w[s * M + m];
                }
            }
            if (spend > inst.budgets[t]) {
                const double lam = inst.budgets[t] / spend;
                for (std::size_t s = 0; s < S; ++s) {
                    for (std::size_t m = 0; m < M; ++m) w[s * M + m] *= lam;
                    w[s * M] += 1.0 - lam; // rest goes to the free treatment
                }
            }
            for (std::size_t s = 0; s < S; ++s) {
                for (std::size_t j = 0; j < I; ++j) next[s * I + j] = 0.0;
                for (std::size_t m = 0; m < M; ++m) {
                    const double wm = w[s * M + m];
                    if (wm == 0.0) continue;
                    const auto& pm = inst.tpms[s][m].p;
                    for (std::size_t i = 0; i < I; ++i) {
                        const double mass = alpha[s * I + i] * wm;
                        for (std::size_t j = 0; j < I; ++j) next[s * I + j] += mass * pm[i][j];
                    }
                }
            }
            std::swap(alpha, next);
            for (std::size_t s = 0; s < S; ++s) obj += alpha[s * I];
        }
        best = std::max(best, obj);
    }
    return best;
}

bool criterion_6() { // LP dominates random feasible policies, timed
    const auto start = Clock::now();
    for (int k = 0; k < 100; ++k) {
        std::mt19937 rng(1000u + static_cast<unsigned>(k));
        const auto inst = random_planning_instance(rng);
        // solve_instance verifies all constraint residuals at 1e-8 internally.
        const auto sol = bl::planning::solve_instance(inst);
        const double bound = random_policy_bound(inst, rng, 100000);
        if (sol.objective < bound - 1e-9) return false;
    }
    return elapsed_s(start) < 30.0;
}

// --------------------------------------------------------------------------

double ip_exhaustive(const bl::planning::IpInstance& inst) {
    const std::size_t n = inst.num_u();
    double best = -1e300;
    for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
        std::vector<int> u(n);
        for (std::size_t j = 0; j < n; ++j) u[j] = static_cast<int>((mask >> j) & 1UL);
        bool ok = true;
        for (std::size_t t = 0; t < inst.periods && ok; ++t) {
            double spend = 0.0;
            for (std::size_t a = 0; a < inst.facilities && ok; ++a) {
                int applied = 0;
                for (std::size_t m = 0; m < inst.treatments; ++m) {
                    if (u[inst.u_index(a, m, t)]) {
                        ++applied;
                        spend += inst.costs[a][m][t];
                    }
                }
                if (applied > 1) ok = false;
            }
            if (spend > inst.budgets[t] + 1e-12) ok = false;
        }
        if (!ok) continue;
        double objective = 0.0;
        for (std::size_t a = 0; a < inst.facilities && ok; ++a) {
            double s = inst.initial_condition[a];
            for (std::size_t t = 1; t <= inst.periods; ++t) {
                s = inst.decay_intercept + inst.decay_slope * s;
                for (std::size_t m = 0; m < inst.treatments; ++m) {
                    if (u[inst.u_index(a, m, t - 1)]) s += inst.effectiveness[m];
                }
                if (s < 1e-6 - 1e-9) {
                    ok = false;
                    break;
                }
                objective += s;
            }
        }
        if (ok) best = std::max(best, objective);
    }
    return best;
}

bool criterion_7() { // scheduling IP vs exhaustive enumeration, timed
    const auto start = Clock::now();
    for (int k = 0; k < 50; ++k) {
        std::mt19937 rng(5000u + static_cast<unsigned>(k));
        std::uniform_real_distribution<double> u(0.0, 1.0);
        bl::planning::IpInstance inst;
        do {
            inst.facilities = 1 + rng() % 2;
            inst.treatments = 1 + rng() % 2;
            inst.periods = 2 + rng() % 3;
        } while (inst.facilities * inst.treatments * inst.periods > 16);
        inst.decay_intercept = -0.5 - u(rng);
        inst.decay_slope = 0.8 + 0.2 * u(rng);
        for (std::size_t a = 0; a < inst.facilities; ++a) {
            inst.initial_condition.push_back(5.0 + 5.0 * u(rng));
        }
        for (std::size_t m = 0; m < inst.treatments; ++m) {
            inst.effectiveness.push_back(2.0 * u(rng));
        }
        inst.costs.assign(inst.facilities,
                          std::vector<std::vector<double>>(
                              inst.treatments, std::vector<double>(inst.periods, 0.0)));
        for (auto& per_a : inst.costs) {
            for (auto& per_m : per_a) {
                for (double& c : per_m) c = u(rng);
            }
        }
        for (std::size_t t = 0; t < inst.periods; ++t) inst.budgets.push_back(1.5 * u(rng));

        const auto sol = bl::planning::solve_ip(inst);
        const double brute = ip_exhaustive(inst);
        const bool brute_feasible = brute > -1e299;
        if (sol.feasible != brute_feasible) return false;
        if (brute_feasible && std::fabs(sol.objective - brute) > 1e-6) return false;
    }
    return elapsed_s(start) < 10.0;
}

bool criterion_8() { // optimal replacement interval against the calculus oracle
    const auto r = bl::planning::optimal_replacement_interval(
        [](double t) { return 2.0 * t; }, 100.0, 1.0, 50.0);
    return std::fabs(r.interval - 10.0) <= 1e-4 && std::fabs(r.mean_cost - 20.0) <= 1e-6;
}

bool criterion_9() { // redistribution validity + simplex preservation
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int k = 0; k < 1000; ++k) {
        bl::markov::Matrix p(5, bl::markov::Vector(5));
        for (auto& row : p) {
            double sum = 0.0;
            for (double& v : row) sum += (v = u(rng));
            for (double& v : row) v /= sum;
        }
        const auto d = bl::markov::zhang_matrix(p);
        for (std::size_t i = 0; i < 5; ++i) {
            double sum = 0.0;
            for (std::size_t j = 0; j < 5; ++j) {
                if (j < i && d.p[i][j] != 0.0) return false;
                sum += d.p[i][j];
            }
            if (std::fabs(sum - 1.0) > 1e-9) return false;
        }
        if (k < 20) { // 100-step trajectories on a sample of the matrices
            bl::markov::Vector alpha(5);
            double sum = 0.0;
            for (double& v : alpha) sum += (v = u(rng));
            for (double& v : alpha) v /= sum;
            for (int step = 0; step < 100; ++step) {
                alpha = bl::markov::markov_step(alpha, d);
                double total = 0.0;
                for (double v : alpha) total += v;
                if (std::fabs(total - 1.0) > 1e-9) return false;
            }
        }
    }
    return true;
}

bool criterion_10() { // censored Weibull fit vs grid oracle
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double censor = 10.0 * std::sqrt(-std::log(0.2)); // ~20% censored
    std::vector<bl::stats::CensoredObservation> sample;
    for (int i = 0; i < 1000; ++i) {
        const double t = 10.0 * std::sqrt(-std::log(1.0 - u(rng)));
        if (t < censor) sample.push_back({t, true});
        else sample.push_back({censor, false});
    }
    const auto fit = bl::stats::fit_weibull_censored(sample);
    if (std::fabs(fit.shape - 2.0) > 0.2 || std::fabs(fit.scale - 10.0) > 1.0) return false;

    auto loglik = [&](double beta) {
        double r = 0.0, sum_tb = 0.0;
        for (const auto& o : sample) {
            sum_tb += std::pow(o.time, beta);
            if (o.failed) r += 1.0;
        }
        const double eta = std::pow(sum_tb / r, 1.0 / beta);
        double ll = 0.0;
        for (const auto& o : sample) {
            const double z = std::pow(o.time / eta, beta);
            if (o.failed) ll += std::log(beta / eta) + (beta - 1.0) * std::log(o.time / eta) - z;
            else ll -= z;
        }
        return ll;
    };
    double best_beta = 0.0, best_ll = -1e300;
    for (double beta = 0.5; beta <= 5.0; beta += 0.01) {
        const double ll = loglik(beta);
        if (ll > best_ll) {
            best_ll = ll;
            best_beta = beta;
        }
    }
    return std::fabs(fit.shape - best_beta) <= 0.01;
}

bool criterion_11() { // effective-range identity, Miner unity, rainflow fixtures
    std::mt19937 rng(4444);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int k = 0; k < 500; ++k) {
        bl::fatigue::StressRangeHistogram hist;
        const int bins = 1 + static_cast<int>(rng() % 12);
        for (int b = 0; b < bins; ++b) hist.add(0.5 + 20.0 * u(rng), 0.5 + 1e4 * u(rng));
        double lhs = 0.0;
        for (const auto& bin : hist.bins) {
            lhs += bin.cycles * bin.range_ksi * bin.range_ksi * bin.range_ksi;
        }
        const double sre = bl::fatigue::effective_stress_range(hist);
        const double rhs = hist.total_cycles() * sre * sre * sre;
        if (std::fabs(lhs - rhs) > 1e-9 * std::fabs(lhs)) return false;
    }
    {
        bl::fatigue::StressRangeHistogram hist;
        hist.add(10.0, bl::fatigue::aashto_sn(1e10, 10.0));
        if (bl::fatigue::miner_damage(hist, {1e10, 0.0, ""}) != 1.0) return false;
    }
    const auto fix = bl::fatigue::rainflow_count({-2, 1, -3, 5, -1, 3, -4, 4, -2});
    const std::vector<std::pair<double, double>> expect = {
        {3.0, 0.5}, {4.0, 1.5}, {6.0, 0.5}, {8.0, 1.0}, {9.0, 0.5}};
    if (fix.bins.size() != expect.size()) return false;
    for (std::size_t i = 0; i < expect.size(); ++i) {
        if (fix.bins[i].range_ksi != expect[i].first || fix.bins[i].cycles != expect[i].second) {
            return false;
        }
    }
    const auto closed = bl::fatigue::rainflow_count({0.0, 2.0, 0.0});
    return closed.bins.size() == 1 && closed.bins[0].range_ksi == 2.0 &&
           closed.bins[0].cycles == 1.0;
}

bool criterion_12() { // deck Monte Carlo: zero-variance limit + determinism
    bl::decksim::DeckSimConfig cfg;
    cfg.cells = 500;
    cfg.seed = 31;
    cfg.surface_chloride = {3.5, 0.0, 0.0, 1e300};
    cfg.threshold_chloride = {1.2, 0.0, 0.0, 1e300};
    cfg.diffusion = {2e-8, 0.0, 0.0, 1e300};
    cfg.cover = {50.0, 0.0, 0.0, 1e300};
    cfg.icorr = {2.0, 0.0, 0.0, 1e300};

    bl::chloride::ChlorideEnvironment env{3.5, 1.2, 2e-8, 50.0};
    bl::chloride::CorrosionKinetics kin;
    kin.icorr_uA_cm2 = 2.0;
    const double expected =
        *bl::chloride::t1_fick(env) +
        *bl::chloride::t2_liu_weyers({16.0, std::nullopt}, 50.0, bl::chloride::LiuWeyersParams{},
                                     kin);
    const auto series = bl::decksim::simulate_deck(cfg);
    const auto reach = bl::decksim::time_to_fraction(series, cfg.damage_target);
    if (!reach || std::fabs(*reach - expected) > 0.25) return false;

    cfg.cover = {50.0, 8.0, 0.0, 1e300}; // stochastic rerun must be bit-identical
    const auto a = bl::decksim::simulate_deck(cfg);
    const auto b = bl::decksim::simulate_deck(cfg);
    return a.times == b.times && a.fractions == b.fractions;
}

bool criterion_13() { // carbonation depth/time inverse + permeability table
    if (bl::carbonation::time_iaea(20.0, 20) != 4.0) return false;
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int k = 0; k < 1000; ++k) {
        bl::carbonation::PapadakisConcrete p;
        p.ch_kg_m3 = 20.0 + 150.0 * u(rng);
        p.csh_kg_m3 = 50.0 + 300.0 * u(rng);
        p.entrapped_air = 0.01 + 0.05 * u(rng);
        p.carbonated_porosity = p.entrapped_air + 0.05 + 0.3 * u(rng);
        p.aggregate_kg_m3 = 0.4 + 0.3 * u(rng);
        p.aggregate_density_kg_m3 = 1.0;
        const double co2 = 0.03 + 0.1 * u(rng);
        const double rh = 40.0 + 50.0 * u(rng);
        const double t = 1e6 + 1e9 * u(rng);
        const double depth = bl::carbonation::papadakis_depth_m(p, co2, rh, t);
        const double back = bl::carbonation::papadakis_tcr_s(p, co2, rh, depth);
        if (std::fabs(back - t) > 1e-12 * t) return false;
    }
    return true;
}

// --------------------------------------------------------------------------

int run_cli(const std::string& args, const std::string& stdout_path) {
    const std::string cmd =
        std::string(BRIDGELIFE_CLI_PATH) + " " + args + " > " + stdout_path + " 2>/dev/null";
    return std::system(cmd.c_str());
}

bool criterion_14() { // CLI end-to-end: ingest counts + plan lp re-verification
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "bridgelife-acceptance";
    fs::create_directories(dir);

    // 50-row inventory, rows 10,20,30,40,50 malformed.
    const fs::path csv_path = dir / "inventory.csv";
    {
        std::ofstream out(csv_path);
        out << "8 Structure Number,2 District,3 County,27 Year Built,29 AADT,31 Design Load,"
               "34 Skew,43 Span Type,49 Str Lgth,52 Deck Width,67 Str Eval,Inspection Year\n";
        for (int r = 1; r <= 50; ++r) {
            std::string eval = std::to_string(4 + r % 5);
            std::string year = std::to_string(1950 + r);
            std::string aadt = std::to_string(1000 + 13 * r);
            if (r == 10) eval = "12";      // rating out of range
            if (r == 20) aadt = "lots";    // non-numeric
            if (r == 30) year = "2200";    // built after inspection
            if (r == 40) eval = "";        // empty field
            if (r == 50) aadt = "-5";      // negative traffic
            out << "S" << r << ",4,Adams," << year << "," << aadt
                << ",HS20,10,Steel girder,200,40," << eval << ",2020\n";
        }
    }
    const fs::path report_path = dir / "ingest.json";
    if (run_cli("ingest --in " + csv_path.string(), report_path.string()) != 0) return false;
    json report;
    {
        std::ifstream in(report_path);
        in >> report;
    }
    if (report.at("rows_in") != 50 || report.at("accepted") != 45 || report.at("rejected") != 5) {
        return false;
    }

    // Maintenance LP through the CLI, re-checked with the library verifier.
    bl::planning::PlanningInstance inst;
    inst.groups = 2;
    inst.states = 3;
    inst.treatments = 2;
    inst.periods = 4;
    inst.group_sizes = {1.0, 2.0};
    inst.budgets = {0.5, 0.5, 0.5, 0.5};
    inst.costs = {
        {{0.0, 0.0, 0.0, 0.0}, {1.0, 1.0, 1.0, 1.0}},
        {{0.0, 0.0, 0.0, 0.0}, {0.8, 0.8, 0.8, 0.8}},
    };
    const bl::markov::Matrix decay{{0.7, 0.3, 0.0}, {0.0, 0.6, 0.4}, {0.0, 0.0, 1.0}};
    const bl::markov::Matrix repair{{1.0, 0.0, 0.0}, {0.9, 0.1, 0.0}, {0.7, 0.2, 0.1}};
    inst.tpms = {{{decay}, {repair}}, {{decay}, {repair}}};
    inst.initial = {{0.6, 0.3, 0.1}, {0.4, 0.4, 0.2}};

    json instance;
    instance["schema_version"] = 1;
    instance["groups"] = inst.groups;
    instance["states"] = inst.states;
    instance["treatments"] = inst.treatments;
    instance["periods"] = inst.periods;
    instance["group_sizes"] = inst.group_sizes;
    instance["budgets"] = inst.budgets;
    instance["costs"] = inst.costs;
    instance["tpms"] = {{decay, repair}, {decay, repair}};
    instance["initial"] = inst.initial;
    const fs::path inst_path = dir / "instance.json";
    {
        std::ofstream out(inst_path);
        out << instance.dump(2) << "\n";
    }
    const fs::path sol_path = dir / "solution.json";
    if (run_cli("plan lp -i " + inst_path.string(), sol_path.string()) != 0) return false;
    json sol_json;
    {
        std::ifstream in(sol_path);
        if (!in) return false;
        in >> sol_json;
    }
    bl::planning::PolicySolution sol;
    sol.x = sol_json.at("x").get<std::vector<double>>();
    sol.alpha = sol_json.at("alpha").get<std::vector<double>>();
    sol.z = sol_json.at("z").get<std::vector<double>>();
    sol.objective = sol_json.at("objective").get<double>();
    try {
        bl::planning::verify_policy(inst, sol);
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

} // namespace

int main() {
    struct Criterion {
        int number;
        const char* description;
        bool (*run)();
    };
    const Criterion criteria[] = {
        {1, "propagation-time gap between 2% and 12% deterioration is ~16 years, under 1 ms",
         criterion_1},
        {2, "initiation-time round trip on 1000 environments; erf matches the series oracle",
         criterion_2},
        {3, "lab-to-field freeze-thaw life is exact for integer lab cycle counts", criterion_3},
        {4, "catalog rating models reproduce their published intercepts exactly", criterion_4},
        {5, "crack-width constant table and migration-coefficient bands match on boundary probes",
         criterion_5},
        {6, "maintenance LP dominates 100k random feasible policies on 100 seeded instances",
         criterion_6},
        {7, "scheduling IP agrees with exhaustive enumeration on 50 seeded small cases",
         criterion_7},
        {8, "optimal replacement interval matches the calculus oracle", criterion_8},
        {9, "backward-mass redistribution yields valid chains; stepping preserves the simplex",
         criterion_9},
        {10, "censored Weibull fit recovers (2, 10) and matches the grid-search oracle",
         criterion_10},
        {11, "effective-range identity, Miner unity, and rainflow fixtures are exact",
         criterion_11},
        {12, "deck simulation hits the closed-form onset in the zero-variance limit, bit-stable",
         criterion_12},
        {13, "carbonation depth/time functions are inverse to 1e-12; permeability table exact",
         criterion_13},
        {14, "CLI ingest reports 45+5 on the 50-row fixture; plan lp re-verifies independently",
         criterion_14},
    };

    bool all_ok = true;
    for (const auto& c : criteria) {
        bool ok = false;
        try {
            ok = c.run();
        } catch (const std::exception& e) {
            std::cout << "exception in criterion " << c.number << ": " << e.what() << "\n";
            ok = false;
        }
        std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << c.number << ": "
                  << c.description << "\n";
        all_ok = all_ok && ok;
    }
    return all_ok ? 0 : 1;
}
