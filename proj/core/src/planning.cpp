#include "bridgelife/planning.hpp"

#include <algorithm>
#include <cmath>

namespace bridgelife::planning {

namespace {
constexpr double kFeasTol = 1e-8;
constexpr double kIpEps = 1e-6; // stand-in for the strict positivity requirement
} // namespace

void PlanningInstance::validate() const {
    if (groups == 0 || states == 0 || treatments == 0 || periods == 0) {
        throw DomainError("planning: all dimensions must be positive");
    }
    if (group_sizes.size() != groups || budgets.size() != periods ||
        costs.size() != groups || tpms.size() != groups || initial.size() != groups) {
        throw DomainError("planning: field sizes do not match dimensions");
    }
    for (std::size_t s = 0; s < groups; ++s) {
        if (group_sizes[s] <= 0.0) throw DomainError("planning: group sizes must be positive");
        if (costs[s].size() != treatments || tpms[s].size() != treatments ||
            initial[s].size() != states) {
            throw DomainError("planning: per-group field sizes do not match dimensions");
        }
        double sum = 0.0;
        for (double v : initial[s]) {
            if (v < 0.0) throw DomainError("planning: initial distribution must be non-negative");
            sum += v;
        }
        if (std::fabs(sum - 1.0) > 1e-9) {
            throw DomainError("planning: initial distribution must sum to 1");
        }
        for (std::size_t m = 0; m < treatments; ++m) {
            if (costs[s][m].size() != periods) {
                throw DomainError("planning: cost table size mismatch");
            }
            for (double c : costs[s][m]) {
                if (c < 0.0) throw DomainError("planning: costs must be non-negative");
            }
            if (tpms[s][m].size() != states) {
                throw DomainError("planning: TPM dimension mismatch");
            }
            // Treatment matrices may move mass toward better states, so only
            // row-stochasticity is required here, not triangularity.
            for (const auto& row : tpms[s][m].p) {
                double rs = 0.0;
                for (double v : row) {
                    if (v < 0.0 || v > 1.0 + 1e-9) {
                        throw DomainError("planning: TPM entries must be probabilities");
                    }
                    rs += v;
                }
                if (std::fabs(rs - 1.0) > 1e-9) {
                    throw DomainError("planning: TPM rows must sum to 1");
                }
            }
        }
    }
    for (double b : budgets) {
        if (b < 0.0) throw DomainError("planning: budgets must be non-negative");
    }
    if (best_state_floor && (*best_state_floor < 0.0 || *best_state_floor > 1.0)) {
        throw DomainError("planning: best-state floor must be a proportion");
    }
}

std::size_t PlanningInstance::x_index(std::size_t s, std::size_t i, std::size_t m,
                                      std::size_t t) const {
    return ((s * states + i) * treatments + m) * periods + t;
}

std::size_t PlanningInstance::alpha_index(std::size_t s, std::size_t i, std::size_t t) const {
    return num_x() + (s * states + i) * periods + t;
}

simplex::LinearProgram build_lp(const PlanningInstance& inst) {
    inst.validate();
    const std::size_t S = inst.groups, I = inst.states, M = inst.treatments, T = inst.periods;

    simplex::LinearProgram lp;
    lp.num_vars = inst.num_x() + inst.num_alpha();
    lp.objective.assign(lp.num_vars, 0.0);
    // Maximize the share of facilities in the best state across all periods.
    for (std::size_t s = 0; s < S; ++s) {
        for (std::size_t t = 0; t < T; ++t) lp.objective[inst.alpha_index(s, 0, t)] = 1.0;
    }

    // Initialization: alpha_{s,i,0} = initial.
    for (std::size_t s = 0; s < S; ++s) {
        for (std::size_t i = 0; i < I; ++i) {
            std::vector<double> row(lp.num_vars, 0.0);
            row[inst.alpha_index(s, i, 0)] = 1.0;
            lp.add_eq(std::move(row), inst.initial[s][i]);
        }
    }
    // Allocation: sum_m x_{s,i,m,t} = alpha_{s,i,t}.
    for (std::size_t s = 0; s < S; ++s) {
        for (std::size_t i = 0; i < I; ++i) {
            for (std::size_t t = 0; t < T; ++t) {
                std::vector<double> row(lp.num_vars, 0.0);
                for (std::size_t m = 0; m < M; ++m) row[inst.x_index(s, i, m, t)] = 1.0;
                row[inst.alpha_index(s, i, t)] = -1.0;
                lp.add_eq(std::move(row), 0.0);
            }
        }
    }
    // Coupling: alpha_{s,j,t+1} = sum_{i,m} x_{s,i,m,t} p^{(m,s)}_{i,j}.
    for (std::size_t s = 0; s < S; ++s) {
        for (std::size_t j = 0; j < I; ++j) {
            for (std::size_t t = 0; t + 1 < T; ++t) {
                std::vector<double> row(lp.num_vars, 0.0);
                for (std::size_t i = 0; i < I; ++i) {
                    for (std::size_t m = 0; m < M; ++m) {
                        row[inst.x_index(s, i, m, t)] = inst.tpms[s][m].p[i][j];
                    }
                }
                row[inst.alpha_index(s, j, t + 1)] = -1.0;
                lp.add_eq(std::move(row), 0.0);
            }
        }
    }
    // Budgets: sum_{s,i,m} x * cost * group size <= B_t.
    for (std::size_t t = 0; t < T; ++t) {
        std::vector<double> row(lp.num_vars, 0.0);
        for (std::size_t s = 0; s < S; ++s) {
            for (std::size_t i = 0; i < I; ++i) {
                for (std::size_t m = 0; m < M; ++m) {
                    row[inst.x_index(s, i, m, t)] = inst.costs[s][m][t] * inst.group_sizes[s];
                }
            }
        }
        lp.add_leq(std::move(row), inst.budgets[t]);
    }
    // Optional best-state floor: alpha_{s,0,t} >= delta, one row per group-period.
    if (inst.best_state_floor) {
        for (std::size_t s = 0; s < S; ++s) {
            for (std::size_t t = 0; t < T; ++t) {
                std::vector<double> row(lp.num_vars, 0.0);
                row[inst.alpha_index(s, 0, t)] = -1.0;
                lp.add_leq(std::move(row), -*inst.best_state_floor);
            }
        }
    }
    return lp;
}

PolicySolution solve_instance(const PlanningInstance& inst) {
    const simplex::LinearProgram lp = build_lp(inst);
    const simplex::LpSolution sol = simplex::solve(lp);
    if (sol.status == simplex::LpStatus::Infeasible) {
        throw ModelError("planning: instance is infeasible");
    }
    if (sol.status == simplex::LpStatus::Unbounded) {
        throw ModelError("planning: LP unbounded; malformed instance");
    }

    PolicySolution out;
    out.objective = sol.objective;
    out.alternate_optima = sol.alternate_optima;
    out.x.assign(sol.x.begin(), sol.x.begin() + static_cast<long>(inst.num_x()));
    out.alpha.assign(sol.x.begin() + static_cast<long>(inst.num_x()), sol.x.end());
    out.z.assign(inst.groups * inst.treatments * inst.periods, 0.0);
    for (std::size_t s = 0; s < inst.groups; ++s) {
        for (std::size_t m = 0; m < inst.treatments; ++m) {
            for (std::size_t t = 0; t < inst.periods; ++t) {
                double z = 0.0;
                for (std::size_t i = 0; i < inst.states; ++i) {
                    z += out.x[inst.x_index(s, i, m, t)];
                }
                out.z[(s * inst.treatments + m) * inst.periods + t] = z;
            }
        }
    }
    verify_policy(inst, out);
    return out;
}

void verify_policy(const PlanningInstance& inst, const PolicySolution& sol) {
    const std::size_t S = inst.groups, I = inst.states, M = inst.treatments, T = inst.periods;
    if (sol.x.size() != inst.num_x() || sol.alpha.size() != inst.num_alpha()) {
        throw DomainError("verify_policy: solution size mismatch");
    }
    auto alpha_at = [&](std::size_t s, std::size_t i, std::size_t t) {
        return sol.alpha[inst.alpha_index(s, i, t) - inst.num_x()];
    };
    for (double v : sol.x) {
        if (v < -kFeasTol) throw ModelError("verify_policy: negative allocation");
    }
    for (std::size_t s = 0; s < S; ++s) {
        // Initialization.
        for (std::size_t i = 0; i < I; ++i) {
            if (std::fabs(alpha_at(s, i, 0) - inst.initial[s][i]) > kFeasTol) {
                throw ModelError("verify_policy: initialization residual");
            }
        }
        for (std::size_t t = 0; t < T; ++t) {
            // Allocation.
            for (std::size_t i = 0; i < I; ++i) {
                double sum = 0.0;
                for (std::size_t m = 0; m < M; ++m) sum += sol.x[inst.x_index(s, i, m, t)];
                if (std::fabs(sum - alpha_at(s, i, t)) > kFeasTol) {
                    throw ModelError("verify_policy: allocation residual");
                }
            }
            // Coupling: replay one deterioration step under the mixed policy.
            if (t + 1 < T) {
                for (std::size_t j = 0; j < I; ++j) {
                    double next = 0.0;
                    for (std::size_t i = 0; i < I; ++i) {
                        for (std::size_t m = 0; m < M; ++m) {
                            next += sol.x[inst.x_index(s, i, m, t)] * inst.tpms[s][m].p[i][j];
                        }
                    }
                    if (std::fabs(next - alpha_at(s, j, t + 1)) > kFeasTol) {
                        throw ModelError("verify_policy: coupling residual");
                    }
                }
            }
        }
    }
    for (std::size_t t = 0; t < T; ++t) {
        double spend = 0.0;
        for (std::size_t s = 0; s < S; ++s) {
            for (std::size_t i = 0; i < I; ++i) {
                for (std::size_t m = 0; m < M; ++m) {
                    spend += sol.x[inst.x_index(s, i, m, t)] * inst.costs[s][m][t] *
                             inst.group_sizes[s];
                }
            }
        }
        if (spend > inst.budgets[t] + kFeasTol) {
            throw ModelError("verify_policy: budget exceeded");
        }
    }
    if (inst.best_state_floor) {
        for (std::size_t s = 0; s < S; ++s) {
            for (std::size_t t = 0; t < T; ++t) {
                if (alpha_at(s, 0, t) < *inst.best_state_floor - kFeasTol) {
                    throw ModelError("verify_policy: best-state floor violated");
                }
            }
        }
    }
}

void IpInstance::validate() const {
    if (facilities == 0 || treatments == 0 || periods == 0) {
        throw DomainError("ip: all dimensions must be positive");
    }
    if (initial_condition.size() != facilities || effectiveness.size() != treatments ||
        costs.size() != facilities || budgets.size() != periods) {
        throw DomainError("ip: field sizes do not match dimensions");
    }
    for (std::size_t a = 0; a < facilities; ++a) {
        if (costs[a].size() != treatments) throw DomainError("ip: cost table size mismatch");
        for (std::size_t m = 0; m < treatments; ++m) {
            if (costs[a][m].size() != periods) throw DomainError("ip: cost table size mismatch");
        }
    }
    for (double e : effectiveness) {
        if (e < 0.0) throw DomainError("ip: effectiveness must be non-negative");
    }
    for (double b : budgets) {
        if (b < 0.0) throw DomainError("ip: budgets must be non-negative");
    }
}

std::size_t IpInstance::u_index(std::size_t a, std::size_t m, std::size_t t) const {
    return (a * treatments + m) * periods + t;
}

namespace {

// The condition trajectory is affine in the binary decisions, so the whole
// IP is a 0-1 LP: s_a^t = slope^t s_a^0 + sum_{tau<=t} slope^(t-tau) *
// (intercept + sum_m e_m u_{a,m,tau}).
struct IpLp {
    simplex::LinearProgram lp;
    double objective_constant = 0.0;
};

IpLp build_ip_relaxation(const IpInstance& inst) {
    const std::size_t A = inst.facilities, M = inst.treatments, T = inst.periods;
    IpLp out;
    simplex::LinearProgram& lp = out.lp;
    lp.num_vars = inst.num_u();
    lp.objective.assign(lp.num_vars, 0.0);

    // Condition at (a, t), t in 1..T, as const + sum coeff * u.
    // free_part[a][t] and coeff of u_{a,m,tau} = slope^(t-tau) * e_m.
    std::vector<std::vector<double>> free_part(A, std::vector<double>(T + 1, 0.0));
    for (std::size_t a = 0; a < A; ++a) {
        free_part[a][0] = inst.initial_condition[a];
        for (std::size_t t = 1; t <= T; ++t) {
            free_part[a][t] = inst.decay_intercept + inst.decay_slope * free_part[a][t - 1];
        }
    }
    // Objective: sum over a, t of s_a^t.
    for (std::size_t a = 0; a < A; ++a) {
        for (std::size_t t = 1; t <= T; ++t) {
            out.objective_constant += free_part[a][t];
            for (std::size_t tau = 0; tau < t; ++tau) {
                const double carry = std::pow(inst.decay_slope,
                                              static_cast<double>(t - tau - 1));
                for (std::size_t m = 0; m < M; ++m) {
                    lp.objective[inst.u_index(a, m, tau)] += carry * inst.effectiveness[m];
                }
            }
        }
    }
    // u <= 1.
    for (std::size_t j = 0; j < lp.num_vars; ++j) {
        std::vector<double> row(lp.num_vars, 0.0);
        row[j] = 1.0;
        lp.add_leq(std::move(row), 1.0);
    }
    // At most one treatment per facility-period.
    for (std::size_t a = 0; a < A; ++a) {
        for (std::size_t t = 0; t < T; ++t) {
            std::vector<double> row(lp.num_vars, 0.0);
            for (std::size_t m = 0; m < M; ++m) row[inst.u_index(a, m, t)] = 1.0;
            lp.add_leq(std::move(row), 1.0);
        }
    }
    // Budgets.
    for (std::size_t t = 0; t < T; ++t) {
        std::vector<double> row(lp.num_vars, 0.0);
        for (std::size_t a = 0; a < A; ++a) {
            for (std::size_t m = 0; m < M; ++m) {
                row[inst.u_index(a, m, t)] = inst.costs[a][m][t];
            }
        }
        lp.add_leq(std::move(row), inst.budgets[t]);
    }
    // Positivity: s_a^t >= eps  ->  -(coeffs.u) <= free_part - eps.
    for (std::size_t a = 0; a < A; ++a) {
        for (std::size_t t = 1; t <= T; ++t) {
            std::vector<double> row(lp.num_vars, 0.0);
            for (std::size_t tau = 0; tau < t; ++tau) {
                const double carry = std::pow(inst.decay_slope,
                                              static_cast<double>(t - tau - 1));
                for (std::size_t m = 0; m < M; ++m) {
                    row[inst.u_index(a, m, tau)] = -carry * inst.effectiveness[m];
                }
            }
            lp.add_leq(std::move(row), free_part[a][t] - kIpEps);
        }
    }
    return out;
}

struct BnbState {
    const IpInstance* inst;
    IpLp relaxation;
    std::vector<int> fixed; // -1 free, 0/1 fixed
    std::vector<int> best_u;
    double best_obj = -1e300;
    bool found = false;
};

void bnb(BnbState& st) {
    // Solve the relaxation with current fixings appended as equalities.
    simplex::LinearProgram lp = st.relaxation.lp;
    for (std::size_t j = 0; j < st.fixed.size(); ++j) {
        if (st.fixed[j] >= 0) {
            std::vector<double> row(lp.num_vars, 0.0);
            row[j] = 1.0;
            lp.add_eq(std::move(row), static_cast<double>(st.fixed[j]));
        }
    }
    const simplex::LpSolution rel = simplex::solve(lp);
    if (rel.status != simplex::LpStatus::Optimal) return; // infeasible branch
    const double bound = rel.objective + st.relaxation.objective_constant;
    if (st.found && bound <= st.best_obj + 1e-9) return;

    // Most fractional variable.
    std::size_t branch = lp.num_vars;
    double worst = 1e-6;
    for (std::size_t j = 0; j < st.fixed.size(); ++j) {
        const double frac = std::fabs(rel.x[j] - std::round(rel.x[j]));
        if (frac > worst) {
            worst = frac;
            branch = j;
        }
    }
    if (branch == lp.num_vars) { // integral solution
        if (!st.found || bound > st.best_obj) {
            st.found = true;
            st.best_obj = bound;
            st.best_u.resize(st.fixed.size());
            for (std::size_t j = 0; j < st.fixed.size(); ++j) {
                st.best_u[j] = static_cast<int>(std::round(rel.x[j]));
            }
        }
        return;
    }
    for (int v : {1, 0}) { // try treating first: tends to tighten the bound
        st.fixed[branch] = v;
        bnb(st);
    }
    st.fixed[branch] = -1;
}

} // namespace

IpSolution solve_ip(const IpInstance& inst) {
    inst.validate();
    BnbState st;
    st.inst = &inst;
    st.relaxation = build_ip_relaxation(inst);
    st.fixed.assign(inst.num_u(), -1);
    bnb(st);
    IpSolution out;
    out.feasible = st.found;
    if (st.found) {
        out.u = st.best_u;
        out.objective = st.best_obj;
    }
    return out;
}

namespace {

double simpson(const std::function<double(double)>& f, double a, double b, double fa, double fm,
               double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::fabs(left + right - whole) <= 15.0 * tol) {
        return left + right + (left + right - whole) / 15.0;
    }
    return simpson(f, a, m, fa, flm, fm, left, tol * 0.5, depth - 1) +
           simpson(f, m, b, fm, frm, fb, right, tol * 0.5, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
    if (a == b) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson(f, a, b, fa, fm, fb, whole, tol, 50);
}

} // namespace

double replacement_mean_cost(const std::function<double(double)>& operating_cost,
                             double replacement_cost, double interval) {
    if (interval <= 0.0) throw DomainError("replacement: interval must be positive");
    if (replacement_cost <= 0.0) throw DomainError("replacement: replacement cost must be positive");
    return (integrate(operating_cost, 0.0, interval, 1e-9) + replacement_cost) / interval;
}

ReplacementResult optimal_replacement_interval(
    const std::function<double(double)>& operating_cost, double replacement_cost, double t_lo,
    double t_hi) {
    if (!(t_lo > 0.0) || !(t_hi > t_lo)) {
        throw DomainError("replacement: need 0 < t_lo < t_hi");
    }
    auto cost = [&](double t) { return replacement_mean_cost(operating_cost, replacement_cost, t); };
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = t_lo, hi = t_hi;
    double x1 = hi - gr * (hi - lo);
    double x2 = lo + gr * (hi - lo);
    double f1 = cost(x1);
    double f2 = cost(x2);
    while ((hi - lo) > 1e-6 * std::max(1.0, std::fabs(lo) + std::fabs(hi))) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - gr * (hi - lo);
            f1 = cost(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + gr * (hi - lo);
            f2 = cost(x2);
        }
    }
    const double t_star = 0.5 * (lo + hi);
    return {t_star, cost(t_star)};
}

} // namespace bridgelife::planning
