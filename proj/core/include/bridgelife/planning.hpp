#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "bridgelife/errors.hpp"
#include "bridgelife/markov.hpp"
#include "bridgelife/simplex.hpp"

namespace bridgelife::planning {

// Network maintenance LP data: S facility groups, I condition states
// (state 0 = best), M treatments, T planning periods.
struct PlanningInstance {
    std::size_t groups = 0;
    std::size_t states = 0;
    std::size_t treatments = 0;
    std::size_t periods = 0;

    std::vector<double> group_sizes;                     // [s]
    std::vector<double> budgets;                         // [t]
    std::vector<std::vector<std::vector<double>>> costs; // [s][m][t]
    // One TPM per (group, treatment).
    std::vector<std::vector<markov::TransitionProbabilityMatrix>> tpms; // [s][m]
    std::vector<std::vector<double>> initial;                           // [s][i]
    std::optional<double> best_state_floor;               // minimum alpha_{s,0,t}

    void validate() const;

    // Flat variable indexing inside the LP.
    std::size_t x_index(std::size_t s, std::size_t i, std::size_t m, std::size_t t) const;
    std::size_t alpha_index(std::size_t s, std::size_t i, std::size_t t) const;
    std::size_t num_x() const { return groups * states * treatments * periods; }
    std::size_t num_alpha() const { return groups * states * periods; }
};

simplex::LinearProgram build_lp(const PlanningInstance& inst);

struct PolicySolution {
    std::vector<double> x;     // flat, PlanningInstance::x_index layout
    std::vector<double> alpha; // flat, alpha_index layout
    std::vector<double> z;     // [s][m][t] flattened: (s*M + m)*T + t
    double objective = 0.0;
    bool alternate_optima = false;
};

PolicySolution solve_instance(const PlanningInstance& inst);

// Re-derives the state trajectory from x and checks every constraint family
// against the instance; throws ModelError when a residual exceeds 1e-8.
void verify_policy(const PlanningInstance& inst, const PolicySolution& sol);

// Small budget-constrained treatment-scheduling IP. Condition of facility a
// evolves as s' = decay_intercept + decay_slope * s plus the effectiveness of
// the applied treatment; one treatment at most per facility-period; condition
// must stay positive. Decision u_{a,m,t} is binary.
struct IpInstance {
    std::size_t facilities = 0;
    std::size_t treatments = 0;
    std::size_t periods = 0;
    std::vector<double> initial_condition;               // [a]
    double decay_intercept = 0.0;
    double decay_slope = 1.0;
    std::vector<double> effectiveness;                   // [m]
    std::vector<std::vector<std::vector<double>>> costs; // [a][m][t]
    std::vector<double> budgets;                         // [t]

    void validate() const;
    std::size_t u_index(std::size_t a, std::size_t m, std::size_t t) const;
    std::size_t num_u() const { return facilities * treatments * periods; }
};

struct IpSolution {
    bool feasible = false;
    std::vector<int> u; // flat 0/1, u_index layout
    double objective = 0.0;
};

IpSolution solve_ip(const IpInstance& inst);

// Mean cost per unit time of replacing at a fixed interval:
// (integral of the operating cost + replacement cost) / interval.
double replacement_mean_cost(const std::function<double(double)>& operating_cost,
                             double replacement_cost, double interval);

struct ReplacementResult {
    double interval = 0.0;
    double mean_cost = 0.0;
};

ReplacementResult optimal_replacement_interval(
    const std::function<double(double)>& operating_cost, double replacement_cost, double t_lo,
    double t_hi);

} // namespace bridgelife::planning
