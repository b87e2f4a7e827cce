#pragma once

#include <vector>

#include "bridgelife/errors.hpp"

namespace bridgelife::simplex {

// Maximization LP over x >= 0 with <= and == rows.
struct LinearProgram {
    std::size_t num_vars = 0;
    std::vector<double> objective; // length num_vars

    struct Row {
        std::vector<double> coeffs; // length num_vars
        double rhs = 0.0;
        bool equality = false; // false: coeffs.x <= rhs
    };
    std::vector<Row> rows;

    void add_leq(std::vector<double> coeffs, double rhs);
    void add_eq(std::vector<double> coeffs, double rhs);
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    std::vector<double> x;
    double objective = 0.0;
    bool alternate_optima = false;
    // For infeasible problems: the leftover constraint violation per row at
    // the closest feasible point found (phase-1 optimum).
    std::vector<double> infeasibility;
};

// Dense two-phase simplex with Bland's anticycling rule.
LpSolution solve(const LinearProgram& lp);

// Largest violation of the original rows and sign constraints at x.
double max_residual(const LinearProgram& lp, const std::vector<double>& x);

} // namespace bridgelife::simplex
