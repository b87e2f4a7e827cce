#include "bridgelife/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace bridgelife::simplex {

namespace {

constexpr double kPivotTol = 1e-9;
constexpr double kFeasTol = 1e-8;

void check_row(const LinearProgram& lp, const LinearProgram::Row& row) {
    if (row.coeffs.size() != lp.num_vars) {
        throw DomainError("simplex: row length does not match variable count");
    }
}

} // namespace

void LinearProgram::add_leq(std::vector<double> coeffs, double rhs) {
    rows.push_back({std::move(coeffs), rhs, false});
    check_row(*this, rows.back());
}

void LinearProgram::add_eq(std::vector<double> coeffs, double rhs) {
    rows.push_back({std::move(coeffs), rhs, true});
    check_row(*this, rows.back());
}

double max_residual(const LinearProgram& lp, const std::vector<double>& x) {
    if (x.size() != lp.num_vars) throw DomainError("max_residual: size mismatch");
    double worst = 0.0;
    for (double v : x) worst = std::max(worst, -v);
    for (const auto& row : lp.rows) {
        double lhs = 0.0;
        for (std::size_t j = 0; j < lp.num_vars; ++j) lhs += row.coeffs[j] * x[j];
        const double r = lhs - row.rhs;
        worst = std::max(worst, row.equality ? std::fabs(r) : r);
    }
    return worst;
}

namespace {

// Full-tableau simplex over a fixed column layout:
//   [structural | slack (one per inequality) | artificial (one per row)]
struct Tableau {
    std::size_t n_struct, n_slack, n_art;
    std::size_t cols() const { return n_struct + n_slack + n_art; }
    std::vector<std::vector<double>> a; // rows x cols
    std::vector<double> b;              // >= 0 invariant maintained by pivoting
    std::vector<std::size_t> basis;     // column index per row

    void pivot(std::size_t row, std::size_t col) {
        const double piv = a[row][col];
        const double inv = 1.0 / piv;
        for (double& v : a[row]) v *= inv;
        b[row] *= inv;
        a[row][col] = 1.0;
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == row) continue;
            const double f = a[r][col];
            if (f == 0.0) continue;
            for (std::size_t c = 0; c < cols(); ++c) a[r][c] -= f * a[row][c];
            a[r][col] = 0.0;
            b[r] -= f * b[row];
        }
        basis[row] = col;
    }
};

// Maximize obj (length = tableau cols, artificials get 0 or -1). Entering
// column by Dantzig's rule with a switch to Bland's rule after a stall, so the
// solver is fast on typical inputs but cannot cycle; allowed(col) limits
// entering columns. Returns false on unbounded.
bool run_simplex(Tableau& t, const std::vector<double>& obj,
                 const std::vector<bool>& allowed, bool* alternate = nullptr) {
    const std::size_t m = t.a.size();
    const std::size_t n = t.cols();
    const std::size_t bland_after = 200 * (m + n);
    for (std::size_t iter = 0;; ++iter) {
        const bool bland = iter >= bland_after;
        // Reduced costs: c_j - c_B . B^-1 A_j (tableau already in basis form).
        std::vector<double> y(m);
        for (std::size_t r = 0; r < m; ++r) y[r] = obj[t.basis[r]];
        std::size_t enter = n;
        double best_red = kPivotTol;
        for (std::size_t j = 0; j < n; ++j) {
            if (!allowed[j]) continue;
            bool basic = false;
            for (std::size_t r = 0; r < m; ++r) {
                if (t.basis[r] == j) {
                    basic = true;
                    break;
                }
            }
            if (basic) continue;
            double red = obj[j];
            for (std::size_t r = 0; r < m; ++r) red -= y[r] * t.a[r][j];
            if (red > best_red) {
                enter = j;
                if (bland) break; // first improving index
                best_red = red;   // otherwise most improving index
            }
        }
        if (enter == n) {
            if (alternate) {
                *alternate = false;
                for (std::size_t j = 0; j < n && !*alternate; ++j) {
                    if (!allowed[j]) continue;
                    bool basic = false;
                    for (std::size_t r = 0; r < m; ++r) {
                        if (t.basis[r] == j) basic = true;
                    }
                    if (basic) continue;
                    double red = obj[j];
                    for (std::size_t r = 0; r < m; ++r) red -= y[r] * t.a[r][j];
                    if (std::fabs(red) <= kPivotTol) *alternate = true;
                }
            }
            return true;
        }
        // Ratio test. Ties go to the largest pivot element for stability, or
        // to the smallest basis index once in Bland mode (anti-cycling).
        std::size_t leave = m;
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t r = 0; r < m; ++r) {
            if (t.a[r][enter] > kPivotTol) {
                const double ratio = t.b[r] / t.a[r][enter];
                bool take = ratio < best - kPivotTol;
                if (!take && ratio < best + kPivotTol && leave != m) {
                    take = bland ? t.basis[r] < t.basis[leave]
                                 : t.a[r][enter] > t.a[leave][enter];
                }
                if (take || leave == m) {
                    best = std::min(best, ratio);
                    leave = r;
                }
            }
        }
        if (leave == m) return false; // unbounded direction
        t.pivot(leave, enter);
    }
}

} // namespace

LpSolution solve(const LinearProgram& lp) {
    if (lp.objective.size() != lp.num_vars) {
        throw DomainError("simplex: objective length does not match variable count");
    }
    const std::size_t m = lp.rows.size();
    std::size_t n_slack = 0;
    for (const auto& row : lp.rows) {
        if (!row.equality) ++n_slack;
    }

    Tableau t;
    t.n_struct = lp.num_vars;
    t.n_slack = n_slack;
    t.n_art = m;
    t.a.assign(m, std::vector<double>(t.cols(), 0.0));
    t.b.assign(m, 0.0);
    t.basis.assign(m, 0);

    std::size_t slack_at = lp.num_vars;
    for (std::size_t r = 0; r < m; ++r) {
        const auto& row = lp.rows[r];
        const double sign = row.rhs < 0.0 ? -1.0 : 1.0;
        for (std::size_t j = 0; j < lp.num_vars; ++j) t.a[r][j] = sign * row.coeffs[j];
        t.b[r] = sign * row.rhs;
        if (!row.equality) t.a[r][slack_at++] = sign;
        t.a[r][t.n_struct + t.n_slack + r] = 1.0;
        t.basis[r] = t.n_struct + t.n_slack + r;
    }

    // Phase 1: minimize the artificial total (maximize its negation).
    std::vector<double> phase1(t.cols(), 0.0);
    for (std::size_t r = 0; r < m; ++r) phase1[t.n_struct + t.n_slack + r] = -1.0;
    std::vector<bool> all_cols(t.cols(), true);
    if (!run_simplex(t, phase1, all_cols)) {
        throw ModelError("simplex: phase 1 unbounded (internal error)");
    }
    double art_total = 0.0;
    for (std::size_t r = 0; r < m; ++r) {
        if (t.basis[r] >= t.n_struct + t.n_slack) art_total += t.b[r];
    }
    LpSolution sol;
    if (art_total > kFeasTol) {
        sol.status = LpStatus::Infeasible;
        sol.infeasibility.assign(m, 0.0);
        for (std::size_t r = 0; r < m; ++r) {
            if (t.basis[r] >= t.n_struct + t.n_slack) {
                sol.infeasibility[t.basis[r] - t.n_struct - t.n_slack] = t.b[r];
            }
        }
        return sol;
    }
    // Drive leftover zero-valued artificials out of the basis where possible.
    for (std::size_t r = 0; r < m; ++r) {
        if (t.basis[r] < t.n_struct + t.n_slack) continue;
        // Pivot on the largest available element; a near-zero pivot here would
        // amplify roundoff through the rest of the tableau.
        std::size_t col = t.cols();
        double biggest = kPivotTol;
        for (std::size_t j = 0; j < t.n_struct + t.n_slack; ++j) {
            if (std::fabs(t.a[r][j]) > biggest) {
                biggest = std::fabs(t.a[r][j]);
                col = j;
            }
        }
        if (col < t.cols()) t.pivot(r, col);
        // else: redundant row; the artificial stays basic at value 0.
    }

    // Phase 2: original objective, artificial columns locked out.
    std::vector<double> phase2(t.cols(), 0.0);
    for (std::size_t j = 0; j < lp.num_vars; ++j) phase2[j] = lp.objective[j];
    std::vector<bool> real_cols(t.cols(), true);
    for (std::size_t j = t.n_struct + t.n_slack; j < t.cols(); ++j) real_cols[j] = false;
    bool alternate = false;
    if (!run_simplex(t, phase2, real_cols, &alternate)) {
        sol.status = LpStatus::Unbounded;
        return sol;
    }

    sol.status = LpStatus::Optimal;
    sol.alternate_optima = alternate;
    sol.x.assign(lp.num_vars, 0.0);
    for (std::size_t r = 0; r < m; ++r) {
        if (t.basis[r] < lp.num_vars) sol.x[t.basis[r]] = t.b[r];
    }
    sol.objective = 0.0;
    for (std::size_t j = 0; j < lp.num_vars; ++j) sol.objective += lp.objective[j] * sol.x[j];
    return sol;
}

} // namespace bridgelife::simplex
