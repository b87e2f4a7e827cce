#include "bridgelife/markov.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace bridgelife::markov {

namespace {

constexpr double kRowSumTol = 1e-9;

void check_row_stochastic(const Matrix& p) {
    const std::size_t n = p.size();
    if (n == 0) throw DomainError("matrix must be non-empty");
    for (const auto& row : p) {
        if (row.size() != n) throw DomainError("matrix must be square");
        double sum = 0.0;
        for (double v : row) {
            if (!(v >= 0.0 && v <= 1.0 + kRowSumTol)) {
                throw DomainError("matrix entries must be probabilities");
            }
            sum += v;
        }
        if (std::fabs(sum - 1.0) > kRowSumTol) {
            throw DomainError("matrix rows must sum to 1");
        }
    }
}

} // namespace

void TransitionProbabilityMatrix::validate() const {
    check_row_stochastic(p);
    const std::size_t n = p.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (p[i][j] != 0.0) {
                throw DomainError("TPM must be upper-triangular (no condition improvement)");
            }
        }
    }
    if (std::fabs(p[n - 1][n - 1] - 1.0) > kRowSumTol) {
        throw DomainError("TPM last state must be absorbing");
    }
}

Vector markov_step(const Vector& alpha, const TransitionProbabilityMatrix& tpm) {
    tpm.validate();
    const std::size_t n = tpm.size();
    if (alpha.size() != n) throw DomainError("markov_step: vector/matrix size mismatch");
    double sum = 0.0;
    for (double v : alpha) {
        if (v < 0.0) throw DomainError("markov_step: negative probability");
        sum += v;
    }
    if (std::fabs(sum - 1.0) > kRowSumTol) {
        throw DomainError("markov_step: state vector must sum to 1");
    }
    Vector out(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) out[j] += alpha[i] * tpm.p[i][j];
    }
    for (double& v : out) {
        if (v < 0.0) v = 0.0;
    }
    return out;
}

Vector ertekin_propagate(const Vector& alpha, const TransitionProbabilityMatrix& tpm,
                         unsigned steps) {
    Vector cur = alpha;
    for (unsigned k = 0; k < steps; ++k) cur = markov_step(cur, tpm);
    return cur;
}

TransitionProbabilityMatrix zhang_matrix(const Matrix& p) {
    if (p.size() != 5) throw DomainError("zhang_matrix: expects a 5-state matrix");
    check_row_stochastic(p);

    Matrix d(5, Vector(5, 0.0));
    // Row 1 is already forward-only.
    for (std::size_t j = 0; j < 5; ++j) d[0][j] = p[0][j];
    // Row 2: half the backward mass stays, a sixth goes to each forward state.
    d[1][1] = p[1][1] + 0.5 * p[1][0];
    for (std::size_t j = 2; j < 5; ++j) d[1][j] = p[1][j] + p[1][0] / 6.0;
    // Row 3: backward mass split 3/5 to stay, 1/5 to each of the next two.
    {
        const double back = p[2][0] + p[2][1];
        d[2][2] = p[2][2] + 0.6 * back;
        d[2][3] = p[2][3] + 0.2 * back;
        d[2][4] = p[2][4] + 0.2 * back;
    }
    // Row 4: 7/10 to stay, 3/10 to the last state.
    {
        const double back = p[3][0] + p[3][1] + p[3][2];
        d[3][3] = p[3][3] + 0.7 * back;
        d[3][4] = p[3][4] + 0.3 * back;
    }
    // Row 5: everything collapses onto the absorbing state.
    d[4][4] = 1.0;

    TransitionProbabilityMatrix out{d};
    for (const auto& row : out.p) {
        double sum = 0.0;
        for (double v : row) sum += v;
        if (std::fabs(sum - 1.0) > kRowSumTol) {
            throw ModelError("zhang_matrix: redistributed row does not sum to 1");
        }
    }
    out.validate();
    return out;
}

namespace {

TransitionProbabilityMatrix tpm_from_stay(const Vector& stay, std::size_t states) {
    Matrix p(states, Vector(states, 0.0));
    for (std::size_t i = 0; i + 1 < states; ++i) {
        p[i][i] = stay[i];
        p[i][i + 1] = 1.0 - stay[i];
    }
    p[states - 1][states - 1] = 1.0;
    return {p};
}

double trajectory_error(const Vector& stay, const Vector& target, std::size_t states,
                        const Vector& ratings) {
    const TransitionProbabilityMatrix tpm = tpm_from_stay(stay, states);
    Vector alpha(states, 0.0);
    alpha[0] = 1.0;
    double err = 0.0;
    for (double y : target) {
        alpha = markov_step(alpha, tpm);
        double expected = 0.0;
        for (std::size_t k = 0; k < states; ++k) expected += alpha[k] * ratings[k];
        err += std::fabs(y - expected);
    }
    return err;
}

} // namespace

HallbergFit hallberg_calibrate(const Vector& target_ratings, std::size_t states,
                               double initial_rating, double worst_rating) {
    if (states < 2) throw DomainError("hallberg_calibrate: need at least 2 states");
    if (target_ratings.empty()) throw DomainError("hallberg_calibrate: empty target curve");
    if (initial_rating <= worst_rating) {
        throw DomainError("hallberg_calibrate: initial rating must exceed the worst rating");
    }
    for (std::size_t i = 0; i < target_ratings.size(); ++i) {
        if (target_ratings[i] > initial_rating + 1e-12 || target_ratings[i] < worst_rating - 1e-12) {
            throw DomainError("hallberg_calibrate: target outside rating bounds");
        }
        if (i > 0 && target_ratings[i] > target_ratings[i - 1] + 1e-12) {
            throw DomainError("hallberg_calibrate: target curve must be non-increasing");
        }
    }

    // State ratings interpolate from best to worst.
    Vector ratings(states);
    for (std::size_t k = 0; k < states; ++k) {
        ratings[k] = initial_rating +
                     (worst_rating - initial_rating) * static_cast<double>(k) /
                         static_cast<double>(states - 1);
    }

    const std::size_t free_rows = states - 1;
    auto objective = [&](const Vector& stay) {
        return trajectory_error(stay, target_ratings, states, ratings);
    };

    Vector best_stay(free_rows, 1.0);
    double best_obj = objective(best_stay);

    for (unsigned seed = 1; seed <= 5; ++seed) {
        std::mt19937 rng(seed);
        std::uniform_real_distribution<double> uni(0.0, 1.0);
        Vector stay(free_rows);
        for (double& q : stay) q = uni(rng);
        double obj = objective(stay);

        // Coordinate descent: coarse grid then golden-section per coordinate.
        const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
        for (int sweep = 0; sweep < 200; ++sweep) {
            const double before = obj;
            for (std::size_t i = 0; i < free_rows; ++i) {
                double q_best = stay[i];
                double f_best = obj;
                for (int g = 0; g <= 50; ++g) {
                    stay[i] = g / 50.0;
                    const double f = objective(stay);
                    if (f < f_best) {
                        f_best = f;
                        q_best = stay[i];
                    }
                }
                double lo = std::max(0.0, q_best - 0.02);
                double hi = std::min(1.0, q_best + 0.02);
                double x1 = hi - gr * (hi - lo);
                double x2 = lo + gr * (hi - lo);
                stay[i] = x1;
                double f1 = objective(stay);
                stay[i] = x2;
                double f2 = objective(stay);
                while (hi - lo > 1e-10) {
                    if (f1 < f2) {
                        hi = x2;
                        x2 = x1;
                        f2 = f1;
                        x1 = hi - gr * (hi - lo);
                        stay[i] = x1;
                        f1 = objective(stay);
                    } else {
                        lo = x1;
                        x1 = x2;
                        f1 = f2;
                        x2 = lo + gr * (hi - lo);
                        stay[i] = x2;
                        f2 = objective(stay);
                    }
                }
                const double q_gold = (f1 < f2) ? x1 : x2;
                const double f_gold = std::min(f1, f2);
                if (f_gold < f_best) {
                    q_best = q_gold;
                    f_best = f_gold;
                }
                stay[i] = q_best;
                obj = f_best;
            }
            if (before - obj < 1e-6) break;
        }
        // Nelder-Mead refinement: the absolute-error objective has diagonal
        // ridges where no single-coordinate move improves, so coordinate
        // descent alone can stall short of the optimum.
        {
            auto clamped = [&](Vector v) {
                for (double& q : v) q = std::clamp(q, 0.0, 1.0);
                return v;
            };
            std::vector<Vector> simplex{stay};
            std::vector<double> f{obj};
            for (std::size_t i = 0; i < free_rows; ++i) {
                Vector v = stay;
                v[i] = std::clamp(v[i] + (v[i] < 0.5 ? 0.1 : -0.1), 0.0, 1.0);
                simplex.push_back(v);
                f.push_back(objective(v));
            }
            for (int iter = 0; iter < 2000; ++iter) {
                std::size_t lo = 0, hi = 0, next_hi = 0;
                for (std::size_t k = 1; k < f.size(); ++k) {
                    if (f[k] < f[lo]) lo = k;
                    if (f[k] > f[hi]) hi = k;
                }
                for (std::size_t k = 0; k < f.size(); ++k) {
                    if (k != hi && f[k] > f[next_hi]) next_hi = k;
                }
                if (f[hi] - f[lo] < 1e-12) break;

                Vector centroid(free_rows, 0.0);
                for (std::size_t k = 0; k < simplex.size(); ++k) {
                    if (k == hi) continue;
                    for (std::size_t i = 0; i < free_rows; ++i) centroid[i] += simplex[k][i];
                }
                for (double& c : centroid) c /= static_cast<double>(free_rows);

                auto blend = [&](double coeff) {
                    Vector v(free_rows);
                    for (std::size_t i = 0; i < free_rows; ++i) {
                        v[i] = centroid[i] + coeff * (simplex[hi][i] - centroid[i]);
                    }
                    return clamped(v);
                };
                const Vector refl = blend(-1.0);
                const double f_refl = objective(refl);
                if (f_refl < f[lo]) {
                    const Vector exp_v = blend(-2.0);
                    const double f_exp = objective(exp_v);
                    simplex[hi] = (f_exp < f_refl) ? exp_v : refl;
                    f[hi] = std::min(f_exp, f_refl);
                } else if (f_refl < f[next_hi]) {
                    simplex[hi] = refl;
                    f[hi] = f_refl;
                } else {
                    const Vector con = blend(0.5);
                    const double f_con = objective(con);
                    if (f_con < f[hi]) {
                        simplex[hi] = con;
                        f[hi] = f_con;
                    } else {
                        for (std::size_t k = 0; k < simplex.size(); ++k) {
                            if (k == lo) continue;
                            for (std::size_t i = 0; i < free_rows; ++i) {
                                simplex[k][i] = 0.5 * (simplex[k][i] + simplex[lo][i]);
                            }
                            f[k] = objective(simplex[k]);
                        }
                    }
                }
            }
            std::size_t lo = 0;
            for (std::size_t k = 1; k < f.size(); ++k) {
                if (f[k] < f[lo]) lo = k;
            }
            if (f[lo] < obj) {
                stay = simplex[lo];
                obj = f[lo];
            }
        }

        if (obj < best_obj) {
            best_obj = obj;
            best_stay = stay;
        }
    }

    return {tpm_from_stay(best_stay, states), best_obj};
}

} // namespace bridgelife::markov
