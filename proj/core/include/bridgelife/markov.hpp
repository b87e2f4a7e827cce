#pragma once

#include <vector>

#include "bridgelife/errors.hpp"

namespace bridgelife::markov {

using Vector = std::vector<double>;
using Matrix = std::vector<std::vector<double>>;

// Row-stochastic, upper-triangular condition-state transition matrix with an
// absorbing last state.
struct TransitionProbabilityMatrix {
    Matrix p;

    std::size_t size() const { return p.size(); }
    // Throws DomainError when shape, stochasticity, triangularity, or the
    // absorbing last state are violated.
    void validate() const;
};

// One deterioration step: alpha' = alpha * P.
Vector markov_step(const Vector& alpha, const TransitionProbabilityMatrix& tpm);

// N-step propagation by iterated stepping.
Vector ertekin_propagate(const Vector& alpha, const TransitionProbabilityMatrix& tpm,
                         unsigned steps);

// Redistribute any backward (lower-triangular) transition mass of a 5-state
// row-stochastic matrix onto forward states, yielding a valid deterioration
// TPM. Input rows must sum to 1 but need not be upper-triangular.
TransitionProbabilityMatrix zhang_matrix(const Matrix& p);

// Fit a one-parameter-per-row TPM (stay or advance one state) so the expected
// rating trajectory tracks a non-increasing target curve. Multi-start
// coordinate descent with fixed seeds.
struct HallbergFit {
    TransitionProbabilityMatrix tpm;
    double objective = 0.0; // sum of absolute trajectory errors
};

HallbergFit hallberg_calibrate(const Vector& target_ratings, std::size_t states,
                               double initial_rating, double worst_rating);

} // namespace bridgelife::markov
