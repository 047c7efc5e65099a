#pragma once

#include <string>
#include <vector>

#include "arcstab/linalg.hpp"
#include "arcstab/observation.hpp"

namespace arcstab {

struct GaussianParams {
    std::vector<double> mean;
    Matrix cov;
};

struct HmmParams {
    std::vector<double> initial;            // pi, sums to 1
    Matrix transition;                      // K x K row-stochastic
    std::vector<GaussianParams> emissions;  // one per state
    std::vector<std::string> state_labels;  // display names
    // Optional K x K mask; entries != 0 mark transitions pinned to exact zero.
    // Zeros of `transition` NOT covered by the mask are treated as incidental
    // and floored at 1e-12 when logs are taken.
    Matrix structural_zeros;

    std::size_t n_states() const { return initial.size(); }
};

struct PosteriorSet {
    Matrix gamma;            // T x K
    std::vector<Matrix> xi;  // T-1 slices, each K x K
    double loglik = 0.0;
};

struct StatePath {
    std::vector<int> states;
    double log_joint = 0.0;
};

// Log multivariate normal density via Cholesky factorization. state_hint >= 0
// names the offending state when the covariance is not positive definite.
double emission_logpdf(const std::vector<double>& v, const std::vector<double>& mean,
                       const Matrix& cov, int state_hint = -1);

// Scaled forward-backward: per-step normalization constants accumulated in
// log, with a per-frame shift of the emission log-densities for range safety.
PosteriorSet forward_backward(const ObservationSequence& obs, const HmmParams& params);

// ln pi + sum ln A + sum emission log-densities along the path. Structural
// zeros give -inf; incidental zeros are floored at 1e-12.
double joint_log_prob(const ObservationSequence& obs, const std::vector<int>& path,
                      const HmmParams& params);

struct BaumWelchOptions {
    double tol = 1e-6;
    std::size_t max_iter = 200;
    bool update_emissions = true;  // false: re-estimate only pi and A
};

struct BaumWelchResult {
    HmmParams params;
    std::vector<double> loglik_trace;
};

// EM re-estimation: pi <- gamma_1, A_ij <- sum_t xi/sum_t gamma, emissions
// <- gamma-weighted moments with eps*I regularization (eps = 1e-6*trace/d).
// States with total occupancy < 1e-8 keep their previous emission parameters
// (and transition row, if also starved) for that iteration, with a warning.
BaumWelchResult baum_welch(const ObservationSequence& obs, const HmmParams& init,
                           const BaumWelchOptions& options = {},
                           std::vector<std::string>* warnings = nullptr);

// Exact MAP path in the log domain; ties broken toward the lower state index
// at every maximization.
StatePath viterbi(const ObservationSequence& obs, const HmmParams& params);

// Rows must sum to 1 within +-0.02 (renormalized with a notice) or the call
// fails. Power iteration from the uniform vector, max-abs increment < 1e-12,
// at most 100000 iterations.
std::vector<double> stationary_distribution(const Matrix& transition,
                                            std::vector<std::string>* warnings = nullptr);

// A^delta by repeated squaring, after the same +-0.02 renormalization rule.
Matrix n_step_prediction(const Matrix& transition, unsigned long long delta,
                         std::vector<std::string>* warnings = nullptr);

struct AlarmResult {
    double probability = 0.0;
    bool fired = false;
};

// probability = (A^delta)[current_state, extinction_state]; fires iff
// strictly above theta.
AlarmResult instability_alarm(const Matrix& transition, std::size_t current_state,
                              unsigned long long delta, double theta,
                              std::size_t extinction_state,
                              std::vector<std::string>* warnings = nullptr);

// For K=3: order states by ascending emission energy mean (ties by ascending
// entropy mean). order[new_index] = old_index; new indices 0,1,2 carry the
// labels Transient, Stable, Extinction.
std::vector<std::size_t> label_states(const HmmParams& params);

// Reindexes pi, A, emissions, labels (and the structural-zero mask) so that
// new state i is old state order[i].
HmmParams apply_state_order(const HmmParams& params, const std::vector<std::size_t>& order);

extern const std::vector<std::string> kRegimeLabels;  // Transient, Stable, Extinction

// A fitted model plus everything needed to reuse it on new signals.
struct ModelDocument {
    HmmParams params;
    Standardizer scaler;
    std::size_t window_len = 0;
    std::size_t hop = 0;
    WindowKind window_kind = WindowKind::Hann;
    double sample_rate = 0.0;
};

// Human-readable text document; numeric values at 17 significant digits so a
// load reproduces the saved model exactly.
void save_model(const std::string& path, const ModelDocument& doc);
ModelDocument load_model(const std::string& path);

}  // namespace arcstab
