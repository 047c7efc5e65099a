#pragma once

#include <vector>

#include "arcstab/linalg.hpp"
#include "arcstab/observation.hpp"

namespace arcstab {

// Per-state feature statistics in raw units (population standard deviations).
struct StateStatRow {
    std::size_t count = 0;
    bool present = false;
    std::vector<double> means;  // one per feature column
    std::vector<double> stds;
};

struct StateStatistics {
    std::vector<StateStatRow> rows;  // indexed by state
};

struct TransitionMetrics {
    std::vector<double> persistence;        // diagonal, echoed from the input matrix
    double instability_probability = 0.0;   // A[Stable, Extinction]
};

struct TemporalMetrics {
    double average_state_persistence = 0.0;  // mean empirical self-loop over visited states
    double transition_entropy = 0.0;         // nats, over ordered bigram pairs
    double mean_state_duration = 0.0;        // frames per run
    double state_duration_variance = 0.0;    // population variance of run lengths
    double transition_ratio = 0.0;           // fraction of consecutive pairs that differ
};

// Row-normalized bigram counts. States that never emit a transition get a
// one-hot self-loop row; their indices are appended to *unvisited if given.
Matrix empirical_transition_matrix(const std::vector<int>& path, std::size_t n_states,
                                   std::vector<std::size_t>* unvisited = nullptr);

// persistence(k) = A_kk for every state; instability = A[stable, extinction].
// Values are echoed from the matrix as given (no renormalization).
TransitionMetrics transition_metrics(const Matrix& transition, std::size_t stable_state,
                                     std::size_t extinction_state);

StateStatistics state_statistics(const ObservationSequence& raw_obs, const std::vector<int>& path,
                                 std::size_t n_states);

TemporalMetrics temporal_metrics(const std::vector<int>& path, std::size_t n_states);

}  // namespace arcstab
