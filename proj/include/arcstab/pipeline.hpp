#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "arcstab/gmm.hpp"
#include "arcstab/hmm.hpp"
#include "arcstab/metrics.hpp"
#include "arcstab/observation.hpp"
#include "arcstab/signal_io.hpp"
#include "arcstab/tfa.hpp"

namespace arcstab {

struct PipelineConfig {
    // Exactly one of input_path / synthesis drives the run.
    std::string input_path;
    std::size_t input_column = 0;
    double sample_rate = 5000.0;  // for file input
    bool has_synthesis = false;
    bool synthesis_seed_explicit = false;
    SynthesisSpec synthesis;

    std::size_t window_len = 1024;
    std::size_t hop = 256;
    WindowKind window_kind = WindowKind::Hann;
    std::size_t n_states = 3;
    std::uint64_t seed = 1;

    std::size_t gmm_restarts = 5;
    std::size_t gmm_max_iter = 200;
    double gmm_tol = 1e-6;
    bool gmm_diagonal = false;
    double em_tol = 1e-6;
    std::size_t em_max_iter = 200;
    bool freeze_emissions = false;
    std::vector<std::pair<std::size_t, std::size_t>> structural_zeros;

    unsigned long long alarm_delta = 10;
    double alarm_theta = 0.2;
    double nyquist_f_max = 60.0;
    double nyquist_margin = 10.0;
    std::string out_dir = "out";
};

// Strict JSON parsing: unknown keys are hard errors.
PipelineConfig parse_config(const std::string& json_text);
PipelineConfig load_config(const std::string& path);

// Sets the master seed; the synthesis block follows it unless the config
// pinned its own seed explicitly.
void apply_seed_override(PipelineConfig& config, std::uint64_t seed);

struct RegimeReport {
    PipelineConfig config;
    bool trained_here = true;  // false for decode-with-saved-model runs

    ModelDocument model;
    std::vector<double> loglik_trace;      // Baum-Welch (or single forward pass)
    std::vector<double> gmm_loglik_trace;  // winning restart
    std::size_t gmm_best_restart = 0;

    std::vector<int> path;
    double path_log_joint = 0.0;

    StateStatistics state_stats;
    Matrix empirical_transition;
    std::vector<std::size_t> unvisited_states;
    TransitionMetrics transition;
    TemporalMetrics temporal;
    std::vector<double> stationary;

    std::vector<AlarmResult> alarm_evaluations;  // one per possible current state
    std::size_t current_state = 0;               // last decoded state

    SamplingVerdict sampling;
    std::vector<std::size_t> degenerate_frames;
    std::vector<std::string> notices;
    bool silhouette_computed = false;

    // Plot data carried for export.
    ObservationSequence raw_obs;
    Spectrogram spectrogram;
    PcaResult pca;
    SilhouetteResult silhouette;
};

// Full pipeline: ingest or synthesize, spectrogram, features, standardize,
// GMM seeding, Baum-Welch, regime labeling, Viterbi decode, analytics.
// Writes the report and plot-data files to config.out_dir and returns the
// report. Stage failures rethrow with the stage name prefixed.
RegimeReport run_pipeline(const PipelineConfig& config);

struct DecodeRequest {
    std::string model_path;
    std::string input_path;
    std::size_t input_column = 0;
    unsigned long long alarm_delta = 10;
    double alarm_theta = 0.2;
    double nyquist_f_max = 60.0;
    double nyquist_margin = 10.0;
    std::string out_dir = "out";
};

// Apply a saved model to a new signal: no training, same analytics/exports.
RegimeReport run_decode(const DecodeRequest& request);

// Writes report.json, features.csv, spectrogram.csv, spectrogram_axes.csv,
// pca.csv, silhouette.csv, path.csv, model.txt; returns the manifest.
std::vector<std::string> export_report(const RegimeReport& report, const std::string& dir);

// Path-only analytics (metrics subcommand): temporal metrics plus the
// empirical transition matrix, written as metrics.json.
std::string export_path_metrics(const std::vector<int>& path, std::size_t n_states,
                                const std::string& dir);

}  // namespace arcstab
