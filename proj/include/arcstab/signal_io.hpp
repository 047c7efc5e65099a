#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arcstab/common.hpp"
#include "arcstab/linalg.hpp"

namespace arcstab {

struct SampledSignal {
    std::vector<double> samples;  // amperes
    double sample_rate = 0.0;     // Hz
};

struct FrameSet {
    std::vector<std::vector<double>> frames;  // each exactly window_len samples
    std::size_t window_len = 0;
    std::size_t hop = 0;
    std::vector<std::size_t> frame_start_indices;
};

// Parameters for the deterministic synthetic generator. state_means rows are
// (energy, entropy in nats, centroid in Hz) targets for the analysis frames.
struct SynthesisSpec {
    Matrix state_means;            // K x 3
    Matrix transition;             // K x K, row-stochastic
    std::size_t duration_frames = 0;
    std::uint64_t seed = 0;
    double carrier_freq = 50.0;    // Hz
    double noise_std = 0.002;      // amperes
    double sample_rate = 5000.0;   // Hz
    std::size_t frame_len = 1024;  // samples per synthesized frame
};

struct SamplingVerdict {
    bool pass = false;
    std::string message;
};

// Reads one numeric column from delimited text (commas and/or whitespace,
// '#' lines skipped). Row numbers in errors are 1-based physical lines.
SampledSignal load_signal(const std::string& path, std::size_t column, double sample_rate);

// Writes one sample per row at full precision. Inverse of load_signal column 0.
void save_signal(const std::string& path, const SampledSignal& signal);

void save_state_labels(const std::string& path, const std::vector<int>& states);
std::vector<int> load_state_labels(const std::string& path);

// Pass iff sample_rate >= margin * 2 * f_max. margin defaults to 10, which is
// how the "well above twice the highest frequency of interest" rule is pinned
// down here.
SamplingVerdict validate_sampling(const SampledSignal& signal, double f_max, double margin = 10.0);

// Validates the windowing parameters and returns the number of complete
// windows: floor((n_samples - window_len)/hop) + 1.
std::size_t frame_count(std::size_t n_samples, std::size_t window_len, std::size_t hop);

// Complete windows only; frames start at 0, hop, 2*hop, ... and tail samples
// shorter than window_len are dropped.
FrameSet segment(const SampledSignal& signal, std::size_t window_len, std::size_t hop);

struct SynthesisResult {
    SampledSignal signal;
    std::vector<int> true_states;  // one per frame
};

// Generates duration_frames blocks of frame_len samples. A hidden state path
// is sampled from spec.transition starting at state 0; each frame gets a
// state-specific mixture of a mains carrier, a centroid-setting tone, a
// comb of band components (width solved so expected spectral entropy matches
// the target), and white noise. Feature targets are calibrated for Hann
// analysis with window_len = frame_len and hop = frame_len. Fully
// deterministic given spec.seed.
SynthesisResult synthesize_arc_signal(const SynthesisSpec& spec);

}  // namespace arcstab
