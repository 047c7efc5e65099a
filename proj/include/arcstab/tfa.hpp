#pragma once

#include <string>
#include <vector>

#include "arcstab/linalg.hpp"
#include "arcstab/signal_io.hpp"

namespace arcstab {

enum class WindowKind { Hann, Rectangular };

WindowKind parse_window_kind(const std::string& name);
std::string window_kind_name(WindowKind kind);

struct Spectrogram {
    Matrix power;                    // T x F, F = window_len/2 + 1
    std::vector<double> frame_times; // seconds, center of each window
    std::vector<double> bin_freqs;   // Hz, 0 .. fs/2
    std::size_t window_len = 0;
    std::size_t hop = 0;
    WindowKind window_kind = WindowKind::Hann;
};

struct FrameFeatures {
    double energy = 0.0;    // sum of one-sided power
    double entropy = 0.0;   // nats
    double centroid = 0.0;  // Hz
    bool degenerate = false;  // all-zero frame sentinel (0, 0, 0)
};

// One-sided power spectrogram. Forward DFT is unnormalized, so for each frame
// the windowed time-domain energy satisfies
//   sum_n (w*x)^2 = (P[0] + P[N/2] + 2 * sum_{0<k<N/2} P[k]) / N.
Spectrogram stft_power(const SampledSignal& signal, std::size_t window_len, std::size_t hop,
                       WindowKind window_kind = WindowKind::Hann);

// energy = sum P; entropy = -sum p ln p with p = P/sum(P), contributions with
// p <= 1e-300 dropped; centroid = sum f*P / sum P. An all-zero frame returns
// (0, 0, 0) flagged degenerate.
FrameFeatures extract_frame_features(const Spectrogram& spectrogram, std::size_t frame);

// Sum of power over bins with f_lo <= f <= f_hi (inclusive on both ends).
double band_energy(const Spectrogram& spectrogram, std::size_t frame, double f_lo, double f_hi);

}  // namespace arcstab
