#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "arcstab/common.hpp"
#include "arcstab/gmm.hpp"
#include "arcstab/hmm.hpp"
#include "arcstab/metrics.hpp"
#include "arcstab/observation.hpp"
#include "arcstab/pipeline.hpp"
#include "arcstab/signal_io.hpp"
#include "arcstab/tfa.hpp"

namespace py = pybind11;
using namespace arcstab;

namespace {

using Rows = std::vector<std::vector<double>>;

Matrix to_matrix(const Rows& rows, const char* what) {
    if (rows.empty()) throw ConfigError(std::string(what) + " must not be empty");
    Matrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size())
            throw ConfigError(std::string(what) + " rows must have equal length");
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Rows to_rows(const Matrix& m) {
    Rows rows(m.rows(), std::vector<double>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
    return rows;
}

ObservationSequence obs_from_rows(const Rows& rows) {
    ObservationSequence obs;
    obs.vectors = to_matrix(rows, "observations");
    obs.frame_times.resize(rows.size());
    for (std::size_t t = 0; t < rows.size(); ++t) obs.frame_times[t] = static_cast<double>(t);
    obs.feature_names.resize(obs.vectors.cols());
    for (std::size_t j = 0; j < obs.vectors.cols(); ++j)
        obs.feature_names[j] = "f" + std::to_string(j);
    obs.degenerate.assign(rows.size(), 0);
    return obs;
}

HmmParams params_from_py(const std::vector<double>& initial, const Rows& transition,
                         const Rows& means, const std::vector<Rows>& covariances) {
    HmmParams p;
    p.initial = initial;
    p.transition = to_matrix(transition, "transition");
    Matrix mu = to_matrix(means, "means");
    if (covariances.size() != mu.rows())
        throw ConfigError("covariances must have one entry per state");
    p.emissions.resize(mu.rows());
    for (std::size_t s = 0; s < mu.rows(); ++s) {
        p.emissions[s].mean.assign(mu.row(s), mu.row(s) + mu.cols());
        p.emissions[s].cov = to_matrix(covariances[s], "covariance");
    }
    for (std::size_t s = 0; s < mu.rows(); ++s)
        p.state_labels.push_back("state_" + std::to_string(s));
    return p;
}

py::dict params_to_py(const HmmParams& p) {
    py::dict d;
    d["initial"] = p.initial;
    d["transition"] = to_rows(p.transition);
    Rows means;
    std::vector<Rows> covs;
    for (const GaussianParams& g : p.emissions) {
        means.push_back(g.mean);
        covs.push_back(to_rows(g.cov));
    }
    d["means"] = means;
    d["covariances"] = covs;
    d["state_labels"] = p.state_labels;
    return d;
}

}  // namespace

PYBIND11_MODULE(_arcstab, m) {
    m.doc() = "welding arc stability analysis: spectral features and regime HMM";

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<DataError>(m, "DataError", PyExc_ValueError);
    py::register_exception<NumericError>(m, "NumericError", PyExc_ArithmeticError);

    m.def(
        "synthesize",
        [](const Rows& state_means, const Rows& transition, std::size_t duration_frames,
           std::uint64_t seed, double carrier_freq, double noise_std, double sample_rate,
           std::size_t frame_len) {
            SynthesisSpec spec;
            spec.state_means = to_matrix(state_means, "state_means");
            spec.transition = to_matrix(transition, "transition");
            spec.duration_frames = duration_frames;
            spec.seed = seed;
            spec.carrier_freq = carrier_freq;
            spec.noise_std = noise_std;
            spec.sample_rate = sample_rate;
            spec.frame_len = frame_len;
            SynthesisResult res = synthesize_arc_signal(spec);
            return py::make_tuple(res.signal.samples, res.true_states);
        },
        py::arg("state_means"), py::arg("transition"), py::arg("duration_frames"),
        py::arg("seed") = 1, py::arg("carrier_freq") = 50.0, py::arg("noise_std") = 0.002,
        py::arg("sample_rate") = 5000.0, py::arg("frame_len") = 1024,
        "Synthesize a regime-switching arc current signal; returns (samples, true_states).");

    m.def(
        "stft",
        [](const std::vector<double>& samples, double sample_rate, std::size_t window_len,
           std::size_t hop, const std::string& window) {
            SampledSignal signal;
            signal.samples = samples;
            signal.sample_rate = sample_rate;
            Spectrogram sp = stft_power(signal, window_len, hop, parse_window_kind(window));
            return py::make_tuple(to_rows(sp.power), sp.frame_times, sp.bin_freqs);
        },
        py::arg("samples"), py::arg("sample_rate"), py::arg("window_len"), py::arg("hop"),
        py::arg("window") = "hann",
        "One-sided power spectrogram; returns (power, frame_times, bin_freqs).");

    m.def(
        "features",
        [](const std::vector<double>& samples, double sample_rate, std::size_t window_len,
           std::size_t hop, const std::string& window) {
            SampledSignal signal;
            signal.samples = samples;
            signal.sample_rate = sample_rate;
            Spectrogram sp = stft_power(signal, window_len, hop, parse_window_kind(window));
            ObservationSequence obs = build_observations(sp);
            std::vector<std::size_t> degenerate;
            for (std::size_t t = 0; t < obs.degenerate.size(); ++t)
                if (obs.degenerate[t]) degenerate.push_back(t);
            return py::make_tuple(obs.frame_times, to_rows(obs.vectors), degenerate);
        },
        py::arg("samples"), py::arg("sample_rate"), py::arg("window_len"), py::arg("hop"),
        py::arg("window") = "hann",
        "Per-frame (energy, entropy, centroid); returns (times, rows, degenerate_frames).");

    m.def(
        "standardize",
        [](const Rows& rows) {
            auto [sobs, scaler] = standardize(obs_from_rows(rows));
            return py::make_tuple(to_rows(sobs.vectors), scaler.means, scaler.stds);
        },
        py::arg("rows"),
        "Column-wise zero-mean unit-variance map; returns (rows, means, stds).");

    m.def(
        "fit_gmm",
        [](const Rows& rows, std::size_t n_components, std::uint64_t seed, std::size_t restarts,
           std::size_t max_iter, double tol, bool diagonal) {
            GmmOptions opts;
            opts.restarts = restarts;
            opts.max_iter = max_iter;
            opts.tol = tol;
            opts.diagonal = diagonal;
            GmmFitResult fit = fit_gmm(obs_from_rows(rows), n_components, seed, opts);
            py::dict d;
            d["weights"] = fit.params.weights;
            d["means"] = to_rows(fit.params.means);
            std::vector<Rows> covs;
            for (const Matrix& c : fit.params.covariances) covs.push_back(to_rows(c));
            d["covariances"] = covs;
            d["loglik_trace"] = fit.loglik_trace;
            d["best_restart"] = fit.best_restart;
            return d;
        },
        py::arg("rows"), py::arg("n_components"), py::arg("seed") = 0, py::arg("restarts") = 5,
        py::arg("max_iter") = 200, py::arg("tol") = 1e-6, py::arg("diagonal") = false,
        "Full-covariance GMM fit with farthest-point seeding and restarts.");

    m.def(
        "forward_backward",
        [](const Rows& rows, const std::vector<double>& initial, const Rows& transition,
           const Rows& means, const std::vector<Rows>& covariances) {
            PosteriorSet ps = forward_backward(obs_from_rows(rows),
                                               params_from_py(initial, transition, means,
                                                              covariances));
            return py::make_tuple(ps.loglik, to_rows(ps.gamma));
        },
        py::arg("rows"), py::arg("initial"), py::arg("transition"), py::arg("means"),
        py::arg("covariances"),
        "Scaled forward-backward; returns (loglik, gamma).");

    m.def(
        "baum_welch",
        [](const Rows& rows, const std::vector<double>& initial, const Rows& transition,
           const Rows& means, const std::vector<Rows>& covariances, double tol,
           std::size_t max_iter, bool update_emissions) {
            BaumWelchOptions opts;
            opts.tol = tol;
            opts.max_iter = max_iter;
            opts.update_emissions = update_emissions;
            std::vector<std::string> warnings;
            BaumWelchResult res =
                baum_welch(obs_from_rows(rows),
                           params_from_py(initial, transition, means, covariances), opts,
                           &warnings);
            py::dict d = params_to_py(res.params);
            d["loglik_trace"] = res.loglik_trace;
            d["warnings"] = warnings;
            return d;
        },
        py::arg("rows"), py::arg("initial"), py::arg("transition"), py::arg("means"),
        py::arg("covariances"), py::arg("tol") = 1e-6, py::arg("max_iter") = 200,
        py::arg("update_emissions") = true,
        "Baum-Welch re-estimation from an explicit initialization.");

    m.def(
        "viterbi",
        [](const Rows& rows, const std::vector<double>& initial, const Rows& transition,
           const Rows& means, const std::vector<Rows>& covariances) {
            StatePath path = viterbi(obs_from_rows(rows),
                                     params_from_py(initial, transition, means, covariances));
            return py::make_tuple(path.states, path.log_joint);
        },
        py::arg("rows"), py::arg("initial"), py::arg("transition"), py::arg("means"),
        py::arg("covariances"),
        "Most probable state path; returns (states, log_joint).");

    m.def(
        "stationary",
        [](const Rows& transition) {
            return stationary_distribution(to_matrix(transition, "transition"));
        },
        py::arg("transition"),
        "Stationary distribution by power iteration (rows renormalized within 0.02).");

    m.def(
        "n_step",
        [](const Rows& transition, unsigned long long delta) {
            return to_rows(n_step_prediction(to_matrix(transition, "transition"), delta));
        },
        py::arg("transition"), py::arg("delta"),
        "Delta-step transition probabilities A^delta.");

    m.def(
        "alarm",
        [](const Rows& transition, std::size_t current_state, unsigned long long delta,
           double theta, std::size_t extinction_state) {
            AlarmResult a = instability_alarm(to_matrix(transition, "transition"), current_state,
                                              delta, theta, extinction_state);
            return py::make_tuple(a.probability, a.fired);
        },
        py::arg("transition"), py::arg("current_state"), py::arg("delta"), py::arg("theta"),
        py::arg("extinction_state"),
        "P(extinction within delta frames) with a strict threshold; returns (p, fired).");

    m.def(
        "temporal_metrics",
        [](const std::vector<int>& path, std::size_t n_states) {
            TemporalMetrics tm = temporal_metrics(path, n_states);
            py::dict d;
            d["average_state_persistence"] = tm.average_state_persistence;
            d["transition_entropy"] = tm.transition_entropy;
            d["mean_state_duration"] = tm.mean_state_duration;
            d["state_duration_variance"] = tm.state_duration_variance;
            d["transition_ratio"] = tm.transition_ratio;
            return d;
        },
        py::arg("path"), py::arg("n_states"),
        "Path-level switching statistics (entropy in nats).");

    m.def(
        "empirical_transition",
        [](const std::vector<int>& path, std::size_t n_states) {
            std::vector<std::size_t> unvisited;
            Matrix mat = empirical_transition_matrix(path, n_states, &unvisited);
            return py::make_tuple(to_rows(mat), unvisited);
        },
        py::arg("path"), py::arg("n_states"),
        "Row-normalized bigram counts; returns (matrix, unvisited_states).");

    m.def(
        "run_analysis",
        [](const std::string& config_path, const std::string& out_dir, py::object seed) {
            PipelineConfig cfg = load_config(config_path);
            if (!out_dir.empty()) cfg.out_dir = out_dir;
            if (!seed.is_none()) apply_seed_override(cfg, seed.cast<std::uint64_t>());
            RegimeReport rep = run_pipeline(cfg);
            py::dict d;
            d["out_dir"] = rep.config.out_dir;
            d["loglik"] = rep.loglik_trace.back();
            d["path"] = rep.path;
            d["state_labels"] = rep.model.params.state_labels;
            d["stationary"] = rep.stationary;
            d["model"] = params_to_py(rep.model.params);
            d["notices"] = rep.notices;
            return d;
        },
        py::arg("config_path"), py::arg("out_dir") = std::string(),
        py::arg("seed") = py::none(),
        "Run the full analysis pipeline from a config file; writes the report "
        "files and returns a summary.");
}
