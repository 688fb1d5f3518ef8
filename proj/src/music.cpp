#include "ioi/doa/music.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "ioi/angles.hpp"
#include "ioi/doa/fft.hpp"

namespace ioi::doa {
namespace {

std::vector<double> make_grid(double grid_step) {
  const int n = int(std::lround(360.0 / grid_step));
  std::vector<double> grid(n);
  for (int i = 0; i < n; ++i) grid[i] = -180.0 + i * grid_step;
  return grid;
}

std::vector<int> band_bins(const DoaConfig& cfg) {
  std::vector<int> bins;
  for (int k = 0; k <= cfg.fft_size / 2; ++k) {
    const double f = k * cfg.sample_rate / cfg.fft_size;
    if (f >= cfg.f_lo && f <= cfg.f_hi) bins.push_back(k);
  }
  if (bins.empty()) throw std::invalid_argument("doa: analysis band contains no FFT bins");
  return bins;
}

/// Steering vectors for every grid azimuth at one frequency, as columns.
Eigen::MatrixXcd steering_matrix(const MicArrayGeometry& array,
                                 const std::vector<double>& grid_deg,
                                 double freq_hz) {
  Eigen::MatrixXcd a(array.size(), grid_deg.size());
  for (std::size_t g = 0; g < grid_deg.size(); ++g) {
    a.col(g) = steering_vector(array, grid_deg[g], freq_hz);
  }
  return a;
}

/// The scan itself, shared by the cached engine and the one-shot entry point.
/// Bins are accumulated in ascending frequency order; keep it that way, the
/// event logs are expected to be reproducible bit for bit.
Pseudospectrum music_scan(const CovarianceSet& cov,
                          const std::vector<Eigen::MatrixXcd>& steering_per_bin,
                          const std::vector<double>& grid_deg, int n_sources) {
  const std::size_t n_grid = grid_deg.size();
  Eigen::ArrayXd acc = Eigen::ArrayXd::Zero(Eigen::Index(n_grid));

  for (std::size_t b = 0; b < cov.matrices.size(); ++b) {
    const Eigen::MatrixXcd& r = cov.matrices[b];
    if (!r.allFinite()) throw std::runtime_error("music: non-finite covariance");

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(r);
    if (eig.info() != Eigen::Success) {
      throw std::runtime_error("music: eigendecomposition failed");
    }
    // Eigen sorts eigenvalues ascending: the leading columns span the noise
    // subspace.
    const Eigen::Index m = r.rows();
    const Eigen::MatrixXcd noise = eig.eigenvectors().leftCols(m - n_sources);
    const Eigen::MatrixXcd proj = noise.adjoint() * steering_per_bin[b];
    const Eigen::ArrayXd denom =
        proj.colwise().squaredNorm().transpose().array().max(1e-12);
    acc += denom.inverse();
  }

  Pseudospectrum out;
  out.grid_deg = grid_deg;
  out.values.resize(n_grid);
  const double scale = 1.0 / double(cov.matrices.size());
  for (std::size_t g = 0; g < n_grid; ++g) out.values[g] = acc[Eigen::Index(g)] * scale;
  return out;
}

}  // namespace

Eigen::VectorXcd steering_vector(const MicArrayGeometry& array, double azimuth_deg,
                                 double freq_hz) {
  if (!(freq_hz > 0.0)) throw std::invalid_argument("steering_vector: freq must be > 0");
  const double rad = deg_to_rad(azimuth_deg);
  const Eigen::Vector2d u(std::cos(rad), std::sin(rad));
  const std::size_t m = array.size();
  Eigen::VectorXcd v(m);
  const double norm = 1.0 / std::sqrt(double(m));
  for (std::size_t i = 0; i < m; ++i) {
    const double tau = -array.mic_positions[i].dot(u) / array.speed_of_sound;
    const double phase = -2.0 * kPi * freq_hz * tau;
    v[Eigen::Index(i)] = std::polar(norm, phase);
  }
  return v;
}

CovarianceSet compute_covariance(const Eigen::MatrixXd& window,
                                 const MicArrayGeometry& array,
                                 const DoaConfig& config) {
  const Eigen::Index m = window.rows();
  const Eigen::Index n = window.cols();
  if (m != Eigen::Index(array.size())) {
    throw std::invalid_argument("compute_covariance: channel count != mic count");
  }
  if (n < config.fft_size) {
    throw std::invalid_argument("compute_covariance: window shorter than fft_size");
  }

  const int fft = config.fft_size;
  const int snapshots = int((n - fft) / config.hop) + 1;
  const std::vector<int> bins = band_bins(config);

  Eigen::VectorXd hann(fft);
  for (int i = 0; i < fft; ++i) {
    hann[i] = 0.5 - 0.5 * std::cos(2.0 * kPi * i / fft);
  }

  CovarianceSet out;
  out.snapshots = snapshots;
  out.freqs_hz.reserve(bins.size());
  for (int k : bins) out.freqs_hz.push_back(k * config.sample_rate / fft);
  out.matrices.assign(bins.size(), Eigen::MatrixXcd::Zero(m, m));

  Eigen::VectorXcd snapshot(m);
  std::vector<Eigen::VectorXcd> spectra(static_cast<std::size_t>(m));
  for (int k = 0; k < snapshots; ++k) {
    const int start = k * config.hop;
    for (Eigen::Index ch = 0; ch < m; ++ch) {
      const Eigen::VectorXd seg =
          window.row(ch).segment(start, fft).transpose().cwiseProduct(hann);
      spectra[size_t(ch)] = rfft(seg);
    }
    for (std::size_t b = 0; b < bins.size(); ++b) {
      for (Eigen::Index ch = 0; ch < m; ++ch) snapshot[ch] = spectra[size_t(ch)][bins[b]];
      out.matrices[b].noalias() += snapshot * snapshot.adjoint();
    }
  }
  for (auto& r : out.matrices) {
    r /= double(snapshots);
    r = ((r + r.adjoint()) / 2.0).eval();  // exact Hermitian symmetry
  }
  return out;
}

Pseudospectrum music_pseudospectrum(const CovarianceSet& covariances,
                                    const MicArrayGeometry& array,
                                    const DoaConfig& config) {
  if (covariances.matrices.empty()) {
    throw std::invalid_argument("music_pseudospectrum: empty covariance set");
  }
  const std::vector<double> grid = make_grid(config.grid_step);
  std::vector<Eigen::MatrixXcd> steering;
  steering.reserve(covariances.freqs_hz.size());
  for (double f : covariances.freqs_hz) {
    steering.push_back(steering_matrix(array, grid, f));
  }
  return music_scan(covariances, steering, grid, config.n_sources);
}

std::vector<SoundSourceEstimate> detect_sources(const Pseudospectrum& spectrum,
                                                const DoaConfig& config,
                                                Timestamp now) {
  const std::size_t n = spectrum.values.size();
  if (n < 3) return {};

  std::vector<double> sorted = spectrum.values;
  std::sort(sorted.begin(), sorted.end());
  const double median = (n % 2 == 1)
                            ? sorted[n / 2]
                            : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
  const double floor_value = config.peak_threshold * median;

  // Walk maximal runs of equal values around the circle; a run flanked by
  // two strictly smaller values is one local maximum.
  std::size_t start = n;  // first index whose value differs from its predecessor
  for (std::size_t i = 0; i < n; ++i) {
    if (spectrum.values[i] != spectrum.values[(i + n - 1) % n]) {
      start = i;
      break;
    }
  }
  if (start == n) return {};  // flat spectrum

  struct Peak {
    double azimuth;
    double value;
  };
  std::vector<Peak> peaks;

  std::size_t i = start;
  do {
    const double value = spectrum.values[i];
    std::size_t len = 1;
    while (len < n && spectrum.values[(i + len) % n] == value) ++len;
    const double prev = spectrum.values[(i + n - 1) % n];
    const double next = spectrum.values[(i + len) % n];
    if (value > prev && value > next && value >= floor_value) {
      double azimuth = spectrum.grid_deg[i];
      for (std::size_t k = 1; k < len; ++k) {
        azimuth = std::min(azimuth, spectrum.grid_deg[(i + k) % n]);
      }
      peaks.push_back({azimuth, value});
    }
    i = (i + len) % n;
  } while (i != start);

  std::sort(peaks.begin(), peaks.end(), [](const Peak& a, const Peak& b) {
    if (a.value != b.value) return a.value > b.value;
    return a.azimuth < b.azimuth;
  });
  if (peaks.size() > std::size_t(config.n_sources)) peaks.resize(std::size_t(config.n_sources));

  std::vector<SoundSourceEstimate> out;
  out.reserve(peaks.size());
  for (const Peak& p : peaks) {
    out.push_back({direction_from_azimuth(p.azimuth), p.value, now});
  }
  return out;
}

DoaEngine::DoaEngine(MicArrayGeometry array, DoaConfig config)
    : array_(std::move(array)), config_(config), grid_deg_(make_grid(config.grid_step)),
      band_bins_(band_bins(config)) {
  steering_.reserve(band_bins_.size());
  for (int k : band_bins_) {
    const double f = k * config_.sample_rate / config_.fft_size;
    steering_.push_back(steering_matrix(array_, grid_deg_, f));
  }
}

std::vector<SoundSourceEstimate> DoaEngine::process(const Eigen::MatrixXd& window,
                                                    Timestamp now) {
  const CovarianceSet cov = compute_covariance(window, array_, config_);
  spectrum_ = music_scan(cov, steering_, grid_deg_, config_.n_sources);
  return detect_sources(spectrum_, config_, now);
}

}  // namespace ioi::doa
