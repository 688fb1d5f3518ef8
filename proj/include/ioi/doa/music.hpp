#pragma once

#include <vector>

#include <Eigen/Dense>

#include "ioi/config.hpp"
#include "ioi/types.hpp"

namespace ioi::doa {

/// Per-bin narrowband snapshot covariances for the analysis band.
struct CovarianceSet {
  std::vector<double> freqs_hz;           // bin center frequencies, ascending
  std::vector<Eigen::MatrixXcd> matrices; // one Hermitian M x M matrix per bin
  int snapshots = 0;                      // K, hop-shifted snapshots averaged
};

/// The MUSIC scan function over candidate bearings. Peaks carry the meaning,
/// not absolute values.
struct Pseudospectrum {
  std::vector<double> grid_deg;  // uniform, covering [-180, 180)
  std::vector<double> values;    // finite, >= 0, one per grid point
};

/// Far-field plane-wave steering vector: entry m is
/// exp(-j 2 pi f tau_m) / sqrt(M) with tau_m = -(p_m . u(azimuth)) / c.
/// Unit norm by construction.
Eigen::VectorXcd steering_vector(const MicArrayGeometry& array, double azimuth_deg,
                                 double freq_hz);

/// Hann-windowed snapshot covariances, R_f = (1/K) sum_k x_k(f) x_k(f)^H,
/// for every FFT bin inside [f_lo, f_hi]. window is channels x samples and
/// must be at least fft_size long; throws std::invalid_argument otherwise.
CovarianceSet compute_covariance(const Eigen::MatrixXd& window,
                                 const MicArrayGeometry& array,
                                 const DoaConfig& config);

/// Per bin: eigendecompose R_f, take the M - n_sources smallest-eigenvalue
/// eigenvectors as the noise subspace E_n, and score
/// P_f(theta) = 1 / ||E_n^H a(theta, f)||^2. The output is the mean over
/// bins, accumulated in ascending bin order so results are reproducible.
Pseudospectrum music_pseudospectrum(const CovarianceSet& covariances,
                                    const MicArrayGeometry& array,
                                    const DoaConfig& config);

/// Circular local maxima at or above peak_threshold x median(values), sorted
/// by descending value and truncated to n_sources. A plateau of equal
/// adjacent maxima yields its lowest-azimuth grid point.
std::vector<SoundSourceEstimate> detect_sources(const Pseudospectrum& spectrum,
                                                const DoaConfig& config,
                                                Timestamp now);

/// The full per-frame estimator with steering vectors cached per (bin, grid
/// point). Pure function of its inputs once built; one instance per pipeline.
class DoaEngine {
 public:
  DoaEngine(MicArrayGeometry array, DoaConfig config);

  const Pseudospectrum& last_spectrum() const { return spectrum_; }

  std::vector<SoundSourceEstimate> process(const Eigen::MatrixXd& window,
                                           Timestamp now);

 private:
  MicArrayGeometry array_;
  DoaConfig config_;
  std::vector<double> grid_deg_;
  std::vector<int> band_bins_;
  std::vector<Eigen::MatrixXcd> steering_;  // per band bin: M x grid matrix
  Pseudospectrum spectrum_;

  friend Pseudospectrum music_pseudospectrum(const CovarianceSet&,
                                             const MicArrayGeometry&,
                                             const DoaConfig&);
};

}  // namespace ioi::doa
