#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace ioi::doa {

/// Forward real-to-complex FFT. Returns n/2 + 1 bins (unscaled).
Eigen::VectorXcd rfft(const Eigen::VectorXd& input);

/// Inverse complex-to-real FFT for a half spectrum of n/2 + 1 bins.
/// Scales by 1/n so irfft(rfft(x)) == x.
Eigen::VectorXd irfft(const Eigen::VectorXcd& half_spectrum, int n);

}  // namespace ioi::doa
