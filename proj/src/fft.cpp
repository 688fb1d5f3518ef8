#include "ioi/doa/fft.hpp"

#include <mutex>
#include <stdexcept>

#include <fftw3.h>

namespace ioi::doa {
namespace {

// The FFTW planner is not thread-safe; plan creation/destruction is serialized.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

Eigen::VectorXcd rfft(const Eigen::VectorXd& input) {
  const int n = int(input.size());
  if (n < 2) throw std::invalid_argument("rfft: input too short");

  std::vector<double> in(input.data(), input.data() + n);
  Eigen::VectorXcd out(n / 2 + 1);

  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    plan = fftw_plan_dft_r2c_1d(n, in.data(),
                                reinterpret_cast<fftw_complex*>(out.data()),
                                FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
  return out;
}

Eigen::VectorXd irfft(const Eigen::VectorXcd& half_spectrum, int n) {
  if (half_spectrum.size() != n / 2 + 1) {
    throw std::invalid_argument("irfft: spectrum size does not match n");
  }
  Eigen::VectorXcd scratch = half_spectrum;  // FFTW c2r destroys its input
  Eigen::VectorXd out(n);

  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    plan = fftw_plan_dft_c2r_1d(n, reinterpret_cast<fftw_complex*>(scratch.data()),
                                out.data(), FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
  return out / double(n);
}

}  // namespace ioi::doa
