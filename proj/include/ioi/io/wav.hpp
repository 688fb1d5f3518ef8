#pragma once

#include <string>

#include <Eigen/Dense>

namespace ioi::io {

/// Multichannel audio as rows = channels, columns = samples, values in [-1, 1].
struct WavData {
  double sample_rate = 0.0;
  Eigen::MatrixXd samples;
};

/// Reads a RIFF/WAVE file (PCM 16-bit only). Throws std::runtime_error on
/// malformed or unsupported files.
WavData read_wav(const std::string& path);

/// Writes PCM 16-bit. Values outside [-1, 1] are clipped.
void write_wav(const std::string& path, const WavData& data);

}  // namespace ioi::io
