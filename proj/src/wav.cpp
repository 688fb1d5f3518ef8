#include "ioi/io/wav.hpp"

#include <algorithm>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <vector>

namespace ioi::io {
namespace {

[[noreturn]] void fail(const std::string& what) {
  throw std::runtime_error("wav: " + what);
}

uint32_t read_u32(std::istream& in) {
  unsigned char b[4];
  in.read(reinterpret_cast<char*>(b), 4);
  if (!in) fail("truncated file");
  return b[0] | (b[1] << 8) | (b[2] << 16) | (uint32_t(b[3]) << 24);
}

uint16_t read_u16(std::istream& in) {
  unsigned char b[2];
  in.read(reinterpret_cast<char*>(b), 2);
  if (!in) fail("truncated file");
  return b[0] | (b[1] << 8);
}

void write_u32(std::ostream& out, uint32_t v) {
  const char b[4] = {char(v & 0xff), char((v >> 8) & 0xff), char((v >> 16) & 0xff),
                     char((v >> 24) & 0xff)};
  out.write(b, 4);
}

void write_u16(std::ostream& out, uint16_t v) {
  const char b[2] = {char(v & 0xff), char((v >> 8) & 0xff)};
  out.write(b, 2);
}

}  // namespace

WavData read_wav(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open '" + path + "'");

  char tag[4];
  in.read(tag, 4);
  if (!in || std::memcmp(tag, "RIFF", 4) != 0) fail("not a RIFF file");
  read_u32(in);  // riff size
  in.read(tag, 4);
  if (!in || std::memcmp(tag, "WAVE", 4) != 0) fail("not a WAVE file");

  uint16_t channels = 0, bits = 0, format = 0;
  uint32_t sample_rate = 0;
  bool have_fmt = false;
  std::vector<int16_t> pcm;

  while (in.read(tag, 4)) {
    const uint32_t size = read_u32(in);
    if (std::memcmp(tag, "fmt ", 4) == 0) {
      format = read_u16(in);
      channels = read_u16(in);
      sample_rate = read_u32(in);
      read_u32(in);  // byte rate
      read_u16(in);  // block align
      bits = read_u16(in);
      if (size > 16) in.seekg(size - 16, std::ios::cur);
      have_fmt = true;
    } else if (std::memcmp(tag, "data", 4) == 0) {
      if (!have_fmt) fail("data chunk before fmt chunk");
      if (format != 1 || bits != 16) fail("only PCM 16-bit supported");
      if (channels == 0) fail("zero channels");
      pcm.resize(size / 2);
      in.read(reinterpret_cast<char*>(pcm.data()), size_t(pcm.size()) * 2);
      if (!in) fail("truncated data chunk");
      break;
    } else {
      in.seekg(size + (size & 1), std::ios::cur);  // chunks are word-aligned
    }
  }
  if (pcm.empty()) fail("no data chunk");

  const Eigen::Index frames = Eigen::Index(pcm.size() / channels);
  WavData out;
  out.sample_rate = sample_rate;
  out.samples.resize(channels, frames);
  for (Eigen::Index n = 0; n < frames; ++n) {
    for (int c = 0; c < channels; ++c) {
      out.samples(c, n) = pcm[size_t(n) * channels + c] / 32768.0;
    }
  }
  return out;
}

void write_wav(const std::string& path, const WavData& data) {
  const int channels = int(data.samples.rows());
  const Eigen::Index frames = data.samples.cols();
  if (channels == 0 || frames == 0) fail("empty audio");
  if (!(data.sample_rate > 0.0)) fail("invalid sample rate");

  std::ofstream out(path, std::ios::binary);
  if (!out) fail("cannot open '" + path + "' for writing");

  const uint32_t data_bytes = uint32_t(frames) * channels * 2;
  const uint32_t rate = uint32_t(data.sample_rate);
  out.write("RIFF", 4);
  write_u32(out, 36 + data_bytes);
  out.write("WAVE", 4);
  out.write("fmt ", 4);
  write_u32(out, 16);
  write_u16(out, 1);  // PCM
  write_u16(out, uint16_t(channels));
  write_u32(out, rate);
  write_u32(out, rate * channels * 2);
  write_u16(out, uint16_t(channels * 2));
  write_u16(out, 16);
  out.write("data", 4);
  write_u32(out, data_bytes);

  for (Eigen::Index n = 0; n < frames; ++n) {
    for (int c = 0; c < channels; ++c) {
      const double v = std::clamp(data.samples(c, n), -1.0, 1.0);
      const long s = std::clamp(std::lrint(v * 32768.0), -32768L, 32767L);
      write_u16(out, uint16_t(int16_t(s)));
    }
  }
  if (!out) fail("write failed");
}

}  // namespace ioi::io
