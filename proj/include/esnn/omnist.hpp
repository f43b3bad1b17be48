#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "esnn/idx.hpp"
#include "esnn/rng.hpp"

// Procedural occluded-digit video: per source digit, n_f progressively
// occluded frames followed by a block of noise frames. Generation is a pure
// function of (source images, spec); every digit subsequence draws from its
// own substream so subsequences could be produced in parallel and
// concatenated in source order.
namespace esnn::data {

inline constexpr int kNoiseLabel = 10;
inline constexpr std::size_t kFramePixels = 784;

struct Frame {
  std::array<std::uint8_t, kFramePixels> pixels{};
  std::uint8_t label = 0;       // 0-9 digit, 10 noise
  std::uint8_t occl_depth = 0;  // rows of the image covered from the top
  std::int32_t src_index = -1;  // source image index, -1 for noise frames
};

enum class NoiseMode : std::uint8_t { independent = 0, repeat = 1 };

struct OmnistSpec {
  int nf_min = 11;
  int nf_max = 14;
  int occl_speed_fast = 3;  // px/frame until...
  int occl_slow_at = 18;    // ...this depth, then
  int occl_speed_slow = 1;  // px/frame until...
  int occl_stop_at = 19;    // ...it stops
  int noise_frames = 4;
  int noise_rect_w = 15;
  int noise_rect_h = 12;
  int noise_candidates = 200;
  NoiseMode noise_mode = NoiseMode::independent;
  std::uint64_t seed = 1;
};

// Depth of the occluder inside the image at the given 0-based frame index of
// a digit subsequence; frame 0 is unoccluded.
int occluder_depth(int frame_idx, const OmnistSpec& spec = {});

// noise_candidates positions drawn without replacement, those outside the
// centred noise rectangle discarded, survivors filled with uniform bytes
Frame make_noise_frame(rng::engine& g, const OmnistSpec& spec = {});

std::vector<Frame> generate_omnist(const MnistSet& src, const OmnistSpec& spec);

// Standalone noise sampler (training-set augmentation hook).
std::vector<Frame> sample_noise_frames(std::size_t count, std::uint64_t seed,
                                       const OmnistSpec& spec = {});

// Container: "OMNIST01" magic, version, counts and spec echo (little-endian),
// then per-frame records of 784 pixel bytes + label byte + occl_depth byte.
void write_omnist(const std::string& path, const std::vector<Frame>& frames,
                  const OmnistSpec& spec, std::uint64_t source_count);
std::vector<Frame> read_omnist(const std::string& path,
                               OmnistSpec* spec_echo = nullptr,
                               std::uint64_t* source_count = nullptr);

void write_omnist_csv(const std::string& path, const std::vector<Frame>& frames);

}  // namespace esnn::data
