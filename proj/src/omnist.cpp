#include "esnn/omnist.hpp"

#include <cstring>
#include <fstream>
#include <numeric>
#include <stdexcept>

namespace esnn::data {
namespace {

constexpr char kMagic[8] = {'O', 'M', 'N', 'I', 'S', 'T', '0', '1'};
constexpr std::uint32_t kVersion = 1;

template <typename T>
void put_le(std::ofstream& out, T v) {
  std::uint8_t b[sizeof(T)];
  for (std::size_t i = 0; i < sizeof(T); ++i)
    b[i] = std::uint8_t((static_cast<std::uint64_t>(v) >> (8 * i)) & 0xff);
  out.write(reinterpret_cast<const char*>(b), sizeof(T));
}

template <typename T>
T get_le(std::ifstream& in) {
  std::uint8_t b[sizeof(T)];
  in.read(reinterpret_cast<char*>(b), sizeof(T));
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i)
    v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
  return static_cast<T>(v);
}

}  // namespace

int occluder_depth(int frame_idx, const OmnistSpec& spec) {
  if (frame_idx < 0) throw std::invalid_argument("occluder_depth: negative idx");
  int d = 0;
  for (int i = 0; i < frame_idx; ++i) {
    if (d >= spec.occl_stop_at) break;
    d += (d >= spec.occl_slow_at) ? spec.occl_speed_slow : spec.occl_speed_fast;
    if (d > spec.occl_stop_at) d = spec.occl_stop_at;
  }
  return d;
}

Frame make_noise_frame(rng::engine& g, const OmnistSpec& spec) {
  Frame fr;
  fr.label = kNoiseLabel;
  fr.occl_depth = 0;
  fr.src_index = -1;
  // centred rectangle, floor alignment
  const int c0 = (28 - spec.noise_rect_w) / 2;
  const int r0 = (28 - spec.noise_rect_h) / 2;
  // partial Fisher-Yates for distinct candidate positions
  std::array<std::uint16_t, kFramePixels> pos;
  for (std::size_t i = 0; i < kFramePixels; ++i) pos[i] = std::uint16_t(i);
  for (int i = 0; i < spec.noise_candidates; ++i) {
    const std::size_t j =
        i + rng::uniform_below(g, kFramePixels - static_cast<std::size_t>(i));
    std::swap(pos[i], pos[j]);
    const int r = pos[i] / 28;
    const int c = pos[i] % 28;
    if (r >= r0 && r < r0 + spec.noise_rect_h && c >= c0 &&
        c < c0 + spec.noise_rect_w) {
      fr.pixels[pos[i]] = rng::uniform_byte(g);
    }
  }
  return fr;
}

std::vector<Frame> generate_omnist(const MnistSet& src, const OmnistSpec& spec) {
  if (src.rows != 28 || src.cols != 28)
    throw std::invalid_argument("generate_omnist: expects 28x28 sources");
  if (src.labels.size() != src.count)
    throw std::invalid_argument("generate_omnist: image/label count mismatch");
  std::vector<Frame> out;
  out.reserve(src.count * (static_cast<std::size_t>(spec.nf_max) +
                           static_cast<std::size_t>(spec.noise_frames)));
  for (std::size_t i = 0; i < src.count; ++i) {
    rng::engine g(rng::substream_seed(spec.seed, i));
    const int nf = static_cast<int>(rng::uniform_int(g, spec.nf_min, spec.nf_max));
    for (int fidx = 0; fidx < nf; ++fidx) {
      Frame fr;
      std::memcpy(fr.pixels.data(), src.image(i), kFramePixels);
      const int depth = occluder_depth(fidx, spec);
      std::memset(fr.pixels.data(), 0, static_cast<std::size_t>(depth) * 28);
      fr.label = src.labels[i];
      fr.occl_depth = static_cast<std::uint8_t>(depth);
      fr.src_index = static_cast<std::int32_t>(i);
      out.push_back(fr);
    }
    if (spec.noise_mode == NoiseMode::repeat) {
      const Frame noise = make_noise_frame(g, spec);
      for (int nidx = 0; nidx < spec.noise_frames; ++nidx) out.push_back(noise);
    } else {
      for (int nidx = 0; nidx < spec.noise_frames; ++nidx)
        out.push_back(make_noise_frame(g, spec));
    }
  }
  return out;
}

std::vector<Frame> sample_noise_frames(std::size_t count, std::uint64_t seed,
                                       const OmnistSpec& spec) {
  std::vector<Frame> out;
  out.reserve(count);
  rng::engine g(rng::splitmix64(seed));
  for (std::size_t i = 0; i < count; ++i) out.push_back(make_noise_frame(g, spec));
  return out;
}

void write_omnist(const std::string& path, const std::vector<Frame>& frames,
                  const OmnistSpec& spec, std::uint64_t source_count) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out.write(kMagic, 8);
  put_le(out, kVersion);
  put_le(out, static_cast<std::uint64_t>(frames.size()));
  put_le(out, source_count);
  put_le(out, static_cast<std::int32_t>(spec.nf_min));
  put_le(out, static_cast<std::int32_t>(spec.nf_max));
  put_le(out, static_cast<std::int32_t>(spec.occl_speed_fast));
  put_le(out, static_cast<std::int32_t>(spec.occl_slow_at));
  put_le(out, static_cast<std::int32_t>(spec.occl_speed_slow));
  put_le(out, static_cast<std::int32_t>(spec.occl_stop_at));
  put_le(out, static_cast<std::int32_t>(spec.noise_frames));
  put_le(out, static_cast<std::int32_t>(spec.noise_rect_w));
  put_le(out, static_cast<std::int32_t>(spec.noise_rect_h));
  put_le(out, static_cast<std::int32_t>(spec.noise_candidates));
  put_le(out, static_cast<std::uint8_t>(spec.noise_mode));
  put_le(out, spec.seed);
  for (const Frame& fr : frames) {
    out.write(reinterpret_cast<const char*>(fr.pixels.data()), kFramePixels);
    put_le(out, fr.label);
    put_le(out, fr.occl_depth);
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::vector<Frame> read_omnist(const std::string& path, OmnistSpec* spec_echo,
                               std::uint64_t* source_count) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  char magic[8];
  in.read(magic, 8);
  if (!in || std::memcmp(magic, kMagic, 8) != 0)
    throw std::runtime_error("not an OMNIST container: " + path);
  const auto version = get_le<std::uint32_t>(in);
  if (version != kVersion)
    throw std::runtime_error("unsupported OMNIST container version: " + path);
  const auto frame_count = get_le<std::uint64_t>(in);
  const auto sources = get_le<std::uint64_t>(in);
  OmnistSpec spec;
  spec.nf_min = get_le<std::int32_t>(in);
  spec.nf_max = get_le<std::int32_t>(in);
  spec.occl_speed_fast = get_le<std::int32_t>(in);
  spec.occl_slow_at = get_le<std::int32_t>(in);
  spec.occl_speed_slow = get_le<std::int32_t>(in);
  spec.occl_stop_at = get_le<std::int32_t>(in);
  spec.noise_frames = get_le<std::int32_t>(in);
  spec.noise_rect_w = get_le<std::int32_t>(in);
  spec.noise_rect_h = get_le<std::int32_t>(in);
  spec.noise_candidates = get_le<std::int32_t>(in);
  spec.noise_mode = static_cast<NoiseMode>(get_le<std::uint8_t>(in));
  spec.seed = get_le<std::uint64_t>(in);
  if (spec_echo) *spec_echo = spec;
  if (source_count) *source_count = sources;
  std::vector<Frame> frames(frame_count);
  for (auto& fr : frames) {
    in.read(reinterpret_cast<char*>(fr.pixels.data()), kFramePixels);
    fr.label = get_le<std::uint8_t>(in);
    fr.occl_depth = get_le<std::uint8_t>(in);
    fr.src_index = -1;
  }
  if (!in) throw std::runtime_error("OMNIST container truncated: " + path);
  return frames;
}

void write_omnist_csv(const std::string& path, const std::vector<Frame>& frames) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "frame_id,label,occl_depth,src_index\n";
  for (std::size_t i = 0; i < frames.size(); ++i) {
    out << i << ',' << int(frames[i].label) << ',' << int(frames[i].occl_depth)
        << ',' << frames[i].src_index << '\n';
  }
}

}  // namespace esnn::data
