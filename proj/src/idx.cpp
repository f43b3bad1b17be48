#include "esnn/idx.hpp"

#include <zlib.h>

#include <cstdio>
#include <cstring>
#include <fstream>

namespace esnn::data {
namespace {

std::vector<std::uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IdxError(IdxError::Code::io, "cannot open " + path);
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  return bytes;
}

std::vector<std::uint8_t> gunzip(const std::vector<std::uint8_t>& in,
                                 const std::string& path) {
  z_stream zs{};
  if (inflateInit2(&zs, 16 + MAX_WBITS) != Z_OK)
    throw IdxError(IdxError::Code::io, "zlib init failed for " + path);
  std::vector<std::uint8_t> out;
  out.reserve(in.size() * 4);
  std::uint8_t buf[1 << 16];
  zs.next_in = const_cast<Bytef*>(in.data());
  zs.avail_in = static_cast<uInt>(in.size());
  int rc = Z_OK;
  while (rc != Z_STREAM_END) {
    zs.next_out = buf;
    zs.avail_out = sizeof(buf);
    rc = inflate(&zs, Z_NO_FLUSH);
    if (rc != Z_OK && rc != Z_STREAM_END) {
      inflateEnd(&zs);
      throw IdxError(IdxError::Code::truncated, "corrupt gzip stream: " + path);
    }
    out.insert(out.end(), buf, buf + (sizeof(buf) - zs.avail_out));
  }
  inflateEnd(&zs);
  return out;
}

std::vector<std::uint8_t> load_maybe_gz(const std::string& path) {
  auto bytes = read_file(path);
  if (bytes.size() >= 2 && bytes[0] == 0x1f && bytes[1] == 0x8b)
    return gunzip(bytes, path);
  return bytes;
}

std::uint32_t be32(const std::uint8_t* p) {
  return (std::uint32_t(p[0]) << 24) | (std::uint32_t(p[1]) << 16) |
         (std::uint32_t(p[2]) << 8) | std::uint32_t(p[3]);
}

void put_be32(std::ofstream& out, std::uint32_t v) {
  const std::uint8_t b[4] = {std::uint8_t(v >> 24), std::uint8_t(v >> 16),
                             std::uint8_t(v >> 8), std::uint8_t(v)};
  out.write(reinterpret_cast<const char*>(b), 4);
}

}  // namespace

std::vector<std::uint8_t> read_idx_images(const std::string& path,
                                          std::size_t& count, std::size_t& rows,
                                          std::size_t& cols) {
  auto bytes = load_maybe_gz(path);
  if (bytes.size() < 16)
    throw IdxError(IdxError::Code::truncated, "idx header truncated: " + path);
  if (be32(bytes.data()) != 0x00000803u)
    throw IdxError(IdxError::Code::bad_magic,
                   "not an idx3 image file (bad magic): " + path);
  count = be32(bytes.data() + 4);
  rows = be32(bytes.data() + 8);
  cols = be32(bytes.data() + 12);
  const std::size_t need = 16 + count * rows * cols;
  if (bytes.size() < need)
    throw IdxError(IdxError::Code::truncated, "idx image data truncated: " + path);
  return {bytes.begin() + 16, bytes.begin() + static_cast<long>(need)};
}

std::vector<std::uint8_t> read_idx_labels(const std::string& path,
                                          std::size_t& count) {
  auto bytes = load_maybe_gz(path);
  if (bytes.size() < 8)
    throw IdxError(IdxError::Code::truncated, "idx header truncated: " + path);
  if (be32(bytes.data()) != 0x00000801u)
    throw IdxError(IdxError::Code::bad_magic,
                   "not an idx1 label file (bad magic): " + path);
  count = be32(bytes.data() + 4);
  if (bytes.size() < 8 + count)
    throw IdxError(IdxError::Code::truncated, "idx label data truncated: " + path);
  return {bytes.begin() + 8, bytes.begin() + 8 + static_cast<long>(count)};
}

MnistSet read_mnist(const std::string& images_path,
                    const std::string& labels_path) {
  MnistSet set;
  set.pixels = read_idx_images(images_path, set.count, set.rows, set.cols);
  std::size_t label_count = 0;
  set.labels = read_idx_labels(labels_path, label_count);
  if (label_count != set.count)
    throw IdxError(IdxError::Code::count_mismatch,
                   "image/label count mismatch: " + images_path);
  return set;
}

void write_idx_images(const std::string& path,
                      const std::vector<std::uint8_t>& pixels,
                      std::size_t count, std::size_t rows, std::size_t cols) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IdxError(IdxError::Code::io, "cannot write " + path);
  put_be32(out, 0x00000803u);
  put_be32(out, static_cast<std::uint32_t>(count));
  put_be32(out, static_cast<std::uint32_t>(rows));
  put_be32(out, static_cast<std::uint32_t>(cols));
  out.write(reinterpret_cast<const char*>(pixels.data()),
            static_cast<long>(pixels.size()));
}

void write_idx_labels(const std::string& path,
                      const std::vector<std::uint8_t>& labels) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IdxError(IdxError::Code::io, "cannot write " + path);
  put_be32(out, 0x00000801u);
  put_be32(out, static_cast<std::uint32_t>(labels.size()));
  out.write(reinterpret_cast<const char*>(labels.data()),
            static_cast<long>(labels.size()));
}

}  // namespace esnn::data
