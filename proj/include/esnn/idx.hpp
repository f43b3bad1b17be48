#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace esnn::data {

// Distinct failure modes of the IDX container, surfaced separately so the
// CLI can map them to exit codes and messages.
class IdxError : public std::runtime_error {
 public:
  enum class Code { io, bad_magic, truncated, count_mismatch };
  IdxError(Code code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

struct MnistSet {
  std::size_t count = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint8_t> pixels;  // count * rows * cols
  std::vector<std::uint8_t> labels;  // count

  const std::uint8_t* image(std::size_t i) const {
    return pixels.data() + i * rows * cols;
  }
};

// Big-endian IDX files; magic 0x00000803 for image tensors, 0x00000801 for
// labels. Transparently inflates gzip-compressed files.
MnistSet read_mnist(const std::string& images_path,
                    const std::string& labels_path);

std::vector<std::uint8_t> read_idx_images(const std::string& path,
                                          std::size_t& count, std::size_t& rows,
                                          std::size_t& cols);
std::vector<std::uint8_t> read_idx_labels(const std::string& path,
                                          std::size_t& count);

void write_idx_images(const std::string& path,
                      const std::vector<std::uint8_t>& pixels,
                      std::size_t count, std::size_t rows, std::size_t cols);
void write_idx_labels(const std::string& path,
                      const std::vector<std::uint8_t>& labels);

}  // namespace esnn::data
