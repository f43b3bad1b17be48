#pragma once

#include <cstdint>

#include "esnn/idx.hpp"

namespace esnn::data {

// Deterministic synthetic handwritten-style digits in the MNIST container
// layout (28x28, intensities 0-255, labels 0-9). Each image is a glyph
// rendered under a random affine transform with stroke-thickness, intensity
// and speckle variation; image i depends only on (seed, i).
MnistSet make_synthetic_digits(std::size_t count, std::uint64_t seed);

}  // namespace esnn::data
