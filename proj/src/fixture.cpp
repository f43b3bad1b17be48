#include "esnn/fixture.hpp"

#include <algorithm>
#include <cmath>

#include "esnn/rng.hpp"

namespace esnn::data {
namespace {

constexpr int kGlyphW = 8;
constexpr int kGlyphH = 12;

// clang-format off
const char* const kGlyphs[10][kGlyphH] = {
  {"..####..",".##..##.","##....##","##....##","##....##","##....##",
   "##....##","##....##","##....##",".##..##.","..####..","........"},
  {"...##...","..###...",".####...","...##...","...##...","...##...",
   "...##...","...##...","...##...","...##...",".######.","........"},
  {"..####..",".##..##.","##....##","......##",".....##.","....##..",
   "...##...","..##....",".##.....","##......","########","........"},
  {"..####..",".##..##.","......##","......##","...###..","...###..",
   "......##","......##","......##",".##..##.","..####..","........"},
  {"....##..","...###..","..####..",".##.##..","##..##..","##..##..",
   "########","....##..","....##..","....##..","....##..","........"},
  {"########","##......","##......","##......","######..",".....##.",
   "......##","......##","......##",".##..##.","..####..","........"},
  {"..####..",".##..##.","##......","##......","######..","##...##.",
   "##....##","##....##","##....##",".##..##.","..####..","........"},
  {"########","......##",".....##.",".....##.","....##..","....##..",
   "...##...","...##...","..##....","..##....","..##....","........"},
  {"..####..",".##..##.","##....##",".##..##.","..####..",".##..##.",
   "##....##","##....##","##....##",".##..##.","..####..","........"},
  {"..####..",".##..##.","##....##","##....##","##...##.",".######.",
   "......##","......##","......##",".##..##.","..####..","........"},
};
// clang-format on

double glyph_at(int digit, double u, double v) {
  // bilinear sample with zero padding outside the glyph box
  const int u0 = static_cast<int>(std::floor(u));
  const int v0 = static_cast<int>(std::floor(v));
  const double fu = u - u0;
  const double fv = v - v0;
  auto texel = [digit](int x, int y) -> double {
    if (x < 0 || x >= kGlyphW || y < 0 || y >= kGlyphH) return 0.0;
    return kGlyphs[digit][y][x] == '#' ? 1.0 : 0.0;
  };
  return texel(u0, v0) * (1 - fu) * (1 - fv) + texel(u0 + 1, v0) * fu * (1 - fv) +
         texel(u0, v0 + 1) * (1 - fu) * fv + texel(u0 + 1, v0 + 1) * fu * fv;
}

void render_digit(std::uint8_t* out, int digit, rng::engine& g) {
  const double rot = rng::uniform_range(g, -0.22, 0.22);
  const double shear = rng::uniform_range(g, -0.18, 0.18);
  const double sx = rng::uniform_range(g, 0.80, 1.10);
  const double sy = rng::uniform_range(g, 0.80, 1.10);
  const double tx = rng::uniform_range(g, -1.8, 1.8);
  const double ty = rng::uniform_range(g, -1.8, 1.8);
  const double peak = rng::uniform_range(g, 160.0, 255.0);
  const double thick = rng::uniform_range(g, 0.12, 0.42);  // lower = thicker
  const double cosr = std::cos(rot), sinr = std::sin(rot);
  // output pixels per glyph cell
  const double cell_y = 20.0 * sy / kGlyphH;
  const double cell_x = 13.5 * sx / kGlyphW;
  for (int y = 0; y < 28; ++y) {
    for (int x = 0; x < 28; ++x) {
      // inverse map: untranslate, unrotate, unshear, unscale
      const double dx = x - 13.5 - tx;
      const double dy = y - 13.5 - ty;
      double px = cosr * dx + sinr * dy;
      double py = -sinr * dx + cosr * dy;
      px -= shear * py;
      const double u = px / cell_x + kGlyphW / 2.0 - 0.5;
      const double v = py / cell_y + kGlyphH / 2.0 - 0.5;
      double s = glyph_at(digit, u, v);
      s = std::clamp((s - thick) / (1.0 - thick), 0.0, 1.0);
      double val = peak * std::pow(s, 0.7);
      if (val > 0.0) val += rng::uniform_range(g, -14.0, 14.0);
      const int q = static_cast<int>(std::clamp(val, 0.0, 255.0));
      out[y * 28 + x] = static_cast<std::uint8_t>(q < 25 ? 0 : q);
    }
  }
}

}  // namespace

MnistSet make_synthetic_digits(std::size_t count, std::uint64_t seed) {
  MnistSet set;
  set.count = count;
  set.rows = 28;
  set.cols = 28;
  set.pixels.resize(count * 784);
  set.labels.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    rng::engine g(rng::substream_seed(seed, i));
    const int digit = static_cast<int>(rng::uniform_int(g, 0, 9));
    set.labels[i] = static_cast<std::uint8_t>(digit);
    render_digit(set.pixels.data() + i * 784, digit, g);
  }
  return set;
}

}  // namespace esnn::data
