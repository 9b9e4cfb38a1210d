#pragma once

#include "juliadiff/cover.hpp"

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace juliadiff {

using Rgb = std::array<std::uint8_t, 3>;

/// Fixed palette shared by all renders.
namespace palette {
inline constexpr Rgb background{255, 255, 255};
inline constexpr Rgb axes{160, 160, 160};
inline constexpr Rgb domain{40, 40, 40};
inline constexpr Rgb cover_outline{0, 70, 200};
inline constexpr Rgb difference_fill{255, 215, 205};
}  // namespace palette

/// RGB raster over the square window [-half_extent, half_extent]^2.
class Canvas {
public:
    Canvas(std::size_t size, double half_extent);

    std::size_t size() const noexcept { return size_; }
    void fill_disk(const Disk& disk, Rgb color);
    void outline_disk(const Disk& disk, Rgb color);
    void draw_axes(Rgb color);
    void write_ppm(std::ostream& out) const;

private:
    void plot(std::ptrdiff_t col, std::ptrdiff_t row, Rgb color);
    double to_pixel(double coordinate) const noexcept;

    std::size_t size_;
    double half_extent_;
    std::vector<std::uint8_t> pixels_;
};

/// The domain disk D with every piece disk outlined.
Canvas render_cover(const Parameter& p, std::span<const PieceCover> pieces, std::size_t size);

/// The difference-disk cover filled at low intensity, with the origin axes.
Canvas render_difference(std::span<const Disk> cover, std::size_t size);

}  // namespace juliadiff
