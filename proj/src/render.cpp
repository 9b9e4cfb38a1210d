#include "juliadiff/render.hpp"

#include "juliadiff/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>

namespace juliadiff {

Canvas::Canvas(std::size_t size, double half_extent)
    : size_(size), half_extent_(half_extent), pixels_(size * size * 3)
{
    if (size < 16 || size > 8192) throw DomainError("image size must lie in [16, 8192]");
    if (!(half_extent > 0.0)) throw DomainError("render window must have positive extent");
    for (std::size_t k = 0; k < size * size; ++k) std::copy(palette::background.begin(), palette::background.end(), pixels_.begin() + 3 * k);
}

double Canvas::to_pixel(double coordinate) const noexcept
{
    return (coordinate + half_extent_) / (2.0 * half_extent_) * static_cast<double>(size_);
}

void Canvas::plot(std::ptrdiff_t col, std::ptrdiff_t row, Rgb color)
{
    const auto n = static_cast<std::ptrdiff_t>(size_);
    if (col < 0 || row < 0 || col >= n || row >= n) return;
    // Image row 0 is the top of the window.
    const auto offset = 3 * (static_cast<std::size_t>(n - 1 - row) * size_ + static_cast<std::size_t>(col));
    std::copy(color.begin(), color.end(), pixels_.begin() + static_cast<std::ptrdiff_t>(offset));
}

void Canvas::fill_disk(const Disk& disk, Rgb color)
{
    const double scale = static_cast<double>(size_) / (2.0 * half_extent_);
    const double cx = to_pixel(disk.center.real());
    const double cy = to_pixel(disk.center.imag());
    const double r = std::max(disk.radius * scale, 0.5);
    const auto lo = static_cast<std::ptrdiff_t>(std::floor(cy - r));
    const auto hi = static_cast<std::ptrdiff_t>(std::ceil(cy + r));
    for (std::ptrdiff_t row = lo; row <= hi; ++row) {
        const double dy = static_cast<double>(row) + 0.5 - cy;
        if (std::abs(dy) > r) continue;
        const double half = std::sqrt(r * r - dy * dy);
        const auto a = static_cast<std::ptrdiff_t>(std::ceil(cx - half - 0.5));
        const auto b = static_cast<std::ptrdiff_t>(std::floor(cx + half - 0.5));
        for (std::ptrdiff_t col = a; col <= b; ++col) plot(col, row, color);
    }
}

void Canvas::outline_disk(const Disk& disk, Rgb color)
{
    const double scale = static_cast<double>(size_) / (2.0 * half_extent_);
    const double r = disk.radius * scale;
    const std::size_t steps = std::max<std::size_t>(16, static_cast<std::size_t>(8.0 * r));
    for (std::size_t k = 0; k < steps; ++k) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(steps);
        const Point z = disk.center + std::polar(disk.radius, theta);
        plot(static_cast<std::ptrdiff_t>(std::floor(to_pixel(z.real()))),
             static_cast<std::ptrdiff_t>(std::floor(to_pixel(z.imag()))), color);
    }
}

void Canvas::draw_axes(Rgb color)
{
    const auto zero = static_cast<std::ptrdiff_t>(std::floor(to_pixel(0.0)));
    for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(size_); ++k) {
        plot(k, zero, color);
        plot(zero, k, color);
    }
}

void Canvas::write_ppm(std::ostream& out) const
{
    out << "P6\n" << size_ << ' ' << size_ << "\n255\n";
    out.write(reinterpret_cast<const char*>(pixels_.data()), static_cast<std::streamsize>(pixels_.size()));
}

Canvas render_cover(const Parameter& p, std::span<const PieceCover> pieces, std::size_t size)
{
    Canvas canvas(size, 1.05 * p.abs_c());
    canvas.draw_axes(palette::axes);
    canvas.outline_disk({Point{}, p.abs_c()}, palette::domain);
    for (const PieceCover& piece : pieces) canvas.outline_disk(piece.disk, palette::cover_outline);
    return canvas;
}

Canvas render_difference(std::span<const Disk> cover, std::size_t size)
{
    double extent = 0.0;
    for (const Disk& d : cover) {
        extent = std::max({extent, std::abs(d.center.real()) + d.radius, std::abs(d.center.imag()) + d.radius});
    }
    Canvas canvas(size, extent > 0.0 ? 1.05 * extent : 1.0);
    for (const Disk& d : cover) canvas.fill_disk(d, palette::difference_fill);
    canvas.draw_axes(palette::axes);
    return canvas;
}

}  // namespace juliadiff
