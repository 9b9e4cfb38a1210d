#include "juliadiff/cover.hpp"

#include "juliadiff/errors.hpp"
#include "juliadiff/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace juliadiff {

std::string SymbolSequence::to_string() const
{
    std::string out;
    out.reserve(bits.size());
    for (std::uint8_t b : bits) out.push_back(b ? '1' : '0');
    return out;
}

std::vector<PieceCover> generate_pieces(const Parameter& p, std::size_t n, const CoverOptions& options)
{
    const std::size_t m = options.samples;
    if (m < 16) throw DomainError("at least 16 boundary samples are required");
    if (n >= 40) throw DomainError("depth out of range");
    const std::size_t count = std::size_t{2} << n;
    if (count > options.max_points / m) {
        throw CapacityError("2^(n+1) * m = " + std::to_string(count) + " * " + std::to_string(m) +
                            " sample points exceed the cap of " + std::to_string(options.max_points));
    }

    const std::vector<Point> boundary = circle_samples({Point{}, p.abs_c()}, m);

    // level holds the pieces for suffixes s_k ... s_n in lexicographic order;
    // prepending s_k = 0 to every suffix, then s_k = 1, keeps that order.
    std::vector<PieceCover> level(1);
    level[0].samples = boundary;
    for (std::size_t step = 0; step <= n; ++step) {
        std::vector<PieceCover> next(2 * level.size());
        parallel_for(next.size(), options.threads, [&](std::size_t idx) {
            const int branch = idx < level.size() ? 0 : 1;
            const PieceCover& parent = level[idx % level.size()];
            PieceCover& child = next[idx];
            child.seq.bits.reserve(parent.seq.bits.size() + 1);
            child.seq.bits.push_back(static_cast<std::uint8_t>(branch));
            child.seq.bits.insert(child.seq.bits.end(), parent.seq.bits.begin(), parent.seq.bits.end());
            child.samples.resize(parent.samples.size());
            std::transform(parent.samples.begin(), parent.samples.end(), child.samples.begin(),
                           [&](Point z) { return inverse_branch(z, branch, p); });
        });
        level = std::move(next);
    }

    parallel_for(level.size(), options.threads, [&](std::size_t idx) {
        PieceCover& piece = level[idx];
        const DiametralPair pair = diametral_pair(piece.samples);
        piece.sampled_diam = pair.length;
        piece.disk = {(piece.samples[pair.i] + piece.samples[pair.j]) * 0.5, std::sqrt(3.0) / 2.0 * pair.length};
    });
    return level;
}

std::vector<Disk> piece_disks(std::span<const PieceCover> pieces)
{
    std::vector<Disk> out;
    out.reserve(pieces.size());
    for (const PieceCover& piece : pieces) {
        out.push_back(piece.samples.empty() ? Disk{} : enclosing_disk(piece.samples));
    }
    return out;
}

std::vector<Disk> difference_cover(std::span<const Disk> disks, std::size_t max_pairs, unsigned threads)
{
    const std::size_t L = disks.size();
    if (L != 0 && L > max_pairs / L) {
        throw CapacityError(std::to_string(L) + "^2 disk pairs exceed the cap of " + std::to_string(max_pairs) +
                            "; lower the depth or use the sum-of-areas bound only");
    }
    std::vector<Disk> out(L * L);
    parallel_for(L, threads, [&](std::size_t i) {
        for (std::size_t j = 0; j < L; ++j) out[i * L + j] = minkowski_diff_disks(disks[i], disks[j]);
    });
    return out;
}

double sum_area(std::span<const Disk> disks)
{
    std::vector<double> areas(disks.size());
    std::transform(disks.begin(), disks.end(), areas.begin(), [](const Disk& d) { return d.area(); });
    return pairwise_sum(areas);
}

double worst_case_cover_area(std::size_t n, double K_n)
{
    if (n > 12) throw CapacityError("worst-case cover enumeration is limited to n <= 12");
    const std::size_t pieces = std::size_t{2} << n;
    const Disk piece{Point{}, std::sqrt(3.0) / 2.0 * K_n};
    // Centres do not enter the sum of areas, only the radii.
    const std::vector<double> areas(pieces * pieces, minkowski_diff_disks(piece, piece).area());
    return pairwise_sum(areas);
}

UnionArea union_area_grid(std::span<const Disk> disks, double cell, std::size_t max_cells, unsigned threads)
{
    if (!(cell > 0.0) || !std::isfinite(cell)) throw DomainError("cell size must be positive");
    UnionArea out;
    if (disks.empty()) return out;

    const double dilation = cell * std::numbers::sqrt2 / 2.0;
    double lo_x = std::numeric_limits<double>::infinity();
    double lo_y = lo_x;
    double hi_x = -lo_x;
    double hi_y = -lo_x;
    for (const Disk& d : disks) {
        const double reach = d.radius + dilation;
        lo_x = std::min(lo_x, d.center.real() - reach);
        hi_x = std::max(hi_x, d.center.real() + reach);
        lo_y = std::min(lo_y, d.center.imag() - reach);
        hi_y = std::max(hi_y, d.center.imag() + reach);
    }
    if (!std::isfinite(lo_x + hi_x + lo_y + hi_y)) throw DomainError("disk bounding box is not finite");

    const double x0 = std::floor(lo_x / cell) * cell;
    const double y0 = std::floor(lo_y / cell) * cell;
    const double w = std::ceil((hi_x - x0) / cell) + 1.0;
    const double h = std::ceil((hi_y - y0) / cell) + 1.0;
    if (w * h > static_cast<double>(max_cells)) {
        throw CapacityError("union grid of " + std::to_string(static_cast<std::size_t>(w)) + " x " +
                            std::to_string(static_cast<std::size_t>(h)) + " cells exceeds the cap");
    }
    out.width = static_cast<std::size_t>(w);
    out.height = static_cast<std::size_t>(h);

    // Disks are bucketed into bands of rows so each row only visits nearby disks.
    constexpr std::size_t band_rows = 64;
    std::vector<std::vector<std::size_t>> bands((out.height + band_rows - 1) / band_rows);
    for (std::size_t k = 0; k < disks.size(); ++k) {
        const double reach = disks[k].radius + dilation;
        const double lo = std::floor((disks[k].center.imag() - reach - y0) / cell);
        const double hi = std::floor((disks[k].center.imag() + reach - y0) / cell);
        const auto first = static_cast<std::size_t>(std::max(lo, 0.0)) / band_rows;
        const auto last = static_cast<std::size_t>(std::clamp(hi, 0.0, h - 1.0)) / band_rows;
        for (std::size_t b = first; b <= last; ++b) bands[b].push_back(k);
    }

    std::vector<std::size_t> dilated_rows(out.height);
    std::vector<std::size_t> core_rows(out.height);
    parallel_for(out.height, threads, [&](std::size_t row) {
        // 0 = empty, 1 = dilated only, 2 = inside some undilated disk
        std::vector<std::uint8_t> line(out.width, 0);
        const double y = y0 + (static_cast<double>(row) + 0.5) * cell;
        for (std::size_t k : bands[row / band_rows]) {
            const Disk& d = disks[k];
            const double dy = y - d.center.imag();
            const double reach = d.radius + dilation;
            if (std::abs(dy) > reach) continue;
            auto mark = [&](double radius, std::uint8_t level) {
                const double span2 = radius * radius - dy * dy;
                if (span2 < 0.0) return;
                const double half = std::sqrt(span2);
                // Columns whose centre x0 + (col + 0.5) cell lies in [cx - half, cx + half].
                const double first = std::ceil((d.center.real() - half - x0) / cell - 0.5);
                const double last = std::floor((d.center.real() + half - x0) / cell - 0.5);
                const auto a = static_cast<std::ptrdiff_t>(std::max(first, 0.0));
                const auto b = static_cast<std::ptrdiff_t>(std::min(last, w - 1.0));
                for (std::ptrdiff_t col = a; col <= b; ++col) {
                    line[static_cast<std::size_t>(col)] = std::max(line[static_cast<std::size_t>(col)], level);
                }
            };
            mark(reach, 1);
            mark(d.radius, 2);
        }
        for (std::uint8_t v : line) {
            dilated_rows[row] += v > 0;
            core_rows[row] += v > 1;
        }
    });

    std::size_t dilated = 0;
    std::size_t core = 0;
    for (std::size_t row = 0; row < out.height; ++row) {
        dilated += dilated_rows[row];
        core += core_rows[row];
    }
    out.area = static_cast<double>(dilated) * cell * cell;
    out.core = static_cast<double>(core) * cell * cell;
    out.margin = out.area - out.core;
    return out;
}

}  // namespace juliadiff
