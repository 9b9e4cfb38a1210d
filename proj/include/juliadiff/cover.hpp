#pragma once

#include "juliadiff/geometry.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace juliadiff {

/// Symbols s_0 ... s_n of a piece I_{s_0...s_n} = G_{s_0} o ... o G_{s_n}(D).
struct SymbolSequence {
    std::vector<std::uint8_t> bits;

    std::size_t depth() const noexcept { return bits.empty() ? 0 : bits.size() - 1; }
    std::string to_string() const;
    friend bool operator==(const SymbolSequence&, const SymbolSequence&) = default;
};

/// One piece I_{s_0...s_n}, represented by the images of boundary samples of D.
struct PieceCover {
    SymbolSequence seq;
    std::vector<Point> samples;
    double sampled_diam = 0.0;
    Disk disk;
};

struct CoverOptions {
    std::size_t samples = 512;                        ///< m, boundary samples of D per piece
    std::size_t max_points = std::size_t{1} << 24;    ///< cap on 2^{n+1} * m
    unsigned threads = 1;
};

/// All 2^{n+1} pieces of depth n in lexicographic symbol order. The
/// innermost map G_{s_n} is applied first so siblings share suffix work.
std::vector<PieceCover> generate_pieces(const Parameter& p, std::size_t n, const CoverOptions& options = {});

std::vector<Disk> piece_disks(std::span<const PieceCover> pieces);

inline constexpr std::size_t kDefaultMaxPairs = std::size_t{1} << 20;

/// Row-major list of disks_i - disks_j for all i, j (i == j included).
/// Throws CapacityError when L^2 > max_pairs.
std::vector<Disk> difference_cover(std::span<const Disk> disks, std::size_t max_pairs = kDefaultMaxPairs,
                                   unsigned threads = 1);

/// Sum of pi r^2 with fixed-shape pairwise summation.
double sum_area(std::span<const Disk> disks);

/// sum_area of the difference cover when all 2^{n+1} piece disks have the
/// worst-case radius sqrt(3)/2 K_n; equals 12 pi 4^n K_n^2.
double worst_case_cover_area(std::size_t n, double K_n);

struct UnionArea {
    double area = 0.0;     ///< cells whose centre is within r + cell*sqrt(2)/2 of a disk centre
    double core = 0.0;     ///< same count without the dilation
    double margin = 0.0;   ///< area - core
    std::size_t width = 0;
    std::size_t height = 0;
};

inline constexpr std::size_t kDefaultMaxGridCells = std::size_t{1} << 28;

/// Outer raster estimate of the area of the union of disks. Every cell that
/// meets a disk has its centre within the dilated radius, so `area` bounds
/// the union area from above.
UnionArea union_area_grid(std::span<const Disk> disks, double cell, std::size_t max_cells = kDefaultMaxGridCells,
                          unsigned threads = 1);

}  // namespace juliadiff
