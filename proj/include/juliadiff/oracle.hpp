#pragma once

#include "juliadiff/geometry.hpp"

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace juliadiff {

enum class MaskMode { inner, outer, difference };

std::string_view to_string(MaskMode mode) noexcept;

/// Binary raster over an axis-aligned window. Cell (col, row) covers
/// [origin + (col, row) * cell, origin + (col + 1, row + 1) * cell]; row 0
/// is the lowest row.
struct GridMask {
    Point origin{};
    double cell = 1.0;
    std::size_t width = 0;
    std::size_t height = 0;
    std::vector<std::uint8_t> bits;  ///< row-major, 0 or 1

    MaskMode mode = MaskMode::inner;
    int depth = -1;       ///< n for preimage masks, -1 otherwise
    Point c{};            ///< parameter for preimage masks
    double margin = 0.0;  ///< outer masks: escape-threshold inflation used at the last iterate

    GridMask() = default;
    GridMask(Point origin, double cell, std::size_t width, std::size_t height);

    bool at(std::size_t col, std::size_t row) const { return bits[row * width + col] != 0; }
    void set(std::size_t col, std::size_t row, bool v = true) { bits[row * width + col] = v ? 1 : 0; }
    Point cell_center(std::size_t col, std::size_t row) const noexcept;
    std::size_t count() const noexcept;
};

struct OracleOptions {
    std::size_t max_cells = std::size_t{1} << 28;
    unsigned threads = 1;
};

/// Raster of Q_c^{-n}(D) = {z : |Q_c^k(z)| <= |c| for 0 <= k <= n} over the
/// square of side 2(|c| + cell) centred at 0.
///
/// inner: a cell is set iff its centre passes the escape test.
/// outer: the threshold at iterate k is |c| + e_k with e_0 = cell*sqrt(2)/2
///        and e_{k+1} = e_k (2 R_1 + e_k); orbits of true members stay within
///        |z| <= R_1 before the last iterate, so every cell meeting the set is
///        marked. `margin` records e_n.
GridMask rasterize_preimage(const Parameter& p, std::size_t n, double cell, MaskMode mode,
                            const OracleOptions& options = {});

enum class CorrelationMethod {
    direct,  ///< every pair of set cells; the reference semantics
    runs,    ///< row run-length intervals; exact, the default
    fft,     ///< transform-based correlation counts thresholded at 1/2
};

/// Discrete difference set a - b: output cell u is set iff some set cells
/// x in a, y in b have x - y = u. Cell centres of the result are exact
/// differences of input cell centres. Throws DomainError for mismatched cell
/// sizes, CapacityError above options.max_cells.
GridMask grid_minkowski_diff(const GridMask& a, const GridMask& b,
                             CorrelationMethod method = CorrelationMethod::runs, const OracleOptions& options = {});

/// Set-cell count times cell area.
double mask_area(const GridMask& g) noexcept;

/// Raster of a closed disk: a cell is set iff its centre lies in the disk.
GridMask rasterize_disk(const Disk& disk, double cell);

/// Knuth's MMIX 64-bit linear congruential generator:
///   state' = 6364136223846793005 * state + 1442695040888963407 (mod 2^64);
/// uniform() returns the top 53 bits scaled to [0, 1).
class Lcg64 {
public:
    explicit Lcg64(std::uint64_t seed) noexcept : state_(seed) {}
    std::uint64_t next() noexcept
    {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return state_;
    }
    double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }

private:
    std::uint64_t state_;
};

/// Uniform point of a disk by rejection from its bounding square.
Point sample_disk(const Disk& disk, Lcg64& rng) noexcept;

struct DiffCheck {
    double sup_paired = 0.0;  ///< max |(x_i - y_i) - centre| over the k drawn pairs
    double sup = 0.0;         ///< same over all k^2 cross differences x_i - y_j
    Disk predicted;           ///< minkowski_diff_disks(d2, d1)
    bool contains_origin = false;
};

/// Draws k points from each disk and checks that every difference x_i - y_j
/// (all k^2 combinations, evaluated exactly through the convex hulls of the
/// two samples) lies in the predicted difference disk. Throws
/// VerificationFailure on a containment violation; k >= 1000.
DiffCheck sample_diff_check(const Disk& d2, const Disk& d1, std::size_t k, std::uint64_t seed);

}  // namespace juliadiff
