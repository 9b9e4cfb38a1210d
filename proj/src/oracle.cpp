#include "juliadiff/oracle.hpp"

#include "juliadiff/errors.hpp"
#include "juliadiff/parallel.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>

namespace juliadiff {

std::string_view to_string(MaskMode mode) noexcept
{
    switch (mode) {
    case MaskMode::inner: return "inner";
    case MaskMode::outer: return "outer";
    case MaskMode::difference: return "difference";
    }
    return "unknown";
}

GridMask::GridMask(Point origin_, double cell_, std::size_t width_, std::size_t height_)
    : origin(origin_), cell(cell_), width(width_), height(height_), bits(width_ * height_, 0)
{
}

Point GridMask::cell_center(std::size_t col, std::size_t row) const noexcept
{
    return origin + Point{(static_cast<double>(col) + 0.5) * cell, (static_cast<double>(row) + 0.5) * cell};
}

std::size_t GridMask::count() const noexcept
{
    return static_cast<std::size_t>(std::count(bits.begin(), bits.end(), std::uint8_t{1}));
}

double mask_area(const GridMask& g) noexcept
{
    return static_cast<double>(g.count()) * g.cell * g.cell;
}

namespace {

void check_grid_size(double width, double height, std::size_t max_cells)
{
    if (!(width * height <= static_cast<double>(max_cells))) {
        throw CapacityError("grid of " + std::to_string(width) + " x " + std::to_string(height) +
                            " cells exceeds the cap of " + std::to_string(max_cells));
    }
}

}  // namespace

GridMask rasterize_preimage(const Parameter& p, std::size_t n, double cell, MaskMode mode,
                            const OracleOptions& options)
{
    if (!(cell > 0.0) || !std::isfinite(cell)) throw DomainError("cell size must be positive");
    if (mode == MaskMode::difference) throw DomainError("preimage masks are inner or outer");
    const double a = p.abs_c();
    const double side = std::ceil(2.0 * (a + cell) / cell);
    check_grid_size(side, side, options.max_cells);

    const auto w = static_cast<std::size_t>(side);
    const double half = side * cell / 2.0;
    GridMask mask(Point{-half, -half}, cell, w, w);
    mask.mode = mode;
    mask.depth = static_cast<int>(n);
    mask.c = p.c();

    std::vector<double> threshold(n + 1, a);
    if (mode == MaskMode::outer) {
        const double lipschitz = 2.0 * std::sqrt(2.0 * a);  // 2 R_1
        double err = cell * std::numbers::sqrt2 / 2.0;
        for (std::size_t k = 0; k <= n; ++k) {
            threshold[k] = a + err;
            mask.margin = err;
            err *= lipschitz + err;
        }
    }

    parallel_for(w, options.threads, [&](std::size_t row) {
        for (std::size_t col = 0; col < w; ++col) {
            Point z = mask.cell_center(col, row);
            bool inside = true;
            for (std::size_t k = 0; k <= n; ++k) {
                if (std::abs(z) > threshold[k]) {
                    inside = false;
                    break;
                }
                z = forward_map(z, p);
            }
            mask.bits[row * w + col] = inside ? 1 : 0;
        }
    });
    return mask;
}

namespace {

struct Run {
    std::size_t first;
    std::size_t last;
};

std::vector<std::vector<Run>> row_runs(const GridMask& g)
{
    std::vector<std::vector<Run>> rows(g.height);
    for (std::size_t row = 0; row < g.height; ++row) {
        const std::uint8_t* line = g.bits.data() + row * g.width;
        std::size_t col = 0;
        while (col < g.width) {
            if (!line[col]) {
                ++col;
                continue;
            }
            const std::size_t start = col;
            while (col < g.width && line[col]) ++col;
            rows[row].push_back({start, col - 1});
        }
    }
    return rows;
}

void diff_direct(const GridMask& a, const GridMask& b, GridMask& out)
{
    std::vector<std::pair<std::size_t, std::size_t>> cells_b;
    for (std::size_t row = 0; row < b.height; ++row) {
        for (std::size_t col = 0; col < b.width; ++col) {
            if (b.at(col, row)) cells_b.emplace_back(col, row);
        }
    }
    for (std::size_t row = 0; row < a.height; ++row) {
        for (std::size_t col = 0; col < a.width; ++col) {
            if (!a.at(col, row)) continue;
            for (const auto& [bc, br] : cells_b) out.set(col + (b.width - 1) - bc, row + (b.height - 1) - br);
        }
    }
}

void diff_runs(const GridMask& a, const GridMask& b, GridMask& out, unsigned threads)
{
    const auto runs_a = row_runs(a);
    const auto runs_b = row_runs(b);
    const std::size_t shift_x = b.width - 1;
    const std::size_t shift_y = b.height - 1;
    parallel_for(out.height, threads, [&](std::size_t row) {
        // out row = row_a - row_b + shift_y
        std::vector<int> edges(out.width + 1, 0);
        bool any = false;
        const std::size_t rb_lo = row > shift_y ? 0 : shift_y - row;
        for (std::size_t rb = rb_lo; rb < b.height; ++rb) {
            const std::size_t ra = row + rb - shift_y;
            if (ra >= a.height) break;
            for (const Run& ua : runs_a[ra]) {
                for (const Run& ub : runs_b[rb]) {
                    ++edges[ua.first + shift_x - ub.last];
                    --edges[ua.last + shift_x - ub.first + 1];
                    any = true;
                }
            }
        }
        if (!any) return;
        int depth = 0;
        std::uint8_t* line = out.bits.data() + row * out.width;
        for (std::size_t col = 0; col < out.width; ++col) {
            depth += edges[col];
            line[col] = depth > 0 ? 1 : 0;
        }
    });
}

std::mutex& fftw_planner_mutex()
{
    static std::mutex m;
    return m;
}

struct FftwDeleter {
    void operator()(void* p) const noexcept { fftw_free(p); }
};

void diff_fft(const GridMask& a, const GridMask& b, GridMask& out)
{
    const std::size_t W = out.width;
    const std::size_t H = out.height;
    const std::size_t Wc = W / 2 + 1;
    const std::size_t real_size = W * H;
    const std::size_t spec_size = Wc * H;

    std::unique_ptr<double, FftwDeleter> fa(fftw_alloc_real(real_size));
    std::unique_ptr<double, FftwDeleter> fb(fftw_alloc_real(real_size));
    std::unique_ptr<fftw_complex, FftwDeleter> sa(fftw_alloc_complex(spec_size));
    std::unique_ptr<fftw_complex, FftwDeleter> sb(fftw_alloc_complex(spec_size));
    std::fill_n(fa.get(), real_size, 0.0);
    std::fill_n(fb.get(), real_size, 0.0);
    for (std::size_t row = 0; row < a.height; ++row) {
        for (std::size_t col = 0; col < a.width; ++col) fa.get()[row * W + col] = a.at(col, row) ? 1.0 : 0.0;
    }
    // b flipped in both axes turns the convolution into the correlation a - b.
    for (std::size_t row = 0; row < b.height; ++row) {
        for (std::size_t col = 0; col < b.width; ++col) {
            fb.get()[(b.height - 1 - row) * W + (b.width - 1 - col)] = b.at(col, row) ? 1.0 : 0.0;
        }
    }

    fftw_plan plan_a;
    fftw_plan plan_b;
    fftw_plan plan_back;
    {
        std::lock_guard lock(fftw_planner_mutex());
        const int h = static_cast<int>(H);
        const int w = static_cast<int>(W);
        plan_a = fftw_plan_dft_r2c_2d(h, w, fa.get(), sa.get(), FFTW_ESTIMATE);
        plan_b = fftw_plan_dft_r2c_2d(h, w, fb.get(), sb.get(), FFTW_ESTIMATE);
        plan_back = fftw_plan_dft_c2r_2d(h, w, sa.get(), fa.get(), FFTW_ESTIMATE);
    }
    fftw_execute(plan_a);
    fftw_execute(plan_b);
    for (std::size_t k = 0; k < spec_size; ++k) {
        const double re = sa.get()[k][0] * sb.get()[k][0] - sa.get()[k][1] * sb.get()[k][1];
        const double im = sa.get()[k][0] * sb.get()[k][1] + sa.get()[k][1] * sb.get()[k][0];
        sa.get()[k][0] = re;
        sa.get()[k][1] = im;
    }
    fftw_execute(plan_back);
    {
        std::lock_guard lock(fftw_planner_mutex());
        fftw_destroy_plan(plan_a);
        fftw_destroy_plan(plan_b);
        fftw_destroy_plan(plan_back);
    }

    // Unnormalised inverse: counts are scaled by W * H.
    const double half = 0.5 * static_cast<double>(real_size);
    for (std::size_t k = 0; k < real_size; ++k) out.bits[k] = fa.get()[k] > half ? 1 : 0;
}

}  // namespace

GridMask grid_minkowski_diff(const GridMask& a, const GridMask& b, CorrelationMethod method,
                             const OracleOptions& options)
{
    if (std::abs(a.cell - b.cell) > 1e-12 * std::max(a.cell, b.cell)) {
        throw DomainError("masks must share the same cell size");
    }
    if (a.width == 0 || a.height == 0 || b.width == 0 || b.height == 0) {
        throw DomainError("masks must be non-empty windows");
    }
    const double w = static_cast<double>(a.width + b.width - 1);
    const double h = static_cast<double>(a.height + b.height - 1);
    check_grid_size(w, h, options.max_cells);

    const double cell = a.cell;
    const Point shift{(static_cast<double>(b.width) - 0.5) * cell, (static_cast<double>(b.height) - 0.5) * cell};
    GridMask out(a.origin - b.origin - shift, cell, a.width + b.width - 1, a.height + b.height - 1);
    out.mode = MaskMode::difference;
    out.c = a.c;

    switch (method) {
    case CorrelationMethod::direct: diff_direct(a, b, out); break;
    case CorrelationMethod::runs: diff_runs(a, b, out, options.threads); break;
    case CorrelationMethod::fft: diff_fft(a, b, out); break;
    }
    return out;
}

GridMask rasterize_disk(const Disk& disk, double cell)
{
    if (!(cell > 0.0)) throw DomainError("cell size must be positive");
    const double x0 = std::floor((disk.center.real() - disk.radius) / cell) * cell;
    const double y0 = std::floor((disk.center.imag() - disk.radius) / cell) * cell;
    const auto w = static_cast<std::size_t>(std::ceil((disk.center.real() + disk.radius - x0) / cell)) + 1;
    const auto h = static_cast<std::size_t>(std::ceil((disk.center.imag() + disk.radius - y0) / cell)) + 1;
    GridMask mask(Point{x0, y0}, cell, w, h);
    mask.mode = MaskMode::inner;
    for (std::size_t row = 0; row < h; ++row) {
        for (std::size_t col = 0; col < w; ++col) mask.set(col, row, disk.contains(mask.cell_center(col, row)));
    }
    return mask;
}

Point sample_disk(const Disk& disk, Lcg64& rng) noexcept
{
    while (true) {
        const Point offset{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
        if (std::norm(offset) <= 1.0) return disk.center + disk.radius * offset;
    }
}

DiffCheck sample_diff_check(const Disk& d2, const Disk& d1, std::size_t k, std::uint64_t seed)
{
    if (k < 1000) throw DomainError("sample_diff_check needs k >= 1000");
    DiffCheck out;
    out.predicted = minkowski_diff_disks(d2, d1);
    out.contains_origin = std::abs(out.predicted.center) <= out.predicted.radius;
    const Point centre = out.predicted.center;

    Lcg64 rng(seed);
    std::vector<Point> xs(k);
    std::vector<Point> ys(k);
    for (std::size_t i = 0; i < k; ++i) {
        xs[i] = sample_disk(d2, rng);
        ys[i] = sample_disk(d1, rng);
        out.sup_paired = std::max(out.sup_paired, std::abs(xs[i] - ys[i] - centre));
    }

    // |x - y - centre| is convex in (x, y), so its maximum over all k^2
    // combinations is attained at a pair of hull vertices.
    const auto hull_x = convex_hull(xs);
    const auto hull_y = convex_hull(ys);
    for (std::size_t i : hull_x) {
        for (std::size_t j : hull_y) out.sup = std::max(out.sup, std::abs(xs[i] - ys[j] - centre));
    }
    out.sup = std::max(out.sup, out.sup_paired);

    const double tolerance = 1e-12 * (out.predicted.radius + std::abs(d2.center) + std::abs(d1.center));
    if (out.sup > out.predicted.radius + tolerance) {
        throw VerificationFailure("sampled difference at distance " + std::to_string(out.sup) +
                                  " outside the predicted difference disk of radius " +
                                  std::to_string(out.predicted.radius));
    }
    return out;
}

}  // namespace juliadiff
