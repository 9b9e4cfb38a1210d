// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "juliadiff/bounds.hpp"
#include "juliadiff/cli.hpp"
#include "juliadiff/cover.hpp"
#include "juliadiff/errors.hpp"
#include "juliadiff/geometry.hpp"
#include "juliadiff/oracle.hpp"
#include "juliadiff/verify.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

using namespace juliadiff;

namespace {

struct Outcome {
    bool ok = false;
    std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, const std::function<Outcome()>& body)
{
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!out.ok) ++failures;
    fmt::print("[{}] AC{} {} ({:.2f} s): {}\n", out.ok ? "PASS" : "FAIL", id, title, secs, out.detail);
    std::fflush(stdout);
}

Outcome threshold()
{
    const bool above = theorem_condition(4.74);
    const bool below = theorem_condition(4.73);
    const bool boundary = theorem_condition(3.0 + std::sqrt(3.0));
    return {above && !below && !boundary,
            fmt::format("4.74 -> {}, 4.73 -> {}, 3+sqrt(3) -> {}", above, below, boundary)};
}

Outcome decay()
{
    const Parameter p(5.0, 0.0);
    const double d0 = diam_I0_bound(p, DiamMode::certified);
    const RadiusBounds rb(p, 1100);
    const double step50 = lemma4_bound(rb, 50, d0).ratio_step;
    const bool limit_ok = std::abs(step50 - 0.905541) <= 1e-4;

    const DecayParams dp = decay_params(p, 0.1);
    bool below_one = true;
    for (std::size_t n = dp.N + 1; n <= 1000; ++n) below_one = below_one && lemma4_bound(rb, n, d0).ratio_step < 1.0;

    std::size_t first_small = 0;
    for (std::size_t n = 1; n <= 200 && first_small == 0; ++n) {
        if (lemma4_bound(rb, n, d0).bound < 1e-3) first_small = n;
    }
    return {limit_ok && dp.N == 3 && below_one && first_small != 0,
            fmt::format("ratio_step(50)={:.8f} (2/r_limit^2={:.8f}), N={} at eps=0.1, ratio_step<1 for N<n<=1000: {}, "
                        "bound<1e-3 first at n={}",
                        step50, 2.0 / (rb.r_limit() * rb.r_limit()), dp.N, below_one, first_small)};
}

Outcome divergence()
{
    const Parameter p(3.0, 0.0);
    const double d0 = diam_I0_bound(p, DiamMode::certified);
    const RadiusBounds rb(p, 60);
    const double step = lemma4_bound(rb, 50, d0).ratio_step;
    std::size_t first_big = 0;
    for (std::size_t n = 1; n <= 40 && first_big == 0; ++n) {
        if (lemma4_bound(rb, n, d0).bound > 1e6) first_big = n;
    }
    std::ostringstream out;
    std::ostringstream err;
    const std::vector<std::string> args{"bounds", "--c-re", "3", "--c-im", "0", "--depth", "40"};
    const int code = dispatch(args, out, err);
    const bool flagged = code == exit_ok && out.str().find("decay not guaranteed") != std::string::npos;
    return {std::abs(step - 2.8686) <= 1e-3 && first_big != 0 && flagged,
            fmt::format("ratio_step(50)={:.6f}, bound>1e6 first at n={}, CLI flag: {}", step, first_big, flagged)};
}

Outcome disk_difference()
{
    Lcg64 rng(20240501);
    double worst_gap = 0.0;
    for (int pair = 0; pair < 100; ++pair) {
        const double radius = rng.uniform(0.1, 2.0);
        const Disk d2{{rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0)}, radius};
        const Disk d1{{rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0)}, radius};
        // Throws VerificationFailure on any containment violation.
        const DiffCheck check = sample_diff_check(d2, d1, 100000, rng.next());
        worst_gap = std::max(worst_gap, 2.0 * radius - check.sup);
    }

    const double cell = 0.01;
    const Disk a{{0.31, -0.17}, 0.5};
    const Disk b{{-1.13, 0.74}, 0.5};
    const GridMask diff = grid_minkowski_diff(rasterize_disk(a, cell), rasterize_disk(b, cell));
    const GridMask predicted = rasterize_disk(minkowski_diff_disks(a, b), cell);
    // Compare the two rasters by their extent around the predicted centre.
    const Disk target = minkowski_diff_disks(a, b);
    double reach = 0.0;
    for (std::size_t r = 0; r < diff.height; ++r) {
        for (std::size_t c = 0; c < diff.width; ++c) {
            if (diff.at(c, r)) reach = std::max(reach, std::abs(diff.cell_center(c, r) - target.center));
        }
    }
    const double mismatch = std::abs(target.radius - reach);
    const double area_gap = std::abs(mask_area(diff) - mask_area(predicted));
    const bool raster_ok = reach <= target.radius && mismatch <= cell;
    return {worst_gap <= 1e-2 && raster_ok,
            fmt::format("100 pairs at k=1e5: max(2R - sup)={:.3g}, no violation; raster radius mismatch={:.3g} "
                        "(cell {}), area gap={:.4g}",
                        worst_gap, mismatch, cell, area_gap)};
}

struct CoverStats {
    double contraction = 0.0;
    double diam_ratio = 0.0;
    double enclosure = 0.0;
    double radius_ratio = 0.0;
};

CoverStats cover_stats()
{
    static const CoverStats stats = [] {
        const Parameter p(5.0, 0.0);
        const double d0 = diam_I0_bound(p, DiamMode::certified);
        const RadiusBounds rb(p, 12);
        CoverOptions opts;
        opts.samples = 512;
        CoverStats s;
        std::vector<PieceCover> parent = generate_pieces(p, 0, opts);
        for (std::size_t n = 1; n <= 8; ++n) {
            std::vector<PieceCover> pieces = generate_pieces(p, n, opts);
            const double kn = k_n(rb, n, d0);
            const double scale = std::sqrt(2.0) * rb.r(n + 1);
            for (std::size_t idx = 0; idx < pieces.size(); ++idx) {
                const PieceCover& child = pieces[idx];
                const PieceCover& from = parent[idx % parent.size()];
                const int branch = child.seq.bits.front();
                for (std::size_t i = 0; i < from.samples.size(); ++i) {
                    for (std::size_t j = i + 1; j < from.samples.size(); ++j) {
                        const double lhs = std::abs(child.samples[i] - child.samples[j]) * scale;
                        const double rhs = std::abs(from.samples[i] - from.samples[j]);
                        if (rhs > 0.0) s.contraction = std::max(s.contraction, lhs / rhs);
                    }
                    if (child.samples[i] != inverse_branch(from.samples[i], branch, p)) s.contraction = INFINITY;
                }
                s.diam_ratio = std::max(s.diam_ratio, child.sampled_diam / kn);
                for (Point z : child.samples) {
                    s.enclosure = std::max(s.enclosure, (std::abs(z - child.disk.center) - child.disk.radius) /
                                                            child.disk.radius);
                }
                s.radius_ratio = std::max(s.radius_ratio, child.disk.radius / (std::sqrt(3.0) / 2.0 * kn));
            }
            parent = std::move(pieces);
        }
        return s;
    }();
    return stats;
}

Outcome contraction()
{
    const CoverStats s = cover_stats();
    return {s.contraction <= 1.0 + 1e-9 && s.diam_ratio <= 1.0,
            fmt::format("n=1..8, m=512: max |G(z)-G(w)| sqrt2 r_(n+1) / |z-w| = {:.6f}, max sampled diam / K_n = {:.6f}",
                        s.contraction, s.diam_ratio)};
}

Outcome enclosure()
{
    const CoverStats s = cover_stats();
    return {s.enclosure <= 1e-12 && s.radius_ratio < 1.0,
            fmt::format("n=1..8: max (|z - centre| - radius)/radius = {:.3g}, max radius / (sqrt3/2 K_n) = {:.6f}",
                        s.enclosure, s.radius_ratio)};
}

Outcome sandwich()
{
    const Parameter p(5.0, 0.0);
    bool ok = true;
    std::string detail;
    for (std::size_t n = 1; n <= 5; ++n) {
        const SandwichRow row = sandwich_row(p, n, 512, 0.01, 1);
        ok = ok && row.holds();
        detail += fmt::format("\n      n={} raster={:.6g} < union={:.6g} (margin {:.4g}) < 12pi4^nK_n^2={:.6g}; "
                              "disk sum={:.6g}; raster of Q^-n(D) difference={:.6g}{}",
                              n, row.raster, row.union_area, row.union_margin, row.worst, row.sum, row.raster_literal,
                              row.holds() ? "" : "  <-- ordering violated");
    }
    return {ok, "cell=0.01, inner masks of the set covered by the depth-n pieces" + detail};
}

Outcome fixtures()
{
    const Parameter p(5.0, 0.0);
    const RadiusBounds rb(p, 10000);
    const double s21 = std::sqrt(21.0);
    const double errs[] = {
        std::abs(rb.R(1) - std::sqrt(10.0)),
        std::abs(rb.r(2) - std::sqrt(5.0 - std::sqrt(10.0))),
        std::abs(rb.R_limit() - (1.0 + s21) / 2.0),
        std::abs(rb.r_limit() - std::sqrt((9.0 - s21) / 2.0)),
    };
    const double worst = *std::max_element(std::begin(errs), std::end(errs));

    // Strictly monotone until the double-precision fixed point, then constant.
    bool monotone = true;
    std::size_t strict_R = 0;
    std::size_t strict_r = 0;
    for (std::size_t k = 1; k < rb.size(); ++k) {
        const bool R_dec = rb.R(k + 1) < rb.R(k);
        const bool r_inc = rb.r(k + 1) > rb.r(k);
        if (R_dec) strict_R = k + 1;
        if (r_inc) strict_r = k + 1;
        monotone = monotone && rb.R(k + 1) <= rb.R(k) && rb.r(k + 1) >= rb.r(k);
        if (k > strict_R) monotone = monotone && rb.R(k + 1) == rb.R(k);
        if (k > strict_r) monotone = monotone && rb.r(k + 1) == rb.r(k);
    }
    return {worst <= 1e-12 && monotone,
            fmt::format("max closed-form error={:.3g}; 10^4 terms monotone: {} (strict through k={} for R, k={} for r)",
                        worst, monotone, strict_R, strict_r)};
}

Outcome determinism()
{
    auto run = [](std::vector<std::string> args) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = dispatch(args, out, err);
        return std::pair{code, out.str()};
    };
    const std::vector<std::string> base{"verify", "--c-re", "5", "--c-im", "0"};
    std::vector<std::string> eight = base;
    eight.insert(eight.end(), {"--threads", "8"});
    const auto first = run(base);
    const auto second = run(base);
    const auto threaded = run(eight);
    const bool same = first.second == second.second && first.second == threaded.second;
    return {same && first.first == exit_ok,
            fmt::format("default verify report ({} bytes, exit {}): repeat identical {}, 1 vs 8 threads identical {}",
                        first.second.size(), first.first, first.second == second.second,
                        first.second == threaded.second)};
}

}  // namespace

int main()
{
    criterion(1, "threshold reproduction", threshold);
    criterion(2, "decay at c=5", decay);
    criterion(3, "divergence control at c=3", divergence);
    criterion(4, "difference of two disks", disk_difference);
    criterion(5, "pointwise contraction", contraction);
    criterion(6, "piece enclosure", enclosure);
    criterion(7, "sandwich inequality", sandwich);
    criterion(8, "radius sequence fixtures", fixtures);
    criterion(9, "determinism", determinism);
    fmt::print("acceptance: {} of 9 criteria passed\n", 9 - failures);
    return failures == 0 ? 0 : 1;
}
