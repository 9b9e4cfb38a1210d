#include "juliadiff/errors.hpp"
#include "juliadiff/oracle.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

using namespace juliadiff;

namespace {

bool same_mask(const GridMask& a, const GridMask& b)
{
    return a.width == b.width && a.height == b.height && a.origin == b.origin && a.bits == b.bits;
}

GridMask random_mask(Lcg64& rng, std::size_t w, std::size_t h, double density, Point origin)
{
    GridMask g(origin, 0.1, w, h);
    for (std::size_t r = 0; r < h; ++r) {
        for (std::size_t c = 0; c < w; ++c) g.set(c, r, rng.uniform() < density);
    }
    return g;
}

}  // namespace

TEST_CASE("Lcg64 matches the MMIX recurrence")
{
    Lcg64 rng(0);
    CHECK(rng.next() == 1442695040888963407ULL);
    CHECK(rng.next() == 1442695040888963407ULL * 6364136223846793005ULL + 1442695040888963407ULL);
    Lcg64 u(42);
    for (int i = 0; i < 1000; ++i) {
        const double x = u.uniform();
        REQUIRE(x >= 0.0);
        REQUIRE(x < 1.0);
    }
}

TEST_CASE("preimage rasters")
{
    const Parameter p(5.0, 0.0);
    const GridMask d = rasterize_preimage(p, 0, 0.02, MaskMode::inner);
    CHECK(std::abs(mask_area(d) - 25.0 * std::numbers::pi) <= 0.01 * 25.0 * std::numbers::pi);

    const GridMask inner = rasterize_preimage(p, 1, 0.01, MaskMode::inner);
    const GridMask outer = rasterize_preimage(p, 1, 0.01, MaskMode::outer);
    REQUIRE(inner.width == outer.width);
    REQUIRE(inner.origin == outer.origin);
    CHECK(inner.depth == 1);
    CHECK(outer.margin > 0.0);
    std::size_t violations = 0;
    for (std::size_t i = 0; i < inner.bits.size(); ++i) violations += inner.bits[i] > outer.bits[i];
    CHECK(violations == 0);
    CHECK(mask_area(inner) < mask_area(outer));

    // 0 maps to 5 (on the boundary) and 2 maps to 9.
    auto cell_of = [&](Point z) {
        const auto col = static_cast<std::size_t>((z.real() - inner.origin.real()) / inner.cell);
        const auto row = static_cast<std::size_t>((z.imag() - inner.origin.imag()) / inner.cell);
        return std::pair{col, row};
    };
    const auto [c2, r2] = cell_of({2.0, 0.0});
    CHECK_FALSE(inner.at(c2, r2));
    const auto [c1, r1] = cell_of({0.0, 0.5});
    CHECK(inner.at(c1, r1));  // 0.5i -> 4.75

    const GridMask deeper = rasterize_preimage(p, 2, 0.01, MaskMode::inner);
    for (std::size_t i = 0; i < inner.bits.size(); ++i) REQUIRE(deeper.bits[i] <= inner.bits[i]);

    CHECK_THROWS_AS(rasterize_preimage(p, 1, 1e-5, MaskMode::inner, {1000, 1}), CapacityError);
}

TEST_CASE("preimage area fixtures at cell 0.005")
{
    // The exact area of Q^{-1}(D) for c = 5 is (1/2) * integral of 1/|u| over
    // the disk |u + 5| <= 5, which is 10. The raster values are regression fixtures.
    const Parameter p(5.0, 0.0);
    const double inner = mask_area(rasterize_preimage(p, 1, 0.005, MaskMode::inner));
    const double outer = mask_area(rasterize_preimage(p, 1, 0.005, MaskMode::outer));
    CHECK(inner == doctest::Approx(9.9984).epsilon(1e-12));
    CHECK(outer == doctest::Approx(10.1892).epsilon(1e-12));
    CHECK(inner < 10.0);
    CHECK(outer > 10.0);
}

TEST_CASE("preimage symmetry for real c")
{
    const Parameter p(5.0, 0.0);
    const GridMask g = rasterize_preimage(p, 2, 0.01, MaskMode::inner);
    std::size_t mismatched = 0;
    for (std::size_t r = 0; r < g.height; ++r) {
        for (std::size_t c = 0; c < g.width; ++c) {
            mismatched += g.at(c, r) != g.at(g.width - 1 - c, r);
            mismatched += g.at(c, r) != g.at(c, g.height - 1 - r);
        }
    }
    // Centres on the exact escape boundary may round differently on each side.
    CHECK(mismatched <= g.count() / 1000 + 4);
}

TEST_CASE("grid_minkowski_diff basics")
{
    GridMask a({0.0, 0.0}, 0.5, 1, 1);
    a.set(0, 0);
    GridMask b({2.0, 1.0}, 0.5, 1, 1);
    b.set(0, 0);
    for (CorrelationMethod m : {CorrelationMethod::direct, CorrelationMethod::runs, CorrelationMethod::fft}) {
        const GridMask d = grid_minkowski_diff(a, b, m);
        REQUIRE(d.width == 1);
        REQUIRE(d.height == 1);
        CHECK(d.at(0, 0));
        CHECK(std::abs(d.cell_center(0, 0) - (a.cell_center(0, 0) - b.cell_center(0, 0))) <= 1e-12);
    }

    // A set minus itself always contains the zero offset.
    Lcg64 rng(9);
    const GridMask s = random_mask(rng, 20, 13, 0.1, {-1.0, 0.3});
    const GridMask self = grid_minkowski_diff(s, s);
    CHECK(self.width == 39);
    CHECK(self.height == 25);
    CHECK(self.at(19, 12));
    CHECK(std::abs(self.cell_center(19, 12)) <= 1e-12);

    GridMask other({0.0, 0.0}, 0.2, 2, 2);
    CHECK_THROWS_AS(grid_minkowski_diff(a, other), DomainError);
    CHECK_THROWS_AS(grid_minkowski_diff(s, s, CorrelationMethod::runs, {100, 1}), CapacityError);
}

TEST_CASE("correlation methods agree on random masks")
{
    Lcg64 rng(77);
    for (int trial = 0; trial < 12; ++trial) {
        const double density = 0.02 + 0.08 * trial;
        const GridMask a = random_mask(rng, 17 + trial, 9 + 2 * trial, density, {0.0, 0.0});
        const GridMask b = random_mask(rng, 11 + 3 * trial, 23 - trial, density, {0.7, -0.4});
        const GridMask direct = grid_minkowski_diff(a, b, CorrelationMethod::direct);
        CHECK(same_mask(direct, grid_minkowski_diff(a, b, CorrelationMethod::runs)));
        CHECK(same_mask(direct, grid_minkowski_diff(a, b, CorrelationMethod::fft)));
        // a - b is the reflection of b - a.
        const GridMask reverse = grid_minkowski_diff(b, a, CorrelationMethod::runs);
        for (std::size_t r = 0; r < direct.height; ++r) {
            for (std::size_t c = 0; c < direct.width; ++c) {
                REQUIRE(direct.at(c, r) == reverse.at(direct.width - 1 - c, direct.height - 1 - r));
            }
        }
    }
    const GridMask empty({0.0, 0.0}, 0.1, 5, 5);
    const GridMask full = random_mask(rng, 5, 5, 1.1, {0.0, 0.0});
    CHECK(grid_minkowski_diff(empty, full).count() == 0);
    CHECK(grid_minkowski_diff(full, full, CorrelationMethod::fft).count() == 81);
}

TEST_CASE("disk rasters and their difference")
{
    GridMask empty({0.0, 0.0}, 0.1, 100, 100);
    CHECK(mask_area(empty) == 0.0);
    Lcg64 rng(1);
    const GridMask full = random_mask(rng, 100, 100, 2.0, {0.0, 0.0});
    CHECK(mask_area(full) == doctest::Approx(100.0).epsilon(1e-12));

    const GridMask unit = rasterize_disk({{}, 1.0}, 0.005);
    CHECK(std::abs(mask_area(unit) - std::numbers::pi) <= 0.005 * std::numbers::pi);

    const Disk d2{{0.31, -0.17}, 0.5};
    const Disk d1{{-1.13, 0.74}, 0.5};
    const double cell = 0.01;
    const GridMask diff = grid_minkowski_diff(rasterize_disk(d2, cell), rasterize_disk(d1, cell));
    const Disk predicted = minkowski_diff_disks(d2, d1);
    double farthest = 0.0;
    for (std::size_t r = 0; r < diff.height; ++r) {
        for (std::size_t c = 0; c < diff.width; ++c) {
            if (diff.at(c, r)) farthest = std::max(farthest, std::abs(diff.cell_center(c, r) - predicted.center));
        }
    }
    CHECK(farthest <= predicted.radius);
    CHECK(predicted.radius - farthest <= cell);
}

TEST_CASE("sample_diff_check")
{
    const DiffCheck apart = sample_diff_check({{3.0, 0.0}, 1.0}, {{0.0, 0.0}, 1.0}, 10000, 5);
    CHECK(apart.predicted.center == Point{3.0, 0.0});
    CHECK(apart.predicted.radius == 2.0);
    CHECK(apart.sup >= 1.99);
    CHECK(apart.sup <= 2.0);
    CHECK(apart.sup_paired <= apart.sup);
    CHECK_FALSE(apart.contains_origin);

    const DiffCheck concentric = sample_diff_check({{1.0, 1.0}, 0.5}, {{1.0, 1.0}, 1.5}, 5000, 6);
    CHECK(concentric.predicted.center == Point{});
    CHECK(concentric.predicted.radius == 2.0);
    CHECK(concentric.contains_origin);

    const DiffCheck overlap = sample_diff_check({{0.5, 0.0}, 1.0}, {{-0.5, 0.0}, 1.0}, 2000, 7);
    CHECK(overlap.contains_origin);

    CHECK_THROWS_AS(sample_diff_check({{}, 1.0}, {{}, 1.0}, 999, 1), DomainError);

    const DiffCheck again = sample_diff_check({{3.0, 0.0}, 1.0}, {{0.0, 0.0}, 1.0}, 10000, 5);
    CHECK(again.sup == apart.sup);
    CHECK(again.sup_paired == apart.sup_paired);
}

TEST_CASE("oracle determinism across thread counts")
{
    const Parameter p(-2.5, 1.5);
    const GridMask a = rasterize_preimage(p, 3, 0.01, MaskMode::outer, {std::size_t{1} << 28, 1});
    const GridMask b = rasterize_preimage(p, 3, 0.01, MaskMode::outer, {std::size_t{1} << 28, 4});
    CHECK(same_mask(a, b));
    const GridMask da = grid_minkowski_diff(a, a, CorrelationMethod::runs, {std::size_t{1} << 28, 1});
    const GridMask db = grid_minkowski_diff(b, b, CorrelationMethod::runs, {std::size_t{1} << 28, 3});
    CHECK(same_mask(da, db));
}
