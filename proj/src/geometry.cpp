#include "juliadiff/geometry.hpp"

#include "juliadiff/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace juliadiff {

Parameter::Parameter(Point c) : c_(c), abs_c_(std::abs(c))
{
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
        throw DomainError("Cantor regime required: c must be finite");
    }
    if (!(abs_c_ > 2.0)) {
        throw DomainError("Cantor regime required: |c| must exceed 2");
    }
}

double Disk::area() const noexcept
{
    return std::numbers::pi * radius * radius;
}

Point forward_map(Point z, const Parameter& p) noexcept
{
    return z * z + p.c();
}

Point sqrt_branch(Point z, Sign sign) noexcept
{
    // std::sqrt is the principal root (argument in (-pi, pi]). For arguments in
    // [0, pi] it coincides with the [0, 2pi) convention; for the lower half
    // plane the shifted argument theta + 2pi halves to theta/2 + pi, i.e. the
    // negated principal root. A signed zero imaginary part counts as the upper
    // edge of the cut.
    const Point principal = std::sqrt(Point{z.real(), z.imag() == 0.0 ? 0.0 : z.imag()});
    const Point plus = z.imag() < 0.0 ? -principal : principal;
    return sign == Sign::plus ? plus : -plus;
}

Point inverse_branch(Point z, int branch, const Parameter& p) noexcept
{
    return sqrt_branch(z - p.c(), branch == 0 ? Sign::plus : Sign::minus);
}

namespace {

double cross(Point o, Point a, Point b) noexcept
{
    return (a.real() - o.real()) * (b.imag() - o.imag()) - (a.imag() - o.imag()) * (b.real() - o.real());
}

// Squared length of a candidate pair, always evaluated in (min, max) index
// order so that both diameter routes compare bit-identical values.
double pair_norm(std::span<const Point> points, std::size_t a, std::size_t b) noexcept
{
    const std::size_t lo = std::min(a, b);
    const std::size_t hi = std::max(a, b);
    return std::norm(points[lo] - points[hi]);
}

void require_points(std::span<const Point> points)
{
    if (points.empty()) throw std::invalid_argument("point set must be non-empty");
}

}  // namespace

DiametralPair diametral_pair_brute_force(std::span<const Point> points)
{
    require_points(points);
    std::size_t best_i = 0;
    std::size_t best_j = 0;
    double best = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            const double d = pair_norm(points, i, j);
            if (d > best) {
                best = d;
                best_i = i;
                best_j = j;
            }
        }
    }
    if (points.size() > 1 && best == 0.0) best_j = 1;
    return {best_i, best_j, std::sqrt(best)};
}

std::vector<std::size_t> convex_hull(std::span<const Point> points)
{
    std::vector<std::size_t> order(points.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const Point pa = points[a];
        const Point pb = points[b];
        if (pa.real() != pb.real()) return pa.real() < pb.real();
        if (pa.imag() != pb.imag()) return pa.imag() < pb.imag();
        return a < b;
    });
    order.erase(std::unique(order.begin(), order.end(),
                            [&](std::size_t a, std::size_t b) { return points[a] == points[b]; }),
                order.end());
    if (order.size() < 3) return order;

    std::vector<std::size_t> hull(2 * order.size());
    std::size_t k = 0;
    for (std::size_t idx : order) {
        while (k >= 2 && cross(points[hull[k - 2]], points[hull[k - 1]], points[idx]) <= 0.0) --k;
        hull[k++] = idx;
    }
    const std::size_t lower = k + 1;
    for (auto it = order.rbegin() + 1; it != order.rend(); ++it) {
        while (k >= lower && cross(points[hull[k - 2]], points[hull[k - 1]], points[*it]) <= 0.0) --k;
        hull[k++] = *it;
    }
    hull.resize(k - 1);
    return hull;
}

DiametralPair diametral_pair_calipers(std::span<const Point> points)
{
    require_points(points);
    const std::vector<std::size_t> hull = convex_hull(points);
    const std::size_t h = hull.size();
    if (h == 1) return diametral_pair_brute_force(points);

    DiametralPair best{};
    double best_norm = -1.0;
    auto consider = [&](std::size_t a, std::size_t b) {
        const std::size_t lo = std::min(hull[a % h], hull[b % h]);
        const std::size_t hi = std::max(hull[a % h], hull[b % h]);
        if (lo == hi) return;
        const double d = pair_norm(points, lo, hi);
        if (d > best_norm || (d == best_norm && std::pair(lo, hi) < std::pair(best.i, best.j))) {
            best_norm = d;
            best = {lo, hi, 0.0};
        }
    };

    if (h == 2) {
        consider(0, 1);
    } else {
        auto area = [&](std::size_t a, std::size_t b, std::size_t c) {
            return std::abs(cross(points[hull[a % h]], points[hull[b % h]], points[hull[c % h]]));
        };
        std::size_t j = 1;
        for (std::size_t i = 0; i < h; ++i) {
            while (area(i, i + 1, j + 1) > area(i, i + 1, j)) ++j;
            consider(i, j);
            consider(i + 1, j);
            // Parallel edges: both endpoints of the opposite edge are antipodal.
            if (area(i, i + 1, j + 1) == area(i, i + 1, j)) {
                consider(i, j + 1);
                consider(i + 1, j + 1);
            }
        }
    }
    best.length = std::sqrt(best_norm);
    return best;
}

DiametralPair diametral_pair(std::span<const Point> points)
{
    if (points.size() <= kBruteForceDiameterLimit) return diametral_pair_brute_force(points);
    return diametral_pair_calipers(points);
}

double diameter(std::span<const Point> points)
{
    return diametral_pair(points).length;
}

Disk enclosing_disk(std::span<const Point> points)
{
    const DiametralPair pair = diametral_pair(points);
    const Point x = points[pair.i];
    const Point y = points[pair.j];
    return {(x + y) * 0.5, std::sqrt(3.0) / 2.0 * pair.length};
}

Disk minkowski_diff_disks(const Disk& d2, const Disk& d1) noexcept
{
    return {d2.center - d1.center, d1.radius + d2.radius};
}

std::vector<Point> circle_samples(const Disk& disk, std::size_t m)
{
    std::vector<Point> out(m);
    for (std::size_t k = 0; k < m; ++k) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m);
        out[k] = disk.center + std::polar(disk.radius, theta);
    }
    return out;
}

}  // namespace juliadiff
