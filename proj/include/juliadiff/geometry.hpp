#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace juliadiff {

/// A point of the plane, identified with a complex number (re, im).
using Point = std::complex<double>;

/// The parameter c of Q_c(z) = z^2 + c, restricted to the Cantor regime |c| > 2.
///
/// Construction is the only validation point; every other module may assume
/// abs_c() > 2. The domain disk D = {|z| <= |c|} is implied by abs_c().
class Parameter {
public:
    /// Throws DomainError unless c is finite and |c| > 2.
    explicit Parameter(Point c);
    Parameter(double re, double im) : Parameter(Point{re, im}) {}

    Point c() const noexcept { return c_; }
    double abs_c() const noexcept { return abs_c_; }

private:
    Point c_;
    double abs_c_;
};

struct Disk {
    Point center{};
    double radius = 0.0;

    bool contains(Point z, double tolerance = 0.0) const noexcept
    {
        return std::abs(z - center) <= radius + tolerance;
    }
    double area() const noexcept;
};

enum class Sign { plus, minus };

/// Q_c(z) = z^2 + c.
Point forward_map(Point z, const Parameter& p) noexcept;

/// F_+ / F_-: square root with the argument of z taken in [0, 2*pi), so that
/// F_+ lands in the half plane arg in [0, pi) and F_- = -F_+.
Point sqrt_branch(Point z, Sign sign) noexcept;

/// G_s(z) = F_{+/-}(z - c); branch 0 uses F_+, branch 1 uses F_-.
Point inverse_branch(Point z, int branch, const Parameter& p) noexcept;

/// Indices of a diametral pair with i < j (i == j for a single point) and its
/// length. Among equally long pairs the lexicographically smallest (i, j) wins.
struct DiametralPair {
    std::size_t i = 0;
    std::size_t j = 0;
    double length = 0.0;
};

/// All-pairs search up to kBruteForceDiameterLimit points, convex hull plus
/// rotating calipers above. Throws std::invalid_argument on empty input.
DiametralPair diametral_pair(std::span<const Point> points);

inline constexpr std::size_t kBruteForceDiameterLimit = 4096;

/// Exposed separately so the two diameter routes can be cross-checked.
DiametralPair diametral_pair_brute_force(std::span<const Point> points);
DiametralPair diametral_pair_calipers(std::span<const Point> points);

double diameter(std::span<const Point> points);

/// Counter-clockwise convex hull (Andrew's monotone chain) as indices into
/// `points`; collinear and duplicate points are dropped, and among duplicates
/// the smallest index is kept.
std::vector<std::size_t> convex_hull(std::span<const Point> points);

/// Disk centred at the midpoint of a diametral pair (x, y) with radius
/// sqrt(3)/2 * |x - y|. It contains every point whose distance to both x and
/// y is at most |x - y|, hence the whole set.
Disk enclosing_disk(std::span<const Point> points);

/// The difference set d2 - d1 = {x - y : x in d2, y in d1}. For two closed
/// disks it is the disk centred at O2 - O1 with radius r1 + r2 (2R when the
/// radii agree).
Disk minkowski_diff_disks(const Disk& d2, const Disk& d1) noexcept;

/// m points equally spaced on the circle of the given disk, starting at angle 0.
std::vector<Point> circle_samples(const Disk& disk, std::size_t m);

}  // namespace juliadiff
