#include "juliadiff/bounds.hpp"

#include "juliadiff/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace juliadiff {

namespace {

constexpr std::size_t kLogSpaceThreshold = 64;

void require_size(const RadiusBounds& bounds, std::size_t needed)
{
    if (bounds.size() < needed) {
        throw std::out_of_range("radius sequences hold " + std::to_string(bounds.size()) +
                                " terms, " + std::to_string(needed) + " needed");
    }
}

}  // namespace

RadiusLimits radius_limits(const Parameter& p) noexcept
{
    const double a = p.abs_c();
    const double root = std::sqrt(1.0 + 4.0 * a);
    return {(1.0 + root) / 2.0, std::sqrt((2.0 * a - 1.0 - root) / 2.0)};
}

RadiusBounds::RadiusBounds(const Parameter& p, std::size_t n_max) : abs_c_(p.abs_c())
{
    if (n_max < 1) throw DomainError("radius sequences need n_max >= 1");
    outer_.reserve(n_max);
    inner_.reserve(n_max);
    outer_.push_back(std::sqrt(2.0 * abs_c_));
    inner_.push_back(0.0);
    for (std::size_t k = 1; k < n_max; ++k) {
        // R_k <= R_1 = sqrt(2|c|) < |c| for |c| > 2, so the radicand stays positive.
        inner_.push_back(std::sqrt(abs_c_ - outer_.back()));
        outer_.push_back(std::sqrt(abs_c_ + outer_.back()));
    }
    const RadiusLimits lim = radius_limits(p);
    R_limit_ = lim.R_limit;
    r_limit_ = lim.r_limit;
}

RadiusBounds radius_sequences(const Parameter& p, std::size_t n_max)
{
    return RadiusBounds(p, n_max);
}

double diam_I0_bound(const Parameter& p, DiamMode mode, std::size_t m)
{
    if (mode == DiamMode::certified) return 2.0 * std::sqrt(2.0 * p.abs_c());
    if (m < 16) throw DomainError("sampled diam I_0 needs at least 16 samples");
    std::vector<Point> pts = circle_samples({Point{}, p.abs_c()}, m);
    for (Point& z : pts) z = inverse_branch(z, 0, p);
    return diameter(pts);
}

double k_n(const RadiusBounds& bounds, std::size_t n, double diam_I0)
{
    if (n < 1) throw DomainError("K_n is defined for n >= 1");
    require_size(bounds, n + 1);
    if (n <= kLogSpaceThreshold) {
        double product = 1.0;
        for (std::size_t k = 2; k <= n + 1; ++k) product *= bounds.r(k);
        return std::pow(2.0, -0.5 * static_cast<double>(n)) / product * diam_I0;
    }
    double log_k = -0.5 * static_cast<double>(n) * std::numbers::ln2 + std::log(diam_I0);
    for (std::size_t k = 2; k <= n + 1; ++k) log_k -= std::log(bounds.r(k));
    return std::exp(log_k);
}

double k_n(const Parameter& p, std::size_t n, double diam_I0)
{
    if (n < 1) throw DomainError("K_n is defined for n >= 1");
    return k_n(RadiusBounds(p, n + 1), n, diam_I0);
}

BoundRow lemma4_bound(const RadiusBounds& bounds, std::size_t n, double diam_I0)
{
    require_size(bounds, n + 2);
    BoundRow row;
    row.n = n;
    row.K_n = k_n(bounds, n, diam_I0);
    const double r_next = bounds.r(n + 2);
    row.ratio_step = 2.0 / (r_next * r_next);
    if (n <= kLogSpaceThreshold) {
        row.bound = 12.0 * std::numbers::pi * std::pow(4.0, static_cast<double>(n)) * row.K_n * row.K_n;
    } else {
        // K_n^2 leaves the normal double range long before the bound does.
        row.bound = std::exp(std::log(12.0 * std::numbers::pi) + static_cast<double>(n) * std::log(4.0) +
                             2.0 * std::log(row.K_n));
    }
    return row;
}

BoundRow lemma4_bound(const Parameter& p, std::size_t n, double diam_I0)
{
    return lemma4_bound(RadiusBounds(p, n + 2), n, diam_I0);
}

double theorem_polynomial(double abs_c) noexcept
{
    return abs_c * abs_c - 6.0 * abs_c + 6.0;
}

bool theorem_condition(double abs_c) noexcept
{
    // Compared against the root itself: evaluating the polynomial at the
    // rounded root leaves a residual of either sign.
    return abs_c > 3.0 + std::sqrt(3.0);
}

double epsilon_margin(double abs_c) noexcept
{
    return 2.0 * abs_c - 1.0 - std::sqrt(1.0 + 4.0 * abs_c) - 4.0;
}

DecayParams decay_params(const Parameter& p, std::optional<double> epsilon)
{
    const double a = p.abs_c();
    if (!theorem_condition(a)) throw DomainError("decay not guaranteed: |c| must exceed 3 + sqrt(3)");
    const double margin = epsilon_margin(a);

    DecayParams out;
    out.epsilon = epsilon.value_or(margin / 2.0);
    if (!(out.epsilon > 0.0 && out.epsilon < margin)) {
        throw DomainError("epsilon must lie in (0, " + std::to_string(margin) + ")");
    }
    out.delta = std::sqrt((2.0 * a - 1.0 - out.epsilon - std::sqrt(1.0 + 4.0 * a)) / 2.0) - std::sqrt(2.0);
    const double floor = std::sqrt(2.0) + out.delta;
    out.ratio = 2.0 / (floor * floor);

    // r_n increases to r_limit > floor, so the first crossing ends the scan.
    std::size_t length = 64;
    std::size_t first = 0;
    while (first == 0) {
        const RadiusBounds rb(p, length);
        for (std::size_t k = 1; k <= rb.size(); ++k) {
            if (rb.r(k) >= floor) {
                first = k;
                break;
            }
        }
        if (first == 0) {
            if (length >= (std::size_t{1} << 20)) {
                throw DomainError("epsilon too small: r_n does not reach sqrt(2) + delta in double precision");
            }
            length *= 2;
        }
    }
    out.N = first > 1 ? first - 1 : 1;

    out.diam_I0 = diam_I0_bound(p, DiamMode::certified);
    const BoundRow anchor = lemma4_bound(p, out.N + 1, out.diam_I0);
    out.K_const = anchor.bound / std::pow(out.ratio, static_cast<double>(out.N + 1));
    return out;
}

}  // namespace juliadiff
