#pragma once

#include "juliadiff/geometry.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace juliadiff {

/// Annulus radii of the preimages: r_k <= |z| <= R_k for z in Q_c^{-k}(D).
///
///   R_1 = sqrt(2|c|),  R_{k+1} = sqrt(|c| + R_k)
///   r_1 = 0,           r_{k+1} = sqrt(|c| - R_k)
///
/// Indices are 1-based as in the recursion; R(k) and r(k) are defined for
/// 1 <= k <= size(). Immutable after construction.
class RadiusBounds {
public:
    RadiusBounds(const Parameter& p, std::size_t n_max);

    double abs_c() const noexcept { return abs_c_; }
    std::size_t size() const noexcept { return outer_.size(); }
    double R(std::size_t k) const { return outer_.at(k - 1); }
    double r(std::size_t k) const { return inner_.at(k - 1); }
    double R_limit() const noexcept { return R_limit_; }
    double r_limit() const noexcept { return r_limit_; }

private:
    double abs_c_;
    std::vector<double> outer_;
    std::vector<double> inner_;
    double R_limit_;
    double r_limit_;
};

RadiusBounds radius_sequences(const Parameter& p, std::size_t n_max);

struct RadiusLimits {
    double R_limit;  ///< (1 + sqrt(1 + 4|c|)) / 2, the fixed point of R = sqrt(|c| + R)
    double r_limit;  ///< sqrt((2|c| - 1 - sqrt(1 + 4|c|)) / 2) = sqrt(|c| - R_limit)
};

RadiusLimits radius_limits(const Parameter& p) noexcept;

enum class DiamMode { certified, sampled };

/// Value used for diam I_0. `certified` is 2 R_1, a true upper bound because
/// I_0 lies in |z| <= R_1. `sampled` is the diameter of G_0 applied to m
/// boundary samples of D, a lower estimate. m >= 16 is required for `sampled`.
double diam_I0_bound(const Parameter& p, DiamMode mode, std::size_t m = 4096);

/// K_n = 2^{-n/2} (r_2 ... r_{n+1})^{-1} diam_I0 for n >= 1; needs
/// bounds.size() >= n + 1. Evaluated in log space for n > 64.
double k_n(const RadiusBounds& bounds, std::size_t n, double diam_I0);
double k_n(const Parameter& p, std::size_t n, double diam_I0);

struct BoundRow {
    std::size_t n = 0;
    double K_n = 0.0;
    double bound = 0.0;       ///< 12 pi 4^n K_n^2
    double ratio_step = 0.0;  ///< bound(n+1) / bound(n) = 2 / r_{n+2}^2
};

/// Needs bounds.size() >= n + 2 (for ratio_step).
BoundRow lemma4_bound(const RadiusBounds& bounds, std::size_t n, double diam_I0);
BoundRow lemma4_bound(const Parameter& p, std::size_t n, double diam_I0);

/// |c|^2 - 6|c| + 6, whose upper root is 3 + sqrt(3).
double theorem_polynomial(double abs_c) noexcept;

/// True iff |c| > 3 + sqrt(3), i.e. the polynomial above is positive on the
/// branch |c| > 3. Strict: false at the boundary.
bool theorem_condition(double abs_c) noexcept;
inline bool theorem_condition(const Parameter& p) noexcept { return theorem_condition(p.abs_c()); }

struct DecayParams {
    double epsilon = 0.0;
    double delta = 0.0;    ///< sqrt((2|c| - 1 - eps - sqrt(1 + 4|c|)) / 2) - sqrt(2)
    std::size_t N = 0;     ///< r_n >= sqrt(2) + delta for every n > N
    double ratio = 0.0;    ///< (sqrt(2) / (sqrt(2) + delta))^2
    double K_const = 0.0;  ///< bound(n) <= K_const * ratio^n for n > N
    double diam_I0 = 0.0;  ///< the certified diam I_0 used for K_const
};

/// Upper limit for epsilon keeping delta > 0: 2|c| - 1 - sqrt(1 + 4|c|) - 4.
double epsilon_margin(double abs_c) noexcept;

/// Throws DomainError("decay not guaranteed") when theorem_condition fails,
/// and DomainError when a given epsilon is outside (0, epsilon_margin).
/// Without epsilon, half the margin is used.
DecayParams decay_params(const Parameter& p, std::optional<double> epsilon = std::nullopt);

}  // namespace juliadiff
