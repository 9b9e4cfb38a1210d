#include "juliadiff/verify.hpp"

#include "juliadiff/bounds.hpp"
#include "juliadiff/cover.hpp"
#include "juliadiff/errors.hpp"
#include "juliadiff/io.hpp"
#include "juliadiff/oracle.hpp"
#include "juliadiff/parallel.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace juliadiff {

namespace {

std::string_view status_label(CheckStatus s)
{
    switch (s) {
    case CheckStatus::pass: return "PASS";
    case CheckStatus::fail: return "FAIL";
    case CheckStatus::skip: return "SKIP";
    }
    return "????";
}

std::string real(double v)
{
    return format_real(v);
}

class Recorder {
public:
    void add(std::string name, bool ok, std::string detail)
    {
        report.checks.push_back({std::move(name), ok ? CheckStatus::pass : CheckStatus::fail, std::move(detail)});
    }
    void skip(std::string name, std::string detail)
    {
        report.checks.push_back({std::move(name), CheckStatus::skip, std::move(detail)});
    }

    VerifyReport report;
};

double relative_error(double a, double b)
{
    return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}

// Smallest arc of the circle containing every argument.
double argument_spread(std::span<const Point> samples)
{
    std::vector<double> args;
    args.reserve(samples.size());
    for (Point z : samples) {
        if (z == Point{}) continue;
        double a = std::arg(z);
        if (a < 0.0) a += 2.0 * std::numbers::pi;
        args.push_back(a);
    }
    if (args.size() < 2) return 0.0;
    std::sort(args.begin(), args.end());
    double gap = args.front() + 2.0 * std::numbers::pi - args.back();
    for (std::size_t k = 1; k < args.size(); ++k) gap = std::max(gap, args[k] - args[k - 1]);
    return 2.0 * std::numbers::pi - gap;
}

void check_geometry(const Parameter& p, const VerifyConfig& cfg, Recorder& rec)
{
    Lcg64 rng(cfg.seed);
    const double a = p.abs_c();
    constexpr std::size_t trials = 10000;

    double worst_round_trip = 0.0;
    bool symmetric = true;
    bool cut_ok = true;
    for (std::size_t t = 0; t < trials; ++t) {
        const Point z{rng.uniform(-2.0 * a, 2.0 * a), rng.uniform(-2.0 * a, 2.0 * a)};
        const Point g0 = inverse_branch(z, 0, p);
        const Point g1 = inverse_branch(z, 1, p);
        symmetric = symmetric && g1 == -g0;
        for (Point g : {g0, g1}) {
            worst_round_trip = std::max(worst_round_trip, std::abs(forward_map(g, p) - z) / (std::abs(z) + a));
        }
        const Point f = sqrt_branch(z, Sign::plus);
        double arg = std::arg(f);
        if (arg < 0.0) arg += 2.0 * std::numbers::pi;
        cut_ok = cut_ok && arg >= 0.0 && arg < std::numbers::pi;
    }
    rec.add("geometry.round_trip", worst_round_trip <= 1e-12,
            fmt::format("trials={} max_rel_residual={}", trials, real(worst_round_trip)));
    rec.add("geometry.branch_symmetry", symmetric, fmt::format("trials={} G1==-G0 exactly", trials));
    rec.add("geometry.branch_cut", cut_ok, fmt::format("trials={} arg(F+) in [0,pi)", trials));

    double worst_modulus = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
        const Point z = sample_disk({Point{}, a}, rng);
        for (int s : {0, 1}) worst_modulus = std::max(worst_modulus, std::abs(inverse_branch(z, s, p)));
    }
    rec.add("geometry.containment", worst_modulus <= a * (1.0 + 1e-12),
            fmt::format("trials={} max|G_s(z)|={} |c|={}", trials, real(worst_modulus), real(a)));

    std::vector<Point> cloud(6000);
    for (Point& z : cloud) z = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    const DiametralPair brute = diametral_pair_brute_force(cloud);
    const DiametralPair fast = diametral_pair_calipers(cloud);
    rec.add("geometry.diameter_routes", brute.i == fast.i && brute.j == fast.j && brute.length == fast.length,
            fmt::format("points={} diameter={}", cloud.size(), real(brute.length)));
}

void check_bounds(const Parameter& p, const VerifyConfig& cfg, Recorder& rec)
{
    const RadiusBounds rb(p, 10000);
    // Strict until the rounded recursion hits a fixed point, constant afterwards.
    bool monotone = true;
    std::size_t stall_R = 0;
    std::size_t stall_r = 0;
    for (std::size_t k = 1; k < rb.size(); ++k) {
        if (stall_R == 0) {
            if (rb.R(k + 1) == rb.R(k)) stall_R = k;
            else monotone = monotone && rb.R(k + 1) < rb.R(k);
        } else {
            monotone = monotone && rb.R(k + 1) == rb.R(k);
        }
        if (stall_r == 0) {
            if (rb.r(k + 1) == rb.r(k)) stall_r = k;
            else monotone = monotone && rb.r(k + 1) > rb.r(k);
        } else {
            monotone = monotone && rb.r(k + 1) == rb.r(k);
        }
    }
    rec.add("bounds.monotonicity", monotone,
            fmt::format("terms={} strict until double fixed point at k={} (R), k={} (r)", rb.size(), stall_R, stall_r));

    double worst_gap = 0.0;
    for (std::size_t k = 200; k <= rb.size(); ++k) {
        worst_gap = std::max({worst_gap, std::abs(rb.R(k) - rb.R_limit()), std::abs(rb.r(k) - rb.r_limit())});
    }
    rec.add("bounds.convergence", worst_gap <= 1e-12, fmt::format("max_gap(n>=200)={}", real(worst_gap)));

    const double a = p.abs_c();
    const double fixed_point = std::abs(rb.R_limit() * rb.R_limit() - a - rb.R_limit());
    const double inner_fixed = std::abs(rb.r_limit() * rb.r_limit() - (a - rb.R_limit()));
    rec.add("bounds.closed_forms", fixed_point <= 1e-12 * a && inner_fixed <= 1e-12 * a,
            fmt::format("R_limit={} r_limit={} residuals={},{}", real(rb.R_limit()), real(rb.r_limit()),
                        real(fixed_point), real(inner_fixed)));

    bool equivalent = true;
    std::string table;
    for (double probe : {3.0, 4.0, 4.73, 4.74, 5.0, 10.0, a}) {
        const RadiusLimits lim = radius_limits(Parameter(probe, 0.0));
        const bool asymptotic = 2.0 / (lim.r_limit * lim.r_limit) < 1.0;
        equivalent = equivalent && asymptotic == theorem_condition(probe);
        table += fmt::format(" {}:{}", real(probe), theorem_condition(probe) ? 1 : 0);
    }
    rec.add("decay.condition_equivalence", equivalent, "condition<=>2/r_limit^2<1 at" + table);

    const double d0 = diam_I0_bound(p, DiamMode::certified);
    const RadiusBounds table_rb(p, 503);
    double worst_tele = 0.0;
    double worst_ratio = 0.0;
    BoundRow prev = lemma4_bound(table_rb, 1, d0);
    for (std::size_t n = 2; n <= 500; ++n) {
        const BoundRow row = lemma4_bound(table_rb, n, d0);
        worst_tele = std::max(worst_tele, relative_error(row.K_n * std::sqrt(2.0) * table_rb.r(n + 1), prev.K_n));
        worst_ratio = std::max(worst_ratio, relative_error(row.bound / prev.bound, prev.ratio_step));
        prev = row;
    }
    rec.add("bounds.k_n_telescoping", worst_tele <= 1e-12, fmt::format("n<=500 max_rel={}", real(worst_tele)));
    rec.add("bounds.ratio_step_identity", worst_ratio <= 1e-12, fmt::format("n<=500 max_rel={}", real(worst_ratio)));

    if (!theorem_condition(p)) {
        const BoundRow far = lemma4_bound(table_rb, 500, d0);
        rec.skip("decay.geometric", fmt::format("decay not guaranteed: |c|={} <= 3+sqrt(3); ratio_step(500)={}",
                                              real(a), real(far.ratio_step)));
        return;
    }
    const DecayParams dp = decay_params(p, cfg.epsilon);
    bool tail = true;
    bool sub_unit = true;
    for (std::size_t n = dp.N + 1; n <= 500; ++n) {
        const BoundRow row = lemma4_bound(table_rb, n, d0);
        tail = tail && row.bound <= dp.K_const * std::pow(dp.ratio, static_cast<double>(n)) * (1.0 + 1e-12);
        sub_unit = sub_unit && row.ratio_step < 1.0;
    }
    bool floor_ok = true;
    for (std::size_t n = dp.N + 1; n <= 500; ++n) floor_ok = floor_ok && table_rb.r(n) >= std::sqrt(2.0) + dp.delta;
    rec.add("decay.geometric", tail && sub_unit && floor_ok && dp.delta > 0.0 && dp.ratio < 1.0,
            fmt::format("epsilon={} delta={} N={} ratio={} K_const={} bound(500)={}", real(dp.epsilon),
                        real(dp.delta), dp.N, real(dp.ratio), real(dp.K_const),
                        real(lemma4_bound(table_rb, 500, d0).bound)));
}

void check_cover(const Parameter& p, const VerifyConfig& cfg, Recorder& rec)
{
    const double d0 = diam_I0_bound(p, DiamMode::certified);
    const RadiusBounds rb(p, cfg.depth + 3);
    CoverOptions opts;
    opts.samples = cfg.samples;
    opts.threads = cfg.threads;

    std::vector<PieceCover> parent = generate_pieces(p, 0, opts);
    bool depth0_ok = true;
    for (const PieceCover& piece : parent) depth0_ok = depth0_ok && piece.sampled_diam <= d0;

    double worst_contraction = 0.0;
    double worst_diam_ratio = 0.0;
    double worst_spread = 0.0;
    double worst_enclosure = 0.0;
    double worst_radius_ratio = 0.0;
    double worst_nesting = 0.0;
    double worst_membership = 0.0;
    for (std::size_t n = 1; n <= cfg.depth; ++n) {
        std::vector<PieceCover> pieces = generate_pieces(p, n, opts);
        const double kn = k_n(rb, n, d0);
        const double scale = std::sqrt(2.0) * rb.r(n + 1);

        std::vector<double> contraction(pieces.size());
        std::vector<double> enclosure(pieces.size());
        std::vector<double> nesting(pieces.size());
        std::vector<double> membership(pieces.size());
        parallel_for(pieces.size(), cfg.threads, [&](std::size_t idx) {
            const PieceCover& child = pieces[idx];
            const PieceCover& from = parent[idx % parent.size()];
            const int branch = child.seq.bits.front();
            double worst = 0.0;
            for (std::size_t i = 0; i < from.samples.size(); ++i) {
                const Point gi = inverse_branch(from.samples[i], branch, p);
                for (std::size_t j = i + 1; j < from.samples.size(); ++j) {
                    const double lhs = std::abs(gi - inverse_branch(from.samples[j], branch, p)) * scale;
                    const double rhs = std::abs(from.samples[i] - from.samples[j]);
                    if (rhs > 0.0) worst = std::max(worst, lhs / rhs);
                }
            }
            contraction[idx] = worst;

            double outside = 0.0;
            for (Point z : child.samples) outside = std::max(outside, std::abs(z - child.disk.center) - child.disk.radius);
            enclosure[idx] = child.disk.radius > 0.0 ? outside / child.disk.radius : outside;

            // Samples of this piece lie in the enclosing disk of its prefix piece.
            const PieceCover& prefix = parent[idx >> 1];
            double escape = 0.0;
            for (Point z : child.samples) escape = std::max(escape, std::abs(z - prefix.disk.center) - prefix.disk.radius);
            nesting[idx] = escape / prefix.disk.radius;

            double orbit_excess = 0.0;
            for (Point z : child.samples) {
                for (std::size_t k = 0; k <= n + 1; ++k) {
                    orbit_excess = std::max(orbit_excess, std::abs(z) / p.abs_c() - 1.0);
                    z = forward_map(z, p);
                }
            }
            membership[idx] = orbit_excess;
        });

        for (std::size_t idx = 0; idx < pieces.size(); ++idx) {
            worst_contraction = std::max(worst_contraction, contraction[idx]);
            worst_enclosure = std::max(worst_enclosure, enclosure[idx]);
            worst_nesting = std::max(worst_nesting, nesting[idx]);
            worst_membership = std::max(worst_membership, membership[idx]);
            worst_diam_ratio = std::max(worst_diam_ratio, pieces[idx].sampled_diam / kn);
            worst_radius_ratio = std::max(worst_radius_ratio, pieces[idx].disk.radius / (std::sqrt(3.0) / 2.0 * kn));
            worst_spread = std::max(worst_spread, argument_spread(pieces[idx].samples));
        }
        parent = std::move(pieces);
    }

    const std::string depths = fmt::format("n=1..{} m={}", cfg.depth, cfg.samples);
    rec.add("pieces.contraction", worst_contraction <= 1.0 + 1e-9,
            fmt::format("{} max |G(z)-G(w)|*sqrt2*r_(n+1)/|z-w|={}", depths, real(worst_contraction)));
    rec.add("pieces.diameter_bound", depth0_ok && worst_diam_ratio <= 1.0,
            fmt::format("{} max sampled_diam/K_n={}", depths, real(worst_diam_ratio)));
    if (p.c().real() >= 0.0) {
        rec.add("pieces.argument_spread", worst_spread <= std::numbers::pi / 2.0 + 1e-9,
                fmt::format("{} max_spread={}", depths, real(worst_spread)));
    } else {
        rec.skip("pieces.argument_spread", "Re(c) < 0: the branch cut crosses D - c");
    }
    rec.add("cover.membership", worst_membership <= 1e-9,
            fmt::format("{} max |Q^k(z)|/|c|-1={}", depths, real(worst_membership)));
    rec.add("cover.nesting", worst_nesting <= 1e-12, fmt::format("{} max_excess/radius={}", depths, real(worst_nesting)));
    rec.add("enclosure.samples", worst_enclosure <= 1e-12,
            fmt::format("{} max_excess/radius={}", depths, real(worst_enclosure)));
    rec.add("enclosure.radius_bound", worst_radius_ratio < 1.0,
            fmt::format("{} max radius/(sqrt3/2*K_n)={}", depths, real(worst_radius_ratio)));

    double worst_pair_ratio = 0.0;
    for (std::size_t n = 1; n <= cfg.depth; ++n) {
        if ((std::size_t{4} << (2 * n)) > kDefaultMaxPairs) break;
        const std::vector<Disk> cover = difference_cover(piece_disks(generate_pieces(p, n, opts)), kDefaultMaxPairs, cfg.threads);
        const double limit = std::sqrt(3.0) * k_n(rb, n, d0);
        for (const Disk& d : cover) worst_pair_ratio = std::max(worst_pair_ratio, d.radius / limit);
    }
    rec.add("difference_bound.difference_radius", worst_pair_ratio < 1.0,
            fmt::format("{} max radius/(sqrt3*K_n)={}", depths, real(worst_pair_ratio)));

    double worst_identity = 0.0;
    for (std::size_t n = 1; n <= std::min<std::size_t>(cfg.depth, 12); ++n) {
        const BoundRow row = lemma4_bound(rb, n, d0);
        worst_identity = std::max(worst_identity, relative_error(worst_case_cover_area(n, row.K_n), row.bound));
    }
    rec.add("difference_bound.sum_identity", worst_identity <= 1e-12,
            fmt::format("n=1..{} max_rel={}", std::min<std::size_t>(cfg.depth, 12), real(worst_identity)));
}

void check_disk_difference(const VerifyConfig& cfg, Recorder& rec)
{
    Lcg64 rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
    double worst_gap = 0.0;
    double worst_paired_gap = 0.0;
    std::size_t overlapping = 0;
    bool violated = false;
    std::string failure;
    for (std::size_t t = 0; t < cfg.disk_pairs; ++t) {
        const double radius = rng.uniform(0.1, 2.0);
        const Disk d2{{rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0)}, radius};
        const Disk d1{{rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0)}, radius};
        try {
            const DiffCheck chk = sample_diff_check(d2, d1, cfg.disk_samples, rng.next());
            worst_gap = std::max(worst_gap, chk.predicted.radius - chk.sup);
            worst_paired_gap = std::max(worst_paired_gap, chk.predicted.radius - chk.sup_paired);
            overlapping += chk.contains_origin ? 1 : 0;
        } catch (const VerificationFailure& e) {
            violated = true;
            failure = e.what();
        }
    }
    rec.add("disk_difference.sampling", !violated && worst_gap <= 1e-2,
            violated ? failure
                     : fmt::format("pairs={} k={} max(2R-sup)={} paired max(2R-sup)={} overlapping={}",
                                   cfg.disk_pairs, cfg.disk_samples, real(worst_gap), real(worst_paired_gap),
                                   overlapping));

    const Disk d2{{0.31, -0.17}, 0.5};
    const Disk d1{{-1.13, 0.74}, 0.5};
    const GridMask diff = grid_minkowski_diff(rasterize_disk(d2, cfg.cell), rasterize_disk(d1, cfg.cell),
                                              CorrelationMethod::runs, {std::size_t{1} << 28, cfg.threads});
    const Disk predicted = minkowski_diff_disks(d2, d1);
    double worst_offset = 0.0;
    for (std::size_t row = 0; row < diff.height; ++row) {
        for (std::size_t col = 0; col < diff.width; ++col) {
            const double dist = std::abs(diff.cell_center(col, row) - predicted.center);
            if (diff.at(col, row) != (dist <= predicted.radius)) {
                worst_offset = std::max(worst_offset, std::abs(dist - predicted.radius));
            }
        }
    }
    rec.add("disk_difference.raster", worst_offset <= cfg.cell,
            fmt::format("cell={} max boundary mismatch={}", real(cfg.cell), real(worst_offset)));
}

bool symmetric_mask(const GridMask& g)
{
    for (std::size_t row = 0; row < g.height; ++row) {
        for (std::size_t col = 0; col < g.width; ++col) {
            if (g.at(col, row) != g.at(g.width - 1 - col, g.height - 1 - row)) return false;
        }
    }
    return true;
}

GridMask random_mask(std::size_t w, std::size_t h, double density, Lcg64& rng)
{
    GridMask g(Point{}, 1.0, w, h);
    for (auto& b : g.bits) b = rng.uniform() < density ? 1 : 0;
    return g;
}

void check_oracle(const Parameter& p, const VerifyConfig& cfg, Recorder& rec)
{
    const OracleOptions opts{std::size_t{1} << 28, cfg.threads};

    bool inner_le_outer = true;
    std::string areas;
    for (std::size_t n = 0; n <= cfg.depth + 1; ++n) {
        const double inner = mask_area(rasterize_preimage(p, n, cfg.cell, MaskMode::inner, opts));
        const GridMask outer = rasterize_preimage(p, n, cfg.cell, MaskMode::outer, opts);
        inner_le_outer = inner_le_outer && inner <= mask_area(outer);
        areas += fmt::format(" n{}:{}/{}", n, real(inner), real(mask_area(outer)));
    }
    rec.add("oracle.inner_le_outer", inner_le_outer, "inner/outer areas" + areas);

    // Difference-set rasters of Q^{-k}(D) for k = 1..depth+1.
    std::vector<double> diff_areas;
    bool symmetric = true;
    bool methods_agree = true;
    std::string method_detail;
    for (std::size_t k = 1; k <= cfg.depth + 1; ++k) {
        const GridMask mask = rasterize_preimage(p, k, cfg.cell, MaskMode::inner, opts);
        const GridMask diff = grid_minkowski_diff(mask, mask, CorrelationMethod::runs, opts);
        diff_areas.push_back(mask_area(diff));
        symmetric = symmetric && symmetric_mask(diff);
        if (k == 1) {
            methods_agree = methods_agree && grid_minkowski_diff(mask, mask, CorrelationMethod::fft, opts).bits == diff.bits;
            method_detail += fmt::format(" runs==fft on Q^-1(D) ({} cells)", mask.count());
        }
        if (mask.count() > 0 && mask.count() <= 3000) {
            methods_agree = methods_agree && grid_minkowski_diff(mask, mask, CorrelationMethod::direct, opts).bits == diff.bits;
            method_detail += fmt::format(" runs==direct on Q^-{}(D)", k);
        }
    }
    Lcg64 rng(cfg.seed + 7);
    for (auto [w, h, density] : {std::tuple{16, 16, 0.5}, std::tuple{64, 48, 0.3}, std::tuple{256, 256, 0.02}}) {
        const GridMask a = random_mask(w, h, density, rng);
        const GridMask b = random_mask(h, w, density, rng);
        const GridMask ref = grid_minkowski_diff(a, b, CorrelationMethod::direct, opts);
        methods_agree = methods_agree && grid_minkowski_diff(a, b, CorrelationMethod::runs, opts).bits == ref.bits &&
                        grid_minkowski_diff(a, b, CorrelationMethod::fft, opts).bits == ref.bits;
    }
    method_detail += " random masks up to 256x256";
    rec.add("oracle.correlation_methods", methods_agree, method_detail.substr(1));
    rec.add("oracle.symmetry", symmetric, fmt::format("k=1..{} X-X == -(X-X) cell by cell", cfg.depth + 1));

    bool monotone = true;
    std::string seq;
    for (std::size_t k = 0; k < diff_areas.size(); ++k) {
        if (k > 0) monotone = monotone && diff_areas[k] <= diff_areas[k - 1];
        seq += fmt::format(" {}", real(diff_areas[k]));
    }
    rec.add("oracle.monotone_in_n", monotone, "areas(Q^-k - Q^-k), k=1.." + std::to_string(cfg.depth + 1) + ":" + seq);

    for (std::size_t n = 1; n <= cfg.depth; ++n) {
        const SandwichRow row = sandwich_row(p, n, cfg.samples, cfg.cell, cfg.threads);
        rec.add(fmt::format("difference_bound.sandwich[n={}]", n), row.holds(),
                fmt::format("raster={} union={} (margin {}) sum={} bound={} raster_Q^-n={}", real(row.raster),
                            real(row.union_area), real(row.union_margin), real(row.sum), real(row.worst),
                            real(row.raster_literal)));
    }
}

}  // namespace

bool SandwichRow::holds() const noexcept
{
    return raster < union_area && union_area < worst && union_area <= sum + union_margin && sum < worst &&
           raster_literal < worst;
}

SandwichRow sandwich_row(const Parameter& p, std::size_t n, std::size_t samples, double cell, unsigned threads)
{
    const OracleOptions opts{std::size_t{1} << 28, threads};
    SandwichRow row;
    row.n = n;

    CoverOptions cover_opts;
    cover_opts.samples = samples;
    cover_opts.threads = threads;
    const std::vector<PieceCover> pieces = generate_pieces(p, n, cover_opts);
    const std::vector<Disk> cover = difference_cover(piece_disks(pieces), kDefaultMaxPairs, threads);
    const UnionArea u = union_area_grid(cover, cell, kDefaultMaxGridCells, threads);
    row.union_area = u.area;
    row.union_margin = u.margin;
    row.sum = sum_area(cover);
    row.worst = lemma4_bound(p, n, diam_I0_bound(p, DiamMode::certified)).bound;

    const GridMask covered = rasterize_preimage(p, n + 1, cell, MaskMode::inner, opts);
    row.raster = mask_area(grid_minkowski_diff(covered, covered, CorrelationMethod::runs, opts));
    const GridMask literal = rasterize_preimage(p, n, cell, MaskMode::inner, opts);
    row.raster_literal = mask_area(grid_minkowski_diff(literal, literal, CorrelationMethod::runs, opts));
    return row;
}

bool VerifyReport::all_passed() const noexcept
{
    return count(CheckStatus::fail) == 0;
}

std::size_t VerifyReport::count(CheckStatus status) const noexcept
{
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [&](const CheckResult& r) { return r.status == status; }));
}

std::string VerifyReport::to_text() const
{
    std::string out;
    for (const CheckResult& r : checks) out += fmt::format("{} {} {}\n", status_label(r.status), r.name, r.detail);
    out += fmt::format("verify: {} passed, {} failed, {} skipped\n", count(CheckStatus::pass),
                       count(CheckStatus::fail), count(CheckStatus::skip));
    return out;
}

std::string VerifyReport::to_json() const
{
    nlohmann::ordered_json j;
    j["schema"] = "juliadiff.verify/1";
    j["passed"] = all_passed();
    j["checks"] = nlohmann::ordered_json::array();
    for (const CheckResult& r : checks) {
        j["checks"].push_back({{"name", r.name}, {"status", std::string(status_label(r.status))}, {"detail", r.detail}});
    }
    return j.dump(2) + "\n";
}

VerifyReport run_verify(const VerifyConfig& config)
{
    if (config.depth < 1) throw DomainError("verify needs depth >= 1");
    if (!(config.cell > 0.0)) throw DomainError("cell size must be positive");
    const Parameter p(config.c);
    Recorder rec;
    check_geometry(p, config, rec);
    check_bounds(p, config, rec);
    check_cover(p, config, rec);
    check_disk_difference(config, rec);
    check_oracle(p, config, rec);
    return std::move(rec.report);
}

}  // namespace juliadiff
