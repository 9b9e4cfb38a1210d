#include "juliadiff/cli.hpp"

#include "juliadiff/bounds.hpp"
#include "juliadiff/cover.hpp"
#include "juliadiff/errors.hpp"
#include "juliadiff/io.hpp"
#include "juliadiff/oracle.hpp"
#include "juliadiff/render.hpp"
#include "juliadiff/verify.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

namespace juliadiff {

namespace {

using Json = nlohmann::ordered_json;

struct RunConfig {
    double c_re = 0.0;
    double c_im = 0.0;
    std::size_t depth = 5;
    std::size_t samples = 512;
    double cell = 0.01;
    std::optional<double> epsilon;
    std::string output = "-";
    std::string format;
    std::string render;
    std::string prefix;
    std::size_t image_size = 800;
    unsigned threads = 1;
    std::size_t max_pairs = kDefaultMaxPairs;
    std::string diam_mode = "certified";
};

struct Caps {
    std::size_t grid_cells = kDefaultMaxGridCells;
    std::size_t points = std::size_t{1} << 24;
};

Caps caps_from_env()
{
    Caps caps;
    if (const char* raw = std::getenv(kMemoryCapEnv)) {
        char* end = nullptr;
        const unsigned long long mb = std::strtoull(raw, &end, 10);
        if (end == raw || *end != '\0' || mb == 0) {
            throw DomainError(std::string(kMemoryCapEnv) + " must be a positive integer number of MiB");
        }
        const std::size_t bytes = static_cast<std::size_t>(mb) << 20;
        caps.grid_cells = bytes;
        caps.points = bytes / sizeof(Point);
    }
    return caps;
}

// Opens `path` for writing, or returns the provided stream for "-".
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback)
    {
        if (path.empty() || path == "-") {
            stream_ = &fallback;
            return;
        }
        file_.open(path, std::ios::binary);
        if (!file_) throw std::runtime_error("cannot open " + path + " for writing");
        stream_ = &file_;
    }
    std::ostream& get() { return *stream_; }

private:
    std::ofstream file_;
    std::ostream* stream_ = nullptr;
};

void write_file(const std::string& path, const std::function<void(std::ostream&)>& writer)
{
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open " + path + " for writing");
    writer(file);
}

Json point_json(Point z)
{
    return Json{{"re", z.real()}, {"im", z.imag()}};
}

int run_bounds(const RunConfig& cfg, std::ostream& out)
{
    const Parameter p(cfg.c_re, cfg.c_im);
    if (cfg.depth < 1) throw DomainError("--depth must be at least 1");
    const DiamMode mode = cfg.diam_mode == "sampled" ? DiamMode::sampled : DiamMode::certified;
    const double d0 = diam_I0_bound(p, mode, 4096);
    const RadiusBounds rb(p, cfg.depth + 2);
    const bool condition = theorem_condition(p);
    std::optional<DecayParams> decay;
    if (condition) decay = decay_params(p, cfg.epsilon);

    Sink sink(cfg.output, out);
    std::ostream& os = sink.get();
    if (cfg.format == "json") {
        Json j;
        j["schema"] = "juliadiff.bounds/1";
        j["c"] = point_json(p.c());
        j["abs_c"] = p.abs_c();
        j["diam_I0"] = {{"mode", cfg.diam_mode}, {"value", d0}};
        j["R_limit"] = rb.R_limit();
        j["r_limit"] = rb.r_limit();
        j["theorem_condition"] = condition;
        j["theorem_polynomial"] = theorem_polynomial(p.abs_c());
        if (decay) {
            j["decay"] = {{"epsilon", decay->epsilon}, {"delta", decay->delta}, {"N", decay->N},
                          {"ratio", decay->ratio},     {"K_const", decay->K_const}};
        } else {
            j["decay"] = nullptr;
            j["warning"] = "decay not guaranteed";
        }
        j["rows"] = Json::array();
        for (std::size_t n = 1; n <= cfg.depth; ++n) {
            const BoundRow row = lemma4_bound(rb, n, d0);
            j["rows"].push_back({{"n", n}, {"R_n", rb.R(n)}, {"r_n", rb.r(n)}, {"K_n", row.K_n},
                                 {"bound", row.bound}, {"ratio_step", row.ratio_step}});
        }
        os << j.dump(2) << '\n';
        return exit_ok;
    }

    os << "# schema=juliadiff.bounds/1\n";
    os << fmt::format("# c={},{} abs_c={}\n", format_real(p.c().real()), format_real(p.c().imag()),
                      format_real(p.abs_c()));
    os << fmt::format("# diam_I0={} mode={}\n", format_real(d0), cfg.diam_mode);
    os << fmt::format("# R_limit={} r_limit={}\n", format_real(rb.R_limit()), format_real(rb.r_limit()));
    os << fmt::format("# theorem_condition={} polynomial={}\n", condition ? "true" : "false",
                      format_real(theorem_polynomial(p.abs_c())));
    if (decay) {
        os << fmt::format("# epsilon={} delta={} N={} ratio={} K_const={}\n", format_real(decay->epsilon),
                          format_real(decay->delta), decay->N, format_real(decay->ratio),
                          format_real(decay->K_const));
    } else {
        os << "# decay not guaranteed\n";
    }
    write_bounds_csv(os, rb, d0);
    return exit_ok;
}

std::vector<PieceCover> pieces_for(const Parameter& p, const RunConfig& cfg, const Caps& caps)
{
    CoverOptions opts;
    opts.samples = cfg.samples;
    opts.threads = cfg.threads;
    opts.max_points = caps.points;
    return generate_pieces(p, cfg.depth, opts);
}

int run_cover(const RunConfig& cfg, std::ostream& out)
{
    const Parameter p(cfg.c_re, cfg.c_im);
    const Caps caps = caps_from_env();
    const std::vector<PieceCover> pieces = pieces_for(p, cfg, caps);

    Sink sink(cfg.output, out);
    if (cfg.format == "json") {
        Json j;
        j["schema"] = "juliadiff.cover/1";
        j["c"] = point_json(p.c());
        j["depth"] = cfg.depth;
        j["samples"] = cfg.samples;
        j["pieces"] = Json::array();
        for (const PieceCover& piece : pieces) {
            j["pieces"].push_back({{"seq", piece.seq.to_string()}, {"center", point_json(piece.disk.center)},
                                   {"radius", piece.disk.radius}, {"sampled_diam", piece.sampled_diam}});
        }
        sink.get() << j.dump(2) << '\n';
    } else {
        write_pieces_csv(sink.get(), pieces);
    }
    if (!cfg.render.empty()) {
        const Canvas canvas = render_cover(p, pieces, cfg.image_size);
        write_file(cfg.render, [&](std::ostream& os) { canvas.write_ppm(os); });
    }
    return exit_ok;
}

int run_diff(const RunConfig& cfg, std::ostream& out)
{
    const Parameter p(cfg.c_re, cfg.c_im);
    if (cfg.depth < 1) throw DomainError("--depth must be at least 1");
    const Caps caps = caps_from_env();
    const std::vector<PieceCover> pieces = pieces_for(p, cfg, caps);
    const std::vector<Disk> cover = difference_cover(piece_disks(pieces), cfg.max_pairs, cfg.threads);
    const double sum = sum_area(cover);
    const UnionArea u = union_area_grid(cover, cfg.cell, caps.grid_cells, cfg.threads);
    const BoundRow row = lemma4_bound(p, cfg.depth, diam_I0_bound(p, DiamMode::certified));

    Sink sink(cfg.output, out);
    std::ostream& os = sink.get();
    if (cfg.format == "json") {
        Json j;
        j["schema"] = "juliadiff.diff/1";
        j["c"] = point_json(p.c());
        j["depth"] = cfg.depth;
        j["pieces"] = pieces.size();
        j["pairs"] = cover.size();
        j["sum_area"] = sum;
        j["union_area"] = u.area;
        j["union_margin"] = u.margin;
        j["cell"] = cfg.cell;
        j["K_n"] = row.K_n;
        j["lemma4_bound"] = row.bound;
        j["disks"] = Json::array();
        for (std::size_t k = 0; k < cover.size(); ++k) {
            j["disks"].push_back({{"i", k / pieces.size()}, {"j", k % pieces.size()},
                                  {"center", point_json(cover[k].center)}, {"radius", cover[k].radius}});
        }
        os << j.dump(2) << '\n';
    } else {
        os << "# schema=juliadiff.diff/1\n";
        os << fmt::format("# pieces={} pairs={} cell={}\n", pieces.size(), cover.size(), format_real(cfg.cell));
        os << fmt::format("# sum_area={} union_area={} union_margin={}\n", format_real(sum), format_real(u.area),
                          format_real(u.margin));
        os << fmt::format("# K_n={} lemma4_bound={}\n", format_real(row.K_n), format_real(row.bound));
        write_difference_csv(os, cover, pieces.size());
    }
    if (!cfg.render.empty()) {
        const Canvas canvas = render_difference(cover, cfg.image_size);
        write_file(cfg.render, [&](std::ostream& f) { canvas.write_ppm(f); });
    }
    return exit_ok;
}

int run_oracle(const RunConfig& cfg, std::ostream& out)
{
    const Parameter p(cfg.c_re, cfg.c_im);
    if (cfg.depth < 1) throw DomainError("--depth must be at least 1");
    const Caps caps = caps_from_env();
    const OracleOptions opts{caps.grid_cells, cfg.threads};

    const GridMask inner = rasterize_preimage(p, cfg.depth, cfg.cell, MaskMode::inner, opts);
    const GridMask outer = rasterize_preimage(p, cfg.depth, cfg.cell, MaskMode::outer, opts);
    const GridMask diff = grid_minkowski_diff(inner, inner, CorrelationMethod::runs, opts);
    const SandwichRow row = sandwich_row(p, cfg.depth, cfg.samples, cfg.cell, cfg.threads);

    if (!cfg.prefix.empty()) {
        for (const auto& [mask, tag] : {std::pair{&inner, "inner"}, std::pair{&outer, "outer"}, std::pair{&diff, "diff"}}) {
            const std::string base = cfg.prefix + "_" + tag;
            write_file(base + ".pgm", [&](std::ostream& f) { write_pgm(f, *mask); });
            write_file(base + ".json", [&](std::ostream& f) { f << mask_sidecar_json(*mask); });
        }
    }

    Json j;
    j["schema"] = "juliadiff.oracle/1";
    j["c"] = point_json(p.c());
    j["depth"] = cfg.depth;
    j["cell"] = cfg.cell;
    j["preimage"] = {{"inner_area", mask_area(inner)},
                     {"outer_area", mask_area(outer)},
                     {"outer_margin", outer.margin},
                     {"difference_area", mask_area(diff)}};
    j["sandwich"] = {{"raster", row.raster},
                     {"raster_set", "Q^-(n+1)(D), the union of the depth-n pieces"},
                     {"union_area", row.union_area},
                     {"union_margin", row.union_margin},
                     {"sum_area", row.sum},
                     {"lemma4_bound", row.worst},
                     {"raster_literal", row.raster_literal},
                     {"holds", row.holds()}};
    Sink sink(cfg.output, out);
    sink.get() << j.dump(2) << '\n';
    return row.holds() ? exit_ok : exit_verification_failed;
}

int run_verify_command(const RunConfig& cfg, std::size_t pairs, std::size_t disk_samples, std::uint64_t seed,
                       std::ostream& out)
{
    const Parameter p(cfg.c_re, cfg.c_im);
    VerifyConfig vc;
    vc.c = p.c();
    vc.depth = cfg.depth;
    vc.samples = cfg.samples;
    vc.cell = cfg.cell;
    vc.epsilon = cfg.epsilon;
    vc.threads = cfg.threads;
    vc.disk_pairs = pairs;
    vc.disk_samples = disk_samples;
    vc.seed = seed;
    const VerifyReport report = run_verify(vc);
    Sink sink(cfg.output, out);
    sink.get() << (cfg.format == "json" ? report.to_json() : report.to_text());
    return report.all_passed() ? exit_ok : exit_verification_failed;
}

void add_common(CLI::App& sub, RunConfig& cfg)
{
    sub.add_option("--c-re", cfg.c_re, "Real part of c")->required();
    sub.add_option("--c-im", cfg.c_im, "Imaginary part of c")->capture_default_str();
    sub.add_option("-o,--output", cfg.output, "Output path, - for standard output")->capture_default_str();
    sub.add_option("--threads", cfg.threads, "Worker threads")->check(CLI::Range(1u, 256u))->capture_default_str();
}

}  // namespace

int dispatch(std::span<const std::string> args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Certified bounds on the measure of Julia-set difference sets", "juliadiff"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::size_t disk_pairs = 100;
    std::size_t disk_samples = 100000;
    std::uint64_t seed = 20240501;
    double epsilon = 0.0;

    auto* bounds = app.add_subcommand("bounds", "Radius sequences, K_n and the difference-set bound per depth");
    add_common(*bounds, cfg);
    bounds->add_option("--depth", cfg.depth, "Largest n in the table")->check(CLI::Range(1, 100000))->capture_default_str();
    bounds->add_option("--epsilon", epsilon, "Slack in the decay rate (default: half the admissible margin)");
    bounds->add_option("--diam-mode", cfg.diam_mode, "diam I_0 value")
        ->check(CLI::IsMember({"certified", "sampled"}))
        ->capture_default_str();
    bounds->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    auto* cover = app.add_subcommand("cover", "Pieces of depth n with their enclosing disks");
    add_common(*cover, cfg);
    cover->add_option("--depth", cfg.depth, "Depth n (2^(n+1) pieces)")->check(CLI::Range(0, 30))->capture_default_str();
    cover->add_option("--samples", cfg.samples, "Boundary samples per piece")->check(CLI::Range(16, 1 << 20))->capture_default_str();
    cover->add_option("--render", cfg.render, "Write a PPM render of the piece disks");
    cover->add_option("--image-size", cfg.image_size, "Render size in pixels")->check(CLI::Range(16, 8192))->capture_default_str();
    cover->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    auto* diff = app.add_subcommand("diff", "Difference-disk cover with sum and union areas");
    add_common(*diff, cfg);
    diff->add_option("--depth", cfg.depth, "Depth n")->check(CLI::Range(1, 30))->capture_default_str();
    diff->add_option("--samples", cfg.samples, "Boundary samples per piece")->check(CLI::Range(16, 1 << 20))->capture_default_str();
    diff->add_option("--cell", cfg.cell, "Union grid cell size")->check(CLI::PositiveNumber)->capture_default_str();
    diff->add_option("--max-pairs", cfg.max_pairs, "Cap on the number of disk pairs")->capture_default_str();
    diff->add_option("--render", cfg.render, "Write a PPM render of the difference cover");
    diff->add_option("--image-size", cfg.image_size, "Render size in pixels")->check(CLI::Range(16, 8192))->capture_default_str();
    diff->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    auto* oracle = app.add_subcommand("oracle", "Raster masks, areas and the sandwich comparison");
    add_common(*oracle, cfg);
    oracle->add_option("--depth", cfg.depth, "Depth n")->check(CLI::Range(1, 30))->capture_default_str();
    oracle->add_option("--samples", cfg.samples, "Boundary samples per piece")->check(CLI::Range(16, 1 << 20))->capture_default_str();
    oracle->add_option("--cell", cfg.cell, "Raster cell size")->check(CLI::PositiveNumber)->capture_default_str();
    oracle->add_option("--prefix", cfg.prefix, "Write <prefix>_{inner,outer,diff}.pgm with JSON sidecars");

    auto* verify = app.add_subcommand("verify", "Run the full invariant suite; exit 0 iff every check passes");
    add_common(*verify, cfg);
    verify->add_option("--depth", cfg.depth, "Largest depth checked")->check(CLI::Range(1, 10))->capture_default_str();
    verify->add_option("--samples", cfg.samples, "Boundary samples per piece")->check(CLI::Range(16, 1 << 16))->capture_default_str();
    verify->add_option("--cell", cfg.cell, "Raster cell size")->check(CLI::PositiveNumber)->capture_default_str();
    verify->add_option("--epsilon", epsilon, "Slack in the decay rate (default: half the admissible margin)");
    verify->add_option("--disk-pairs", disk_pairs, "Random disk pairs for the sampling check")->capture_default_str();
    verify->add_option("--disk-samples", disk_samples, "Samples per disk")->check(CLI::Range(1000, 10000000))->capture_default_str();
    verify->add_option("--seed", seed, "Seed of the sampling generator")->capture_default_str();
    verify->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    for (CLI::App* sub : {bounds, verify}) {
        if (sub->parsed() && sub->count("--epsilon") > 0) cfg.epsilon = epsilon;
    }

    try {
        if (bounds->parsed()) return run_bounds(cfg, out);
        if (cover->parsed()) return run_cover(cfg, out);
        if (diff->parsed()) return run_diff(cfg, out);
        if (oracle->parsed()) return run_oracle(cfg, out);
        return run_verify_command(cfg, disk_pairs, disk_samples, seed, out);
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const CapacityError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_verification_failed;
    }
}

}  // namespace juliadiff
