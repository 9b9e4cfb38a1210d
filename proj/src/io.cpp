#include "juliadiff/io.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include <ostream>

namespace juliadiff {

std::string format_real(double value)
{
    return fmt::format("{:.17g}", value);
}

void write_bounds_csv(std::ostream& out, const RadiusBounds& bounds, double diam_I0)
{
    out << "n,R_n,r_n,K_n,bound,ratio_step\n";
    for (std::size_t n = 1; n + 2 <= bounds.size(); ++n) {
        const BoundRow row = lemma4_bound(bounds, n, diam_I0);
        out << fmt::format("{},{},{},{},{},{}\n", n, format_real(bounds.R(n)), format_real(bounds.r(n)),
                           format_real(row.K_n), format_real(row.bound), format_real(row.ratio_step));
    }
}

void write_pieces_csv(std::ostream& out, std::span<const PieceCover> pieces)
{
    out << "seq,center_re,center_im,radius,sampled_diam\n";
    for (const PieceCover& piece : pieces) {
        out << fmt::format("{},{},{},{},{}\n", piece.seq.to_string(), format_real(piece.disk.center.real()),
                           format_real(piece.disk.center.imag()), format_real(piece.disk.radius),
                           format_real(piece.sampled_diam));
    }
}

void write_difference_csv(std::ostream& out, std::span<const Disk> cover, std::size_t pieces)
{
    out << "i,j,center_re,center_im,radius\n";
    for (std::size_t k = 0; k < cover.size(); ++k) {
        const Disk& d = cover[k];
        out << fmt::format("{},{},{},{},{}\n", k / pieces, k % pieces, format_real(d.center.real()),
                           format_real(d.center.imag()), format_real(d.radius));
    }
}

void write_pgm(std::ostream& out, const GridMask& mask)
{
    out << "P5\n" << mask.width << ' ' << mask.height << "\n255\n";
    std::string line(mask.width, '\0');
    for (std::size_t r = mask.height; r-- > 0;) {
        for (std::size_t col = 0; col < mask.width; ++col) line[col] = mask.at(col, r) ? '\xff' : '\0';
        out.write(line.data(), static_cast<std::streamsize>(line.size()));
    }
}

std::string mask_sidecar_json(const GridMask& mask)
{
    nlohmann::ordered_json j;
    j["schema"] = "juliadiff.mask/1";
    j["origin"] = {mask.origin.real(), mask.origin.imag()};
    j["cell"] = mask.cell;
    j["width"] = mask.width;
    j["height"] = mask.height;
    j["mode"] = std::string(to_string(mask.mode));
    j["n"] = mask.depth;
    j["c"] = {mask.c.real(), mask.c.imag()};
    j["margin"] = mask.margin;
    return j.dump(2) + "\n";
}

}  // namespace juliadiff
