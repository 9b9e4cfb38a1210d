#pragma once

#include "juliadiff/bounds.hpp"
#include "juliadiff/cover.hpp"
#include "juliadiff/oracle.hpp"

#include <iosfwd>
#include <span>
#include <string>

namespace juliadiff {

/// 17 significant digits, enough to round-trip any double.
std::string format_real(double value);

/// CSV header `n,R_n,r_n,K_n,bound,ratio_step` followed by rows n = 1..bounds.size() - 2.
void write_bounds_csv(std::ostream& out, const RadiusBounds& bounds, double diam_I0);

/// CSV header `seq,center_re,center_im,radius,sampled_diam`, one row per piece.
void write_pieces_csv(std::ostream& out, std::span<const PieceCover> pieces);

/// CSV header `i,j,center_re,center_im,radius` in row-major pair order.
void write_difference_csv(std::ostream& out, std::span<const Disk> cover, std::size_t pieces);

/// Binary PGM (P5), 0 = out, 255 = in, top image row = highest grid row.
void write_pgm(std::ostream& out, const GridMask& mask);

/// Sidecar `{schema, origin, cell, width, height, mode, n, c, margin}` as a JSON string.
std::string mask_sidecar_json(const GridMask& mask);

}  // namespace juliadiff
