#pragma once

#include <optional>
#include <string>
#include <vector>

#include "idealpow/tiny_squares.hpp"

namespace idealpow::cli {

enum class CellMark { star, dot };

struct VGridCell {
  IndexPair v;
  Monomial product;
  CellMark mark;
};

/// One cell per (i, j) in V. A cell is starred when u_i u_j is a minimal
/// generator of I^2 and no earlier cell (row-major in i, then j) carries
/// the same product; all other cells are dots.
std::vector<VGridCell> vgrid_cells(const SortedBivariateIdeal& ideal);

/// The t for which `ideal` is a skeleton plus points of the box
/// [2t, 3t-1]^2, if any. Arity must be 2.
std::optional<Exponent> detect_skeleton_scale(const MonomialIdeal& ideal);

std::string render_vgrid_ascii(const SortedBivariateIdeal& ideal);
std::string render_vgrid_svg(const SortedBivariateIdeal& ideal);

/// Staircase of a bivariate ideal: 'o' generator, '#' in the ideal,
/// ':' a box point outside the ideal (skeleton constructions only), '.' otherwise.
std::string render_staircase_ascii(const MonomialIdeal& ideal);
std::string render_staircase_svg(const MonomialIdeal& ideal);

}  // namespace idealpow::cli
