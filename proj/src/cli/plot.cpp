#include "idealpow/cli/plot.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace idealpow::cli {
namespace {

std::vector<Monomial> by_decreasing_x(const MonomialIdeal& ideal) {
  if (ideal.arity() != 2) throw ArityError("staircase plots require arity 2");
  auto minimal = minimalize(ideal);
  std::vector<Monomial> gens(minimal.generators().begin(), minimal.generators().end());
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a[0] > b[0]; });
  return gens;
}

Exponent tick_step(Exponent extent) {
  Exponent step = 1;
  while (extent / step > 10) {
    if (extent / (step * 2) <= 10) return step * 2;
    if (extent / (step * 5) <= 10) return step * 5;
    step *= 10;
  }
  return step;
}

std::string svg_header(int width, int height) {
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  return out.str();
}

}  // namespace

std::vector<VGridCell> vgrid_cells(const SortedBivariateIdeal& ideal) {
  const auto square = power(ideal.ideal(), 2);
  std::set<Monomial> unclaimed(square.generators().begin(), square.generators().end());

  std::vector<VGridCell> cells;
  const std::size_t m = ideal.size();
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = i; j <= m; ++j) {
      Monomial p = pair_product(ideal, {i, j});
      const bool star = unclaimed.erase(p) > 0;
      cells.push_back({{i, j}, std::move(p), star ? CellMark::star : CellMark::dot});
    }
  }
  return cells;
}

std::optional<Exponent> detect_skeleton_scale(const MonomialIdeal& ideal) {
  const auto gens = by_decreasing_x(ideal);
  const std::size_t m = gens.size();
  if (m < 4) return std::nullopt;
  const Exponent t = gens[0][0] / 4;
  if (t < 1) return std::nullopt;
  const bool frame = gens[0] == Monomial{4 * t, 0} && gens[1] == Monomial{3 * t, t} &&
                     gens[m - 2] == Monomial{t, 3 * t} && gens[m - 1] == Monomial{0, 4 * t};
  if (!frame) return std::nullopt;
  for (std::size_t k = 2; k + 2 < m; ++k) {
    for (Exponent e : gens[k].exponents()) {
      if (e < 2 * t || e > 3 * t - 1) return std::nullopt;
    }
  }
  return t;
}

std::string render_vgrid_ascii(const SortedBivariateIdeal& ideal) {
  const auto cells = vgrid_cells(ideal);
  const std::size_t m = ideal.size();
  const int width = static_cast<int>(std::to_string(m).size()) + 1;

  std::vector<std::string> grid(m, std::string(m, ' '));
  for (const auto& c : cells) grid[c.v.j - 1][c.v.i - 1] = c.mark == CellMark::star ? '*' : '.';

  std::ostringstream out;
  out << "j\n";
  for (std::size_t j = m; j >= 1; --j) {
    std::string label = std::to_string(j);
    out << std::string(width - 1 - label.size(), ' ') << label << " |";
    std::string row;
    for (std::size_t i = 1; i <= m; ++i) {
      row += std::string(width - 1, ' ');
      row += grid[j - 1][i - 1];
    }
    while (!row.empty() && row.back() == ' ') row.pop_back();
    out << row << '\n';
  }
  out << std::string(width, ' ') << '+' << std::string(m * width, '-') << '\n';
  out << std::string(width + 1, ' ');
  for (std::size_t i = 1; i <= m; ++i) {
    std::string label = std::to_string(i);
    out << std::string(width - label.size(), ' ') << label;
  }
  out << "  i\n";
  return out.str();
}

std::string render_vgrid_svg(const SortedBivariateIdeal& ideal) {
  const auto cells = vgrid_cells(ideal);
  const int m = static_cast<int>(ideal.size());
  const int unit = 32;
  const int margin = 40;
  const int size = margin * 2 + unit * (m + 1);
  const auto px = [&](std::size_t i) { return margin + unit * static_cast<int>(i); };
  const auto py = [&](std::size_t j) { return size - margin - unit * static_cast<int>(j); };

  std::ostringstream out;
  out << svg_header(size, size);
  out << "<g stroke=\"black\" stroke-width=\"2\">\n"
      << "<line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(m + 1) << "\" y2=\"" << py(0) << "\"/>\n"
      << "<line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(0) << "\" y2=\"" << py(m + 1) << "\"/>\n"
      << "</g>\n";
  out << "<g font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">\n";
  for (int k = 1; k <= m; ++k) {
    out << "<text x=\"" << px(k) << "\" y=\"" << py(0) + 16 << "\">" << k << "</text>\n";
    out << "<text x=\"" << px(0) - 12 << "\" y=\"" << py(k) + 4 << "\">" << k << "</text>\n";
  }
  out << "</g>\n";
  for (const auto& c : cells) {
    if (c.mark == CellMark::star) {
      out << "<text class=\"star\" data-i=\"" << c.v.i << "\" data-j=\"" << c.v.j << "\" x=\"" << px(c.v.i)
          << "\" y=\"" << py(c.v.j) + 6 << "\" font-size=\"20\" text-anchor=\"middle\">*</text>\n";
    } else {
      out << "<circle class=\"dot\" data-i=\"" << c.v.i << "\" data-j=\"" << c.v.j << "\" cx=\"" << px(c.v.i)
          << "\" cy=\"" << py(c.v.j) << "\" r=\"3\"/>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_staircase_ascii(const MonomialIdeal& ideal) {
  const auto gens = by_decreasing_x(ideal);
  const MonomialIdeal minimal = minimalize(ideal);
  const auto scale = detect_skeleton_scale(ideal);
  const Exponent xmax = gens.front()[0] + 1;
  const Exponent ymax = gens.back()[1] + 1;

  std::ostringstream out;
  for (Exponent y = ymax; y >= 0; --y) {
    for (Exponent x = 0; x <= xmax; ++x) {
      const Monomial p{x, y};
      char c = '.';
      if (std::binary_search(minimal.generators().begin(), minimal.generators().end(), p)) {
        c = 'o';
      } else if (contains_monomial(minimal, p)) {
        c = '#';
      } else if (scale && x >= 2 * *scale && x <= 3 * *scale - 1 && y >= 2 * *scale && y <= 3 * *scale - 1) {
        c = ':';
      }
      out << c;
    }
    out << '\n';
  }
  return out.str();
}

std::string render_staircase_svg(const MonomialIdeal& ideal) {
  const auto gens = by_decreasing_x(ideal);
  const auto scale = detect_skeleton_scale(ideal);
  const Exponent extent = std::max(gens.front()[0], gens.back()[1]) + 1;
  const int plot = 400;
  const int margin = 40;
  const double unit = static_cast<double>(plot) / static_cast<double>(extent);
  const int size = plot + 2 * margin;
  const auto px = [&](Exponent x) { return margin + unit * static_cast<double>(x); };
  const auto py = [&](Exponent y) { return margin + plot - unit * static_cast<double>(y); };

  std::ostringstream out;
  out << svg_header(size, size);

  const Exponent step = scale ? *scale : tick_step(extent);
  out << "<g stroke=\"gray\" stroke-opacity=\"0.3\" font-family=\"sans-serif\" font-size=\"11\">\n";
  for (Exponent k = 0; k <= extent; k += step) {
    out << "<line x1=\"" << px(k) << "\" y1=\"" << py(0) << "\" x2=\"" << px(k) << "\" y2=\"" << py(extent)
        << "\"/>\n";
    out << "<line x1=\"" << px(0) << "\" y1=\"" << py(k) << "\" x2=\"" << px(extent) << "\" y2=\"" << py(k)
        << "\"/>\n";
    std::string label = std::to_string(k);
    if (scale) label = k == 0 ? "0" : (k == step ? "t" : std::to_string(k / step) + "t");
    out << "<text stroke=\"none\" fill=\"black\" text-anchor=\"middle\" x=\"" << px(k) << "\" y=\"" << py(0) + 16
        << "\">" << label << "</text>\n";
    out << "<text stroke=\"none\" fill=\"black\" text-anchor=\"end\" x=\"" << px(0) - 6 << "\" y=\"" << py(k) + 4
        << "\">" << label << "</text>\n";
  }
  out << "</g>\n";

  // Boundary of the ideal: from u_m up the y-axis side, stepping to u_1.
  out << "<polyline class=\"staircase\" fill=\"none\" stroke=\"darkviolet\" stroke-width=\"2\" points=\"";
  const Monomial& last = gens.back();
  out << px(last[0]) << ',' << py(extent) << ' ' << px(last[0]) << ',' << py(last[1]);
  for (std::size_t k = gens.size() - 1; k-- > 0;) {
    out << ' ' << px(gens[k][0]) << ',' << py(gens[k + 1][1]) << ' ' << px(gens[k][0]) << ',' << py(gens[k][1]);
  }
  out << ' ' << px(extent) << ',' << py(gens.front()[1]) << "\"/>\n";

  for (const auto& g : gens) {
    out << "<circle class=\"generator\" cx=\"" << px(g[0]) << "\" cy=\"" << py(g[1]) << "\" r=\"2.5\"/>\n";
  }

  if (scale) {
    const Exponent t = *scale;
    out << "<polyline class=\"q-corner\" fill=\"none\" stroke=\"red\" stroke-width=\"2\" points=\"" << px(2 * t)
        << ',' << py(extent) << ' ' << px(2 * t) << ',' << py(2 * t) << ' ' << px(extent) << ',' << py(2 * t)
        << "\"/>\n";
    out << "<rect class=\"box\" fill=\"none\" stroke=\"red\" stroke-dasharray=\"4 3\" x=\"" << px(2 * t)
        << "\" y=\"" << py(3 * t - 1) << "\" width=\"" << unit * static_cast<double>(t - 1) << "\" height=\""
        << unit * static_cast<double>(t - 1) << "\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace idealpow::cli
