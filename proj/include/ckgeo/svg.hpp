#ifndef CKGEO_SVG_HPP_
#define CKGEO_SVG_HPP_

// Deterministic SVG rendering of a word's lattice path. The a-axis points
// right, the b-axis up; all coordinates are integer multiples of the cell
// size, so output depends only on the RenderSpec.

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "element.hpp"
#include "geodesics.hpp"
#include "moves.hpp"
#include "words.hpp"

namespace ckgeo {

struct RenderSpec {
  Word word;
  int cell = 40;
  bool orientation_marks = false;
  bool young = false;
};

namespace detail {

struct Canvas {
  std::int64_t xmin, xmax, ymin, ymax;
  std::int64_t cell;

  std::int64_t px(std::int64_t x) const { return (x - xmin + 1) * cell; }
  std::int64_t py(std::int64_t y) const { return (ymax - y + 1) * cell; }
  std::int64_t width() const { return (xmax - xmin + 2) * cell; }
  std::int64_t height() const { return (ymax - ymin + 2) * cell; }

  void include(std::int64_t x, std::int64_t y) {
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  }
};

struct ShadedCell {
  std::int64_t x, y;  // lower-left corner
  bool upper;
};

inline std::vector<ShadedCell> young_cells(const YoungDecomposition& y) {
  const auto ref = horizontal_edges(std_rep(y.element));
  std::vector<ShadedCell> out;
  auto shade = [&](const std::vector<YoungDiagram>& side, bool upper) {
    for (const auto& d : side) {
      for (std::size_t j = 0; j < d.heights.size(); ++j) {
        const auto& e = ref.at(d.start + j);
        std::int64_t from = e.from_x, to = e.from_x + e.direction;
        if (y.mirrored) {
          from = -from;
          to = -to;
        }
        const std::int64_t col = std::min(from, to);
        for (std::int64_t h = 0; h < d.heights[j]; ++h) {
          out.push_back({col, upper ? e.level + h : e.level - h - 1, upper});
        }
      }
    }
  };
  shade(y.upper, true);
  shade(y.lower, false);
  return out;
}

}  // namespace detail

inline std::string render_svg(const RenderSpec& spec) {
  const LatticePath path = lattice_path(spec.word);
  detail::Canvas cv{0, 0, 0, 0, spec.cell};
  for (const auto& p : path.points) cv.include(p.x, p.y);

  std::vector<detail::ShadedCell> shaded;
  std::vector<LatticePoint> reference;
  Rectangle rect{};
  if (spec.young) {
    const YoungDecomposition y = young_decomposition(spec.word);
    rect = y.rectangle;
    for (const auto& c : {rect.a, rect.b, rect.c, rect.d}) cv.include(c.x, c.y);
    shaded = detail::young_cells(y);
    Word ref_word = std_rep(y.element);
    if (y.mirrored) ref_word = apply_letter_map(LetterMap::flip_a, ref_word);
    reference = lattice_path(ref_word).points;
    for (const auto& p : reference) cv.include(p.x, p.y);
  }

  std::ostringstream out;
  const std::int64_t cell = spec.cell;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << cv.width()
      << "\" height=\"" << cv.height() << "\" viewBox=\"0 0 " << cv.width() << ' '
      << cv.height() << "\">\n";
  out << "<title>" << format_word(spec.word) << " = " << to_string(evaluate(spec.word))
      << "</title>\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << cv.width() << "\" height=\"" << cv.height()
      << "\" fill=\"white\"/>\n";

  for (const auto& c : shaded) {
    out << "<rect x=\"" << cv.px(c.x) << "\" y=\"" << cv.py(c.y + 1) << "\" width=\"" << cell
        << "\" height=\"" << cell << "\" fill=\"" << (c.upper ? "#9ecae1" : "#fdae6b")
        << "\"/>\n";
  }

  out << "<g stroke=\"#bbbbbb\" stroke-width=\"1\">\n";
  for (std::int64_t x = cv.xmin - 1; x <= cv.xmax + 1; ++x) {
    out << "<line x1=\"" << cv.px(x) << "\" y1=\"0\" x2=\"" << cv.px(x) << "\" y2=\""
        << cv.height() << "\"/>\n";
  }
  for (std::int64_t y = cv.ymin - 1; y <= cv.ymax + 1; ++y) {
    out << "<line x1=\"0\" y1=\"" << cv.py(y) << "\" x2=\"" << cv.width() << "\" y2=\""
        << cv.py(y) << "\"/>\n";
  }
  out << "</g>\n";

  if (spec.orientation_marks) {
    // positive traversal is clockwise in even columns, counterclockwise in odd ones
    out << "<g font-size=\"" << cell / 2 << "\" text-anchor=\"middle\" fill=\"#888888\">\n";
    for (std::int64_t x = cv.xmin - 1; x <= cv.xmax; ++x) {
      const char* glyph = detail::parity(x) ? "↺" : "↻";
      for (std::int64_t y = cv.ymin - 1; y <= cv.ymax; ++y) {
        out << "<text x=\"" << cv.px(x) + cell / 2 << "\" y=\"" << cv.py(y) - cell / 3 << "\">"
            << glyph << "</text>\n";
      }
    }
    out << "</g>\n";
  }

  if (spec.young) {
    const std::int64_t x0 = std::min(rect.a.x, rect.b.x), x1 = std::max(rect.a.x, rect.b.x);
    const std::int64_t y0 = std::min(rect.b.y, rect.c.y), y1 = std::max(rect.b.y, rect.c.y);
    out << "<rect x=\"" << cv.px(x0) << "\" y=\"" << cv.py(y1) << "\" width=\""
        << (x1 - x0) * cell << "\" height=\"" << (y1 - y0) * cell
        << "\" fill=\"none\" stroke=\"#555555\" stroke-width=\"2\" stroke-dasharray=\"6,4\"/>\n";
    out << "<polyline fill=\"none\" stroke=\"#777777\" stroke-width=\"2\" "
           "stroke-dasharray=\"2,4\" points=\"";
    for (std::size_t i = 0; i < reference.size(); ++i) {
      out << (i ? " " : "") << cv.px(reference[i].x) << ',' << cv.py(reference[i].y);
    }
    out << "\"/>\n";
  }

  out << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"" << std::max<std::int64_t>(2, cell / 10)
      << "\" stroke-linejoin=\"round\" points=\"";
  for (std::size_t i = 0; i < path.points.size(); ++i) {
    out << (i ? " " : "") << cv.px(path.points[i].x) << ',' << cv.py(path.points[i].y);
  }
  out << "\"/>\n";
  const auto end = path.end();
  out << "<circle cx=\"" << cv.px(end.x) << "\" cy=\"" << cv.py(end.y) << "\" r=\"" << cell / 8
      << "\" fill=\"#1f77b4\"/>\n";
  out << "<circle cx=\"" << cv.px(0) << "\" cy=\"" << cv.py(0) << "\" r=\"" << cell / 6
      << "\" fill=\"red\"/>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace ckgeo

#endif  // CKGEO_SVG_HPP_
