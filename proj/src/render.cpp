#include "symdyn/render.hpp"

#include <sstream>

#include "symdyn/error.hpp"

namespace symdyn {

namespace {

int gray(Sym s, int symbols) { return symbols <= 1 ? 0 : 255 * s / (symbols - 1); }

std::size_t width(const Diagram& d) {
  std::size_t w = 0;
  for (const auto& r : d) w = std::max(w, r.size());
  return w;
}

}  // namespace

std::string render_pgm(const Diagram& d, int symbols) {
  const std::size_t w = width(d);
  std::ostringstream out;
  out << "P2\n" << w << " " << d.size() << "\n255\n";
  for (const auto& row : d) {
    for (std::size_t i = 0; i < w; ++i) {
      if (i) out << ' ';
      out << gray(i < row.size() ? row[i] : 0, symbols);
    }
    out << '\n';
  }
  return out.str();
}

std::string render_svg(const Diagram& d, int symbols, int cell) {
  const std::size_t w = width(d);
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w * cell << "\" height=\"" << d.size() * cell
      << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"rgb(0,0,0)\"/>\n";
  for (std::size_t r = 0; r < d.size(); ++r)
    for (std::size_t i = 0; i < d[r].size(); ++i) {
      if (d[r][i] == 0) continue;
      int g = gray(d[r][i], symbols);
      out << "<rect x=\"" << i * cell << "\" y=\"" << r * cell << "\" width=\"" << cell << "\" height=\"" << cell
          << "\" fill=\"rgb(" << g << "," << g << "," << g << ")\"/>\n";
    }
  out << "</svg>\n";
  return out.str();
}

Diagram window_rows(const Pattern& p, const Rect& window) {
  if (!window.finite() || window.empty()) throw InputError("window must be a finite nonempty rectangle");
  Diagram d;
  for (Int y = window.y1; y >= window.y0; --y) {
    std::vector<Sym> row;
    for (Int x = window.x0; x <= window.x1; ++x) {
      auto it = p.cells.find(GroupElem{x, y});
      row.push_back(it == p.cells.end() ? 0 : it->second);
    }
    d.push_back(std::move(row));
  }
  return d;
}

}  // namespace symdyn
