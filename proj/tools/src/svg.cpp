#include "svg.hpp"

#include <map>
#include <sstream>
#include <utility>

namespace gj2d::svg {

namespace {

constexpr const char* kPalette[] = {"#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462",
                                    "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd", "#ccebc5", "#ffed6f"};
constexpr std::size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

struct Frame {
  double x0, y0, size, span;
  double px(double x) const { return x0 + x / span * size; }
  double py(double y) const { return y0 + size - y / span * size; }
};

void polygon(std::ostringstream& out, const Frame& fr, const std::vector<GridPoint>& pts, int q, const char* fill,
             const char* stroke, double width) {
  if (pts.size() == 1) {
    out << "<circle cx=\"" << fr.px(double(pts[0].x) / q) << "\" cy=\"" << fr.py(double(pts[0].y) / q)
        << "\" r=\"3\" fill=\"" << stroke << "\"/>\n";
    return;
  }
  out << "<polygon points=\"";
  for (auto p : pts) out << fr.px(double(p.x) / q) << ',' << fr.py(double(p.y) / q) << ' ';
  out << "\" fill=\"" << fill << "\" fill-opacity=\"0.6\" stroke=\"" << stroke << "\" stroke-width=\"" << width
      << "\"/>\n";
}

std::string short_name(const FaceId& f) {
  static constexpr const char* kLetters[] = {"P", "H", "V", "D", "L", "U"};
  return std::string(kLetters[static_cast<int>(f.kind)]) + "(" + std::to_string(f.anchor.x) + "," +
         std::to_string(f.anchor.y) + ")";
}

}  // namespace

std::string plot_function(const PwlFunction& pi) {
  const int q = pi.q();
  const double size = 100.0 * q;
  const Frame fr{40, 20, size, 1.0};
  std::map<std::pair<Frac, Frac>, std::size_t> colors;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size + 80 << "\" height=\"" << size + 60
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  for (long a = 0; a < q; ++a) {
    for (long b = 0; b < q; ++b) {
      for (auto kind : {FaceKind::TriLower, FaceKind::TriUpper}) {
        const FaceId t{kind, {a, b}, q};
        const Frac& base = kind == FaceKind::TriLower ? pi.at(a, b) : pi.at(a + 1, b + 1);
        const std::pair<Frac, Frac> grad =
            kind == FaceKind::TriLower
                ? std::make_pair(pi.at(a + 1, b) - base, pi.at(a, b + 1) - base)
                : std::make_pair(base - pi.at(a, b + 1), base - pi.at(a + 1, b));
        const std::size_t c = colors.try_emplace(grad, colors.size()).first->second;
        polygon(out, fr, t.vertices(), q, kPalette[c % kPaletteSize], "#555", 0.8);
      }
    }
  }
  for (long a = 0; a <= q; ++a)
    for (long b = 0; b <= q; ++b)
      out << "<text x=\"" << fr.px(double(a) / q) + 3 << "\" y=\"" << fr.py(double(b) / q) - 3 << "\">"
          << pi.at(a, b).to_string() << "</text>\n";
  out << "</svg>\n";
  return out.str();
}

std::string plot_faces(const std::vector<DeltaFace>& faces, int q) {
  const double panel = 160;
  const std::size_t columns = 6;
  const std::size_t rows = (faces.size() + columns - 1) / columns;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << columns * (panel + 20) + 20 << "\" height=\""
      << rows * (panel + 40) + 20 << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  for (std::size_t n = 0; n < faces.size(); ++n) {
    const Frame fr{20 + double(n % columns) * (panel + 20), 30 + double(n / columns) * (panel + 40), panel, 2.0};
    out << "<rect x=\"" << fr.x0 << "\" y=\"" << fr.y0 << "\" width=\"" << panel << "\" height=\"" << panel
        << "\" fill=\"none\" stroke=\"#aaa\"/>\n";
    for (int t = 1; t < 2 * q; ++t) {
      const double c = double(t) / q;
      out << "<line x1=\"" << fr.px(c) << "\" y1=\"" << fr.py(0) << "\" x2=\"" << fr.px(c) << "\" y2=\"" << fr.py(2)
          << "\" stroke=\"#eee\"/>\n<line x1=\"" << fr.px(0) << "\" y1=\"" << fr.py(c) << "\" x2=\"" << fr.px(2)
          << "\" y2=\"" << fr.py(c) << "\" stroke=\"#eee\"/>\n";
    }
    const DeltaFace& f = faces[n];
    polygon(out, fr, f.i.vertices(), q, "#e41a1c", "#e41a1c", 1.5);
    polygon(out, fr, f.j.vertices(), q, "#377eb8", "#377eb8", 1.5);
    polygon(out, fr, f.k.vertices(), q, "#4daf4a", "#4daf4a", 1.5);
    out << "<text x=\"" << fr.x0 << "\" y=\"" << fr.y0 - 6 << "\">" << n + 1 << ": " << short_name(f.i) << " " << short_name(f.j) << " "
        << short_name(f.k) << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace gj2d::svg
