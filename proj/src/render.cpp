#include "okada/render.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace okada {

Format parse_format(std::string_view name) {
  if (name == "svg") return Format::svg;
  if (name == "tikz") return Format::tikz;
  throw std::invalid_argument("unknown render format \"" + std::string(name) + "\" (use svg or tikz)");
}

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v + 0.0);
  std::string s = buf;
  if (s == "-0.00") s = "0.00";
  return s;
}

struct Point {
  double x, y;
};

// Layout in abstract units: y grows upwards, endpoint i sits at height i - 1.
struct ArcLayout {
  int rank;
  double width;

  explicit ArcLayout(int n) : rank(n), width(1.0 + 0.5 * n) {}
  Point at(int endpoint) const {
    return endpoint > 0 ? Point{0.0, endpoint - 1.0} : Point{width, -endpoint - 1.0};
  }
};

struct Curve {
  Point from, c1, c2, to;
  bool straight;
  Point middle() const {
    if (straight) return {(from.x + to.x) / 2, (from.y + to.y) / 2};
    return {(from.x + 3 * c1.x + 3 * c2.x + to.x) / 8, (from.y + 3 * c1.y + 3 * c2.y + to.y) / 8};
  }
};

Curve arc_curve(const ArcLayout& layout, const Arc& a) {
  const Point p = layout.at(a.a), q = layout.at(a.b);
  if (a.propagating()) return {p, p, q, q, true};
  const Point lo = p.y <= q.y ? p : q, hi = p.y <= q.y ? q : p;
  const double span = hi.y - lo.y, dir = a.a > 0 ? 1.0 : -1.0;
  return {lo, {lo.x + dir * 0.5 * span, lo.y + 0.25 * span}, {hi.x + dir * 0.5 * span, hi.y - 0.25 * span}, hi, false};
}

constexpr double kUnit = 40.0, kMargin = 30.0;

struct SvgCanvas {
  double height_units, width_units;
  std::ostringstream body;

  double px(double x) const { return kMargin + x * kUnit; }
  double py(double y) const { return kMargin + (height_units - y) * kUnit; }

  void path(const Curve& c, std::string_view extra = "") {
    body << "  <path d=\"M " << num(px(c.from.x)) << ' ' << num(py(c.from.y));
    if (c.straight)
      body << " L " << num(px(c.to.x)) << ' ' << num(py(c.to.y));
    else
      body << " C " << num(px(c.c1.x)) << ' ' << num(py(c.c1.y)) << ", " << num(px(c.c2.x)) << ' '
           << num(py(c.c2.y)) << ", " << num(px(c.to.x)) << ' ' << num(py(c.to.y));
    body << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"" << extra << "/>\n";
  }
  void label(Point p, int value) {
    body << "  <circle cx=\"" << num(px(p.x)) << "\" cy=\"" << num(py(p.y))
         << "\" r=\"9\" fill=\"white\" stroke=\"black\"/>\n";
    text({p.x, p.y}, std::to_string(value), "middle", "");
  }
  void text(Point p, const std::string& s, std::string_view anchor, std::string_view extra) {
    body << "  <text x=\"" << num(px(p.x)) << "\" y=\"" << num(py(p.y) + 4) << "\" text-anchor=\"" << anchor
         << "\" font-family=\"serif\" font-size=\"12\"" << extra << ">" << s << "</text>\n";
  }
  std::string finish() const {
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(2 * kMargin + width_units * kUnit)
        << "\" height=\"" << num(2 * kMargin + height_units * kUnit) << "\">\n"
        << body.str() << "</svg>\n";
    return out.str();
  }
};

std::string tikz_set(const FibonacciSet& s, bool with_rank) {
  std::string out;
  if (s.empty()) {
    out = "\\emptyset";
  } else {
    out = "\\{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + std::to_string(s.elements()[i]);
    out += "\\}";
  }
  if (with_rank) out += "_{" + std::to_string(s.rank()) + "}";
  return out;
}

std::string plain_set(const FibonacciSet& s, bool with_rank) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s.elements()[i]);
  out += "}";
  if (with_rank) out += "_" + std::to_string(s.rank());
  return out;
}

std::string tikz_point(Point p) { return "(" + num(p.x) + "," + num(p.y) + ")"; }

std::string tikz_preamble() {
  return "\\begin{tikzpicture}[xscale=0.7,yscale=0.7,thick]\n"
         "\\tikzstyle{mid}=[draw,fill=white,shape=circle,inner sep=1pt]\n";
}

void tikz_columns(std::ostringstream& out, const ArcLayout& layout, bool right) {
  for (int i = 1; i <= layout.rank; ++i) {
    out << "\\node[left] at " << tikz_point(layout.at(i)) << " {$" << i << "$};\n";
    if (right) out << "\\node[right] at " << tikz_point(layout.at(-i)) << " {$\\overline{" << i << "}$};\n";
  }
}

void tikz_arc(std::ostringstream& out, const Curve& c, int height) {
  out << "\\draw " << tikz_point(c.from);
  if (c.straight)
    out << " -- ";
  else
    out << " .. controls " << tikz_point(c.c1) << " and " << tikz_point(c.c2) << " .. ";
  out << tikz_point(c.to) << ";\n";
  out << "\\node[mid] at " << tikz_point(c.middle()) << " {$" << height << "$};\n";
}

void svg_columns(SvgCanvas& svg, const ArcLayout& layout, bool right) {
  for (int i = 1; i <= layout.rank; ++i) {
    const Point l = layout.at(i);
    svg.body << "  <circle cx=\"" << num(svg.px(l.x)) << "\" cy=\"" << num(svg.py(l.y)) << "\" r=\"3\"/>\n";
    svg.text({l.x - 0.3, l.y}, std::to_string(i), "end", "");
    if (right) {
      const Point r = layout.at(-i);
      svg.body << "  <circle cx=\"" << num(svg.px(r.x)) << "\" cy=\"" << num(svg.py(r.y)) << "\" r=\"3\"/>\n";
      svg.text({r.x + 0.3, r.y}, std::to_string(i), "start", " text-decoration=\"overline\"");
    }
  }
}

struct HasseNode {
  std::vector<std::string> svg_lines;
  std::string tikz_label;
  int level;
};

std::string render_hasse(const std::vector<HasseNode>& nodes,
                         const std::vector<std::pair<std::size_t, std::size_t>>& edges, Format f,
                         double spacing) {
  std::map<int, std::vector<std::size_t>> levels;
  for (std::size_t i = 0; i < nodes.size(); ++i) levels[nodes[i].level].push_back(i);
  std::vector<Point> at(nodes.size());
  double half_width = 0;
  for (const auto& [level, members] : levels) {
    const double offset = (static_cast<double>(members.size()) - 1) / 2;
    half_width = std::max(half_width, offset * spacing);
    for (std::size_t k = 0; k < members.size(); ++k)
      at[members[k]] = {(static_cast<double>(k) - offset) * spacing, static_cast<double>(level) * 1.5};
  }
  const int top = levels.empty() ? 0 : levels.rbegin()->first;
  std::ostringstream out;
  if (f == Format::tikz) {
    out << "\\begin{tikzpicture}[>=latex]\n";
    for (std::size_t i = 0; i < nodes.size(); ++i)
      out << "\\node[align=center] (n" << i << ") at " << tikz_point(at[i]) << " {" << nodes[i].tikz_label << "};\n";
    for (const auto& [lo, hi] : edges) out << "\\draw[->] (n" << lo << ") -- (n" << hi << ");\n";
    out << "\\end{tikzpicture}\n";
    return out.str();
  }
  SvgCanvas svg{top * 1.5 + 1.0, 2 * half_width + 2.0, {}};
  auto shift = [&](Point p) { return Point{p.x + half_width + 1.0, p.y + 0.5}; };
  for (const auto& [lo, hi] : edges) {
    const Point a = shift(at[lo]), b = shift(at[hi]);
    svg.body << "  <line x1=\"" << num(svg.px(a.x)) << "\" y1=\"" << num(svg.py(a.y) - 10) << "\" x2=\""
             << num(svg.px(b.x)) << "\" y2=\"" << num(svg.py(b.y) + 14) << "\" stroke=\"black\"/>\n";
  }
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const Point p = shift(at[i]);
    const auto& lines = nodes[i].svg_lines;
    for (std::size_t k = 0; k < lines.size(); ++k)
      svg.text({p.x, p.y + 0.15 * (static_cast<double>(lines.size()) - 1) - 0.3 * static_cast<double>(k)}, lines[k],
               "middle", "");
  }
  return svg.finish();
}

}  // namespace

std::string render(const ArcDiagram& d, Format f) {
  const ArcLayout layout(d.rank());
  const auto arcs = d.arcs();
  if (f == Format::tikz) {
    std::ostringstream out;
    out << tikz_preamble();
    tikz_columns(out, layout, true);
    for (const Arc& a : arcs) tikz_arc(out, arc_curve(layout, a), a.height);
    out << "\\end{tikzpicture}\n";
    return out.str();
  }
  SvgCanvas svg{std::max(0, d.rank() - 1) + 0.0, layout.width, {}};
  svg.width_units = layout.width;
  svg_columns(svg, layout, true);
  for (const Arc& a : arcs) svg.path(arc_curve(layout, a));
  for (const Arc& a : arcs) svg.label(arc_curve(layout, a).middle(), a.height);
  return svg.finish();
}

std::string render(const HalfArcDiagram& h, Format f) {
  const ArcLayout layout(h.rank());
  const auto full = h.full_arcs();
  const auto half = h.half_arcs();
  const double end = layout.width / 2;
  if (f == Format::tikz) {
    std::ostringstream out;
    out << tikz_preamble();
    tikz_columns(out, layout, false);
    for (const Arc& a : full) tikz_arc(out, arc_curve(layout, a), a.height);
    for (const HalfArc& a : half) {
      const Point p = layout.at(a.node), q{end, p.y};
      out << "\\draw " << tikz_point(p) << " -- " << tikz_point(q) << ";\n";
      out << "\\node[mid] at " << tikz_point(q) << " {$" << a.height << "$};\n";
    }
    out << "\\end{tikzpicture}\n";
    return out.str();
  }
  SvgCanvas svg{std::max(0, h.rank() - 1) + 0.0, end + 0.5, {}};
  svg_columns(svg, layout, false);
  for (const Arc& a : full) svg.path(arc_curve(layout, a));
  for (const HalfArc& a : half) {
    const Point p = layout.at(a.node);
    svg.path({p, p, {end, p.y}, {end, p.y}, true});
  }
  for (const Arc& a : full) svg.label(arc_curve(layout, a).middle(), a.height);
  for (const HalfArc& a : half) svg.label({end, layout.at(a.node).y}, a.height);
  return svg.finish();
}

std::string render(const Heap& heap, Format f) {
  const int rows = std::max(0, heap.rank() - 1);
  const int diagonals = std::max(rows, heap.diagonal_count());
  // box (d, r) is centred at (2d - r, r), half-diagonal 1
  struct Box {
    int d, r;
    bool black;
  };
  std::vector<Box> boxes;
  for (int d = 1; d <= diagonals; ++d)
    for (int r = std::min(d, rows); r >= 1; --r) boxes.push_back({d, r, heap.occupied(d, r)});
  std::ostringstream out;
  if (f == Format::tikz) {
    out << "\\begin{tikzpicture}[scale=0.5]\n";
    for (const Box& b : boxes) {
      const double x = 2.0 * b.d - b.r, y = b.r;
      out << (b.black ? "\\filldraw[fill=black]" : "\\draw") << " (" << num(x) << "," << num(y - 1) << ") -- ("
          << num(x + 1) << "," << num(y) << ") -- (" << num(x) << "," << num(y + 1) << ") -- (" << num(x - 1) << ","
          << num(y) << ") -- cycle;\n";
      out << "\\node" << (b.black ? "[white]" : "") << " at (" << num(x) << "," << num(y) << ") {$" << b.r << "$};\n";
    }
    out << "\\end{tikzpicture}\n";
    return out.str();
  }
  const double scale = 0.5;
  SvgCanvas svg{(rows + 1) * scale, (2.0 * diagonals) * scale, {}};
  for (const Box& b : boxes) {
    const double x = (2.0 * b.d - b.r) * scale, y = b.r * scale;
    svg.body << "  <polygon points=\"" << num(svg.px(x)) << ',' << num(svg.py(y - scale)) << ' '
             << num(svg.px(x + scale)) << ',' << num(svg.py(y)) << ' ' << num(svg.px(x)) << ','
             << num(svg.py(y + scale)) << ' ' << num(svg.px(x - scale)) << ',' << num(svg.py(y)) << "\" fill=\""
             << (b.black ? "black" : "white") << "\" stroke=\"black\"/>\n";
    svg.text({x, y}, std::to_string(b.r), "middle", b.black ? " fill=\"white\"" : "");
  }
  return svg.finish();
}

std::string render_yf_hasse(int max_rank, Format f) {
  if (max_rank < 0) throw std::invalid_argument("negative rank");
  std::vector<HasseNode> nodes;
  std::map<FibonacciSet, std::size_t> index;
  for (int n = 0; n <= max_rank; ++n) {
    for (const FibonacciSet& s : enumerate_yfs(n)) {
      const std::string word = s.rank() == 0 ? "" : set_to_word(s).letters();
      index[s] = nodes.size();
      nodes.push_back({{word.empty() ? "ε" : word, plain_set(s, true)},
                       "$" + (word.empty() ? std::string("\\varepsilon") : word) + "$\\\\$" + tikz_set(s, true) + "$",
                       n});
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (int n = 0; n < max_rank; ++n)
    for (const FibonacciSet& s : enumerate_yfs(n))
      for (const FibonacciSet& t : yf_covers(s)) edges.emplace_back(index.at(s), index.at(t));
  return render_hasse(nodes, edges, f, 2.2);
}

std::string render_dominance_hasse(int rank, Format f) {
  const DominanceLattice lattice(rank);
  std::vector<HasseNode> nodes;
  for (std::size_t i = 0; i < lattice.elements().size(); ++i) {
    const FibonacciSet& s = lattice.elements()[i];
    nodes.push_back({{plain_set(s, false)}, "$" + tikz_set(s, false) + "$", lattice.level(i)});
  }
  return render_hasse(nodes, lattice.hasse_edges(), f, 2.2);
}

}  // namespace okada
