#include "hypoly/section.hpp"

#include <cmath>
#include <sstream>

namespace hypoly {

namespace {

std::string dec(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

struct Frame {
  double min_x, min_y, max_x, max_y, scale;
  double px(double x) const { return (x - min_x) * scale + 20.0; }
  double py(double y) const { return (max_y - y) * scale + 20.0; }
};

}  // namespace

std::string render_section_svg(const SpecDocument& doc, const Polyhedron& poly,
                               const ExactScalar& z0, const ExactScalar& t0) {
  if (t0.sign() <= 0) throw InputError("section height t must be positive");
  if (doc.dimension != 4) throw InputError("sections are drawn for dimension 4 only");

  struct Circle {
    double cx, cy, r;
  };
  struct Line {
    double a, b, c;  // a x + b y = c
  };
  std::vector<Circle> circles;
  std::vector<Line> lines;
  ExactScalar t2 = t0 * t0;

  for (const auto& decl : doc.hyperplanes) {
    if (const auto* s = std::get_if<SphereDecl>(&decl)) {
      ExactScalar dz = z0 - s->center[2];
      ExactScalar r2 = s->radius_sq - t2 - dz * dz;
      if (r2.sign() > 0)
        circles.push_back(Circle{s->center[0].to_double(), s->center[1].to_double(),
                                 std::sqrt(r2.to_double())});
    } else {
      const auto& p = std::get<PlaneDecl>(decl);
      double a = p.normal[0].to_double();
      double b = p.normal[1].to_double();
      if (a == 0.0 && b == 0.0) continue;  // parallel to the section plane
      double c = (p.offset - p.normal[2] * z0).to_double();
      lines.push_back(Line{a, b, c});
    }
  }

  // Marks: finite vertices whose half-space coordinates hit the section exactly.
  std::vector<std::pair<double, double>> marks;
  const auto& lat = poly.lattice();
  for (int v = 0; v < lat.finite_count; ++v) {
    const Vec& x = lat.vertices[v].p.x;
    std::size_t n = x.size();
    ExactScalar denom = x[n - 1] - x[n - 2];  // 1/t
    if (denom.sign() <= 0) continue;
    ExactScalar t = denom.inverse();
    if (t != t0) continue;
    if (x[2] * t != z0) continue;
    marks.emplace_back((x[0] * t).to_double(), (x[1] * t).to_double());
  }

  Frame f{-1, -1, 1, 1, 100.0};
  for (const auto& c : circles) {
    f.min_x = std::min(f.min_x, c.cx - c.r);
    f.max_x = std::max(f.max_x, c.cx + c.r);
    f.min_y = std::min(f.min_y, c.cy - c.r);
    f.max_y = std::max(f.max_y, c.cy + c.r);
  }
  for (const auto& l : lines) {
    if (l.b == 0.0) {
      f.min_x = std::min(f.min_x, l.c / l.a);
      f.max_x = std::max(f.max_x, l.c / l.a);
    } else if (l.a == 0.0) {
      f.min_y = std::min(f.min_y, l.c / l.b);
      f.max_y = std::max(f.max_y, l.c / l.b);
    }
  }
  f.min_x -= 0.5;
  f.min_y -= 0.5;
  f.max_x += 0.5;
  f.max_y += 0.5;

  double w = (f.max_x - f.min_x) * f.scale + 40.0;
  double h = (f.max_y - f.min_y) * f.scale + 40.0;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << dec(w) << "\" height=\""
     << dec(h) << "\">\n";
  os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (const auto& l : lines) {
    // Clip the line a x + b y = c to the frame box.
    double x1, y1, x2, y2;
    if (std::abs(l.b) > std::abs(l.a)) {
      x1 = f.min_x;
      y1 = (l.c - l.a * x1) / l.b;
      x2 = f.max_x;
      y2 = (l.c - l.a * x2) / l.b;
    } else {
      y1 = f.min_y;
      x1 = (l.c - l.b * y1) / l.a;
      y2 = f.max_y;
      x2 = (l.c - l.b * y2) / l.a;
    }
    os << "  <line x1=\"" << dec(f.px(x1)) << "\" y1=\"" << dec(f.py(y1)) << "\" x2=\""
       << dec(f.px(x2)) << "\" y2=\"" << dec(f.py(y2))
       << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  }
  for (const auto& c : circles)
    os << "  <circle cx=\"" << dec(f.px(c.cx)) << "\" cy=\"" << dec(f.py(c.cy)) << "\" r=\""
       << dec(c.r * f.scale)
       << "\" fill=\"none\" stroke=\"steelblue\" stroke-width=\"1\"/>\n";
  for (const auto& m : marks)
    os << "  <circle cx=\"" << dec(f.px(m.first)) << "\" cy=\"" << dec(f.py(m.second))
       << "\" r=\"3\" fill=\"crimson\"/>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace hypoly
