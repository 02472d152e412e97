#include "tetramax/svg.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace tetramax {
namespace {

class SvgWriter {
 public:
  explicit SvgWriter(const std::vector<Vec2>& extent) {
    lo_ = {std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
    hi_ = lo_ * -1.0;
    for (Vec2 p : extent) {
      lo_ = {std::min(lo_.x, p.x), std::min(lo_.y, p.y)};
      hi_ = {std::max(hi_.x, p.x), std::max(hi_.y, p.y)};
    }
    if (extent.empty()) lo_ = hi_ = {0, 0};
    unit_ = std::max({hi_.x - lo_.x, hi_.y - lo_.y, 1e-9}) / 200;
    const double pad = 10 * unit_;
    lo_ = lo_ - Vec2{pad, pad};
    hi_ = hi_ + Vec2{pad, pad};
    out_.precision(10);
  }

  void polygon(const std::vector<Vec2>& pts, const char* stroke) {
    out_ << "  <polygon fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"" << unit_ << "\" points=\"";
    for (Vec2 p : pts) out_ << p.x << ',' << -p.y << ' ';
    out_ << "\"/>\n";
  }

  void line(Vec2 a, Vec2 b, const char* stroke) {
    out_ << "  <line x1=\"" << a.x << "\" y1=\"" << -a.y << "\" x2=\"" << b.x << "\" y2=\"" << -b.y
         << "\" stroke=\"" << stroke << "\" stroke-width=\"" << 1.5 * unit_ << "\"/>\n";
  }

  void dot(Vec2 p, const char* fill) {
    out_ << "  <circle cx=\"" << p.x << "\" cy=\"" << -p.y << "\" r=\"" << 2.5 * unit_ << "\" fill=\"" << fill
         << "\"/>\n";
  }

  void label(Vec2 p, const std::string& text) {
    out_ << "  <text x=\"" << p.x + 3 * unit_ << "\" y=\"" << -p.y - 3 * unit_ << "\" font-size=\""
         << 8 * unit_ << "\" font-family=\"sans-serif\">" << text << "</text>\n";
  }

  std::string str() const {
    std::ostringstream doc;
    doc.precision(10);
    // Model y is flipped on output, so the view box spans [-hi.y, -lo.y].
    doc << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << lo_.x << ' ' << -hi_.y << ' '
        << hi_.x - lo_.x << ' ' << hi_.y - lo_.y << "\">\n"
        << out_.str() << "</svg>\n";
    return doc.str();
  }

 private:
  Vec2 lo_, hi_;
  double unit_ = 1.0;
  std::ostringstream out_;
};

}  // namespace

std::string render_star_svg(const StarUnfolding& su, const CutLocusTree& tree,
                            const std::vector<std::string>& names) {
  SvgWriter w(su.boundary);
  w.polygon(su.boundary, "black");
  for (const CutEdge& e : tree.edges) w.line(tree.nodes[e.a].planar, tree.nodes[e.b].planar, "red");
  for (Vec2 s : su.sources) w.dot(s, "blue");
  for (int j = 0; j < su.size(); ++j) {
    const int v = su.vertex_ids[j];
    const std::string name =
        v < static_cast<int>(names.size()) && !names[v].empty() ? names[v] : "v" + std::to_string(v + 1);
    w.label(su.vertex_images[j], name);
  }
  return w.str();
}

std::string render_source_svg(const SourceUnfolding& su) {
  std::vector<Vec2> extent = su.boundary;
  extent.push_back({0, 0});
  SvgWriter w(extent);
  w.polygon(su.boundary, "red");
  w.dot({0, 0}, "blue");
  w.label({0, 0}, "x");
  return w.str();
}

}  // namespace tetramax
