#include "pullback/render.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <sstream>
#include <tuple>

#include "pullback/error.hpp"

namespace pullback {

std::string to_dot(const MapDocument& doc) {
  const auto& map = doc.map;
  std::ostringstream os;
  os << "graph map {\n";
  os << "  graph [genus=" << map.genus() << ", faces=" << map.face_count() << "];\n";
  os << "  node [shape=circle];\n";
  for (int v = 0; v < map.vertex_count(); ++v) {
    os << "  v" << v << " [label=\"" << v;
    if (doc.labels) os << ":" << (*doc.labels)[v];
    os << "\"];\n";
  }
  for (int e = 0; e < map.edge_count(); ++e) {
    const Dart x = map.edges()[e][0];
    const Dart y = map.edges()[e][1];
    os << "  v" << map.vertex_of(x) << " -- v" << map.vertex_of(y) << " [label=\"e" << e;
    if (doc.colors) {
      os << " " << color_char((*doc.colors)[map.face_of(x)])
         << color_char((*doc.colors)[map.face_of(y)]);
    }
    os << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

namespace {

struct Point {
  double x, y;
};

std::string num(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(1) << v;
  return os.str();
}

void header(std::ostringstream& os, int width, int height) {
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  os << "<g fill=\"none\" stroke=\"black\" stroke-width=\"1.5\">\n";
}

void vertices(std::ostringstream& os, const MapDocument& doc, const std::vector<Point>& at) {
  os << "</g>\n<g font-family=\"sans-serif\" font-size=\"12\">\n";
  for (std::size_t v = 0; v < at.size(); ++v) {
    os << "<circle cx=\"" << num(at[v].x) << "\" cy=\"" << num(at[v].y)
       << "\" r=\"4\" fill=\"black\"/>\n";
    os << "<text x=\"" << num(at[v].x + 6) << "\" y=\"" << num(at[v].y + 16) << "\">"
       << (doc.labels ? std::to_string((*doc.labels)[v]) : "v" + std::to_string(v))
       << "</text>\n";
  }
  os << "</g>\n</svg>\n";
}

std::string real_axis_svg(const MapDocument& doc) {
  const auto& map = doc.map;
  const auto& real = *doc.real_cycle;
  const int n = static_cast<int>(real.size());
  const double axis = 200.0;
  const int width = 80 * (n + 1);
  std::vector<Point> at(map.vertex_count(), {0, axis});
  std::vector<int> pos(map.vertex_count(), -1);
  for (int k = 0; k < n; ++k) {
    at[map.vertex_of(real[k])].x = 80.0 * (k + 1);
    pos[map.vertex_of(real[k])] = k;
  }
  if (std::find(pos.begin(), pos.end(), -1) != pos.end()) return {};
  std::vector<char> real_edge(map.edge_count(), 0);
  for (Dart x : real) real_edge[map.edge_of(x)] = 1;

  std::ostringstream os;
  header(os, width, 400);
  for (int k = 0; k + 1 < n; ++k) {
    os << "<line x1=\"" << num(80.0 * (k + 1)) << "\" y1=\"" << num(axis) << "\" x2=\""
       << num(80.0 * (k + 2)) << "\" y2=\"" << num(axis) << "\"/>\n";
  }
  // The closing real edge passes through infinity.
  os << "<line x1=\"" << num(80.0 * n) << "\" y1=\"" << num(axis) << "\" x2=\"" << width - 10
     << "\" y2=\"" << num(axis) << "\" stroke-dasharray=\"4 3\"/>\n";
  os << "<line x1=\"10\" y1=\"" << num(axis) << "\" x2=\"80.0\" y2=\"" << num(axis)
     << "\" stroke-dasharray=\"4 3\"/>\n";

  std::map<std::tuple<int, int, bool>, int> copies;
  for (int e = 0; e < map.edge_count(); ++e) {
    if (real_edge[e]) continue;
    Dart x = map.edges()[e][0];
    Dart y = map.edges()[e][1];
    if (pos[map.vertex_of(x)] > pos[map.vertex_of(y)]) std::swap(x, y);
    // Upper when x comes strictly between the east and west real darts at its point.
    const int k = pos[map.vertex_of(x)];
    const Dart east = real[k];
    const Dart west = map.alpha(real[(k + n - 1) % n]);
    bool upper = false;
    for (Dart z = map.sigma(east); z != west; z = map.sigma(z)) upper = upper || z == x;
    const double x1 = at[map.vertex_of(x)].x;
    const double x2 = at[map.vertex_of(y)].x;
    const double rx = (x2 - x1) / 2;
    const int copy = copies[{pos[map.vertex_of(x)], pos[map.vertex_of(y)], upper}]++;
    const double ry = rx * (0.5 + 0.2 * copy);
    os << "<path d=\"M " << num(x1) << " " << num(axis) << " A " << num(rx) << " " << num(ry)
       << " 0 0 " << (upper ? 1 : 0) << " " << num(x2) << " " << num(axis) << "\"/>\n";
  }
  vertices(os, doc, at);
  return os.str();
}

std::string circle_svg(const MapDocument& doc) {
  const auto& map = doc.map;
  const int nv = map.vertex_count();
  std::vector<Point> at;
  const double pi = std::acos(-1.0);
  for (int v = 0; v < nv; ++v) {
    const double t = 2 * pi * v / nv;
    at.push_back({200 + 150 * std::cos(t), 200 - 150 * std::sin(t)});
  }
  std::ostringstream os;
  header(os, 400, 400);
  std::map<std::pair<int, int>, int> copies;
  for (int e = 0; e < map.edge_count(); ++e) {
    int a = map.vertex_of(map.edges()[e][0]);
    int b = map.vertex_of(map.edges()[e][1]);
    if (a > b) std::swap(a, b);
    const int copy = copies[{a, b}]++;
    const double bend = (copy % 2 == 0 ? 1 : -1) * 18.0 * ((copy + 1) / 2);
    const double mx = (at[a].x + at[b].x) / 2;
    const double my = (at[a].y + at[b].y) / 2;
    const double dx = at[b].x - at[a].x;
    const double dy = at[b].y - at[a].y;
    const double len = std::max(1.0, std::hypot(dx, dy));
    os << "<path d=\"M " << num(at[a].x) << " " << num(at[a].y) << " Q "
       << num(mx - dy / len * bend) << " " << num(my + dx / len * bend) << " " << num(at[b].x)
       << " " << num(at[b].y) << "\"/>\n";
  }
  vertices(os, doc, at);
  return os.str();
}

}  // namespace

std::string to_svg(const MapDocument& doc) {
  if (doc.map.genus() != 0) {
    throw Error(ErrorKind::UnsupportedFormat,
                "SVG needs a planar map, this one has genus " + std::to_string(doc.map.genus()));
  }
  if (doc.real_cycle && !doc.real_cycle->empty()) {
    if (auto svg = real_axis_svg(doc); !svg.empty()) return svg;
  }
  return circle_svg(doc);
}

}  // namespace pullback
