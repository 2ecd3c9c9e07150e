#include "pullback/document.hpp"

#include <algorithm>

#include "pullback/error.hpp"

namespace pullback {

using nlohmann::json;

std::optional<VertexLabeling> MapDocument::labeling() const {
  if (!labels) return std::nullopt;
  VertexLabeling lab;
  lab.label = *labels;
  lab.m = labels->empty() ? 0 : *std::max_element(labels->begin(), labels->end());
  return lab;
}

json to_json(const MapDocument& doc) {
  json j;
  j["darts"] = doc.map.dart_count();
  j["alpha"] = doc.map.alpha_perm();
  j["sigma"] = doc.map.sigma_perm();
  if (doc.labels) j["labels"] = *doc.labels;
  if (doc.colors) {
    json colors = json::array();
    for (Color c : doc.colors->colors) colors.push_back(std::string(1, color_char(c)));
    j["colors"] = std::move(colors);
  }
  if (doc.real_cycle) j["real_cycle"] = *doc.real_cycle;
  return j;
}

std::string serialize(const MapDocument& doc) { return to_json(doc).dump(); }

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

template <typename T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(ErrorKind::ParseError, std::string("missing field '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("field '") + key + "': " + e.what());
  }
}

}  // namespace

MapDocument map_document_from_json(const json& j) {
  const int darts = field<int>(j, "darts");
  auto alpha = field<std::vector<int>>(j, "alpha");
  auto sigma = field<std::vector<int>>(j, "sigma");
  if (darts < 0 || static_cast<int>(alpha.size()) != darts ||
      static_cast<int>(sigma.size()) != darts) {
    throw Error(ErrorKind::InvariantViolation, "permutation lengths differ from 'darts'");
  }
  std::optional<CombinatorialMap> map;
  try {
    map = CombinatorialMap::build(std::move(alpha), std::move(sigma));
  } catch (const Error& e) {
    throw Error(ErrorKind::InvariantViolation, e.what());
  }
  MapDocument doc{std::move(*map), {}, {}, {}};
  if (j.contains("labels")) {
    doc.labels = field<std::vector<int>>(j, "labels");
    if (static_cast<int>(doc.labels->size()) != doc.map.vertex_count()) {
      throw Error(ErrorKind::InvariantViolation, "one label per vertex expected");
    }
    for (int l : *doc.labels) {
      if (l < 1) throw Error(ErrorKind::InvariantViolation, "labels start at 1");
    }
  }
  if (j.contains("colors")) {
    FaceColoring fc;
    for (const auto& c : field<std::vector<std::string>>(j, "colors")) {
      if (c == "A") {
        fc.colors.push_back(Color::A);
      } else if (c == "B") {
        fc.colors.push_back(Color::B);
      } else {
        throw Error(ErrorKind::ParseError, "colors must be \"A\" or \"B\"");
      }
    }
    if (!is_proper_coloring(doc.map, fc)) {
      throw Error(ErrorKind::InvariantViolation, "colors are not a proper face coloring");
    }
    doc.colors = std::move(fc);
  }
  if (j.contains("real_cycle")) {
    doc.real_cycle = field<std::vector<int>>(j, "real_cycle");
    for (int x : *doc.real_cycle) {
      if (x < 0 || x >= doc.map.dart_count()) {
        throw Error(ErrorKind::InvariantViolation, "real_cycle names an unknown dart");
      }
    }
  }
  return doc;
}

MapDocument parse_map_document(std::string_view text) {
  return map_document_from_json(parse_json(text));
}

MapDocument canonicalize(const MapDocument& doc) {
  auto canon = canonical_form(doc.map);
  MapDocument out{canon.map, {}, {}, {}};
  const auto& r = canon.relabel;
  if (doc.labels) {
    std::vector<int> labels(out.map.vertex_count());
    for (Dart x = 0; x < doc.map.dart_count(); ++x) {
      labels[out.map.vertex_of(r[x])] = (*doc.labels)[doc.map.vertex_of(x)];
    }
    out.labels = std::move(labels);
  }
  if (doc.colors) {
    FaceColoring fc;
    fc.colors.resize(out.map.face_count());
    for (Dart x = 0; x < doc.map.dart_count(); ++x) {
      fc.colors[out.map.face_of(r[x])] = (*doc.colors)[doc.map.face_of(x)];
    }
    out.colors = std::move(fc);
  }
  if (doc.real_cycle) {
    std::vector<Dart> cyc;
    for (Dart x : *doc.real_cycle) cyc.push_back(r[x]);
    out.real_cycle = std::move(cyc);
  }
  return out;
}

json to_json(const Constellation& c) {
  json perms = json::array();
  for (const auto& p : c.perms) {
    json row = json::array();
    for (int x : p) row.push_back(x + 1);
    perms.push_back(std::move(row));
  }
  return {{"d", c.d}, {"perms", std::move(perms)}};
}

std::string serialize(const Constellation& c) { return to_json(c).dump(); }

Constellation parse_constellation(std::string_view text) {
  const json j = parse_json(text);
  Constellation c;
  c.d = field<int>(j, "d");
  for (auto p : field<std::vector<std::vector<int>>>(j, "perms")) {
    for (int& x : p) --x;
    if (static_cast<int>(p.size()) != c.d || !is_permutation(p)) {
      throw Error(ErrorKind::InvariantViolation, "each entry of 'perms' must permute 1..d");
    }
    c.perms.push_back(std::move(p));
  }
  return c;
}

json to_json(const NonCrossingPairing& p) {
  json arcs = json::array();
  for (auto [i, j] : p.arcs) arcs.push_back({i, j});
  return {{"a", p.type.a}, {"arcs", std::move(arcs)}, {"n", p.type.n()}};
}

std::string serialize(const NonCrossingPairing& p) { return to_json(p).dump(); }

NonCrossingPairing parse_pairing(std::string_view text) {
  const json j = parse_json(text);
  NonCrossingPairing p;
  p.type.a = field<std::vector<int>>(j, "a");
  int total = 0;
  for (int x : p.type.a) total += x;
  p.type.d = total / 2 + 1;
  for (const auto& arc : field<std::vector<std::vector<int>>>(j, "arcs")) {
    if (arc.size() != 2) throw Error(ErrorKind::ParseError, "arcs are pairs");
    p.arcs.emplace_back(std::min(arc[0], arc[1]), std::max(arc[0], arc[1]));
  }
  std::sort(p.arcs.begin(), p.arcs.end());
  if (field<int>(j, "n") != p.type.n() || total % 2 != 0 || !is_valid_pairing(p)) {
    throw Error(ErrorKind::InvariantViolation, "not a non-crossing pairing of its type");
  }
  return p;
}

json to_json(const Tableau2Row& t) { return {{"rows", {t.top, t.bottom}}}; }

std::string serialize(const Tableau2Row& t) { return to_json(t).dump(); }

}  // namespace pullback
