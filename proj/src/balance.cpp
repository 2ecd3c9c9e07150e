#include "pullback/balance.hpp"

#include <algorithm>
#include <set>

#include "pullback/error.hpp"

namespace pullback {

std::string to_string(StructuralDefect d) {
  switch (d) {
    case StructuralDefect::None: return "none";
    case StructuralDefect::NotColorable: return "faces admit no alternating coloring";
    case StructuralDefect::UnequalColorClasses: return "color classes have different sizes";
    case StructuralDefect::Loop: return "map has a loop";
    case StructuralDefect::RepeatedCornerIncidence: return "a corner meets some face twice";
  }
  return "unknown";
}

BalanceReport is_globally_balanced(const CombinatorialMap& map, const FaceColoring& coloring) {
  BalanceReport r;
  r.d = map.face_count() / 2;
  if (!is_proper_coloring(map, coloring)) {
    r.defect = StructuralDefect::NotColorable;
    r.reason = "coloring is not a proper alternating coloring";
    return r;
  }
  if (const auto loops = map.loop_edges(); !loops.empty()) {
    r.defect = StructuralDefect::Loop;
    r.reason = "edge " + std::to_string(loops.front()) + " is a loop";
    return r;
  }
  for (int f = 0; f < map.face_count(); ++f) {
    std::vector<int> seen;
    for (Dart x : map.faces()[f]) {
      const int v = map.vertex_of(x);
      if (!map.is_corner(v)) continue;
      if (std::find(seen.begin(), seen.end(), v) != seen.end()) {
        r.defect = StructuralDefect::RepeatedCornerIncidence;
        r.reason = "corner " + std::to_string(v) + " meets face " + std::to_string(f) + " twice";
        return r;
      }
      seen.push_back(v);
    }
  }
  const int a = coloring.count(Color::A);
  const int b = coloring.count(Color::B);
  if (a != b) {
    r.defect = StructuralDefect::UnequalColorClasses;
    r.reason = std::to_string(a) + " A faces vs " + std::to_string(b) + " B faces";
    return r;
  }
  r.globally_balanced = true;
  return r;
}

BalanceReport is_globally_balanced(const CombinatorialMap& map) {
  FaceColoring coloring;
  try {
    coloring = alternating_coloring(map);
  } catch (const Error& e) {
    BalanceReport r;
    r.d = map.face_count() / 2;
    r.defect = StructuralDefect::NotColorable;
    r.reason = e.what();
    return r;
  }
  return is_globally_balanced(map, coloring);
}

std::optional<Region> make_region(const CombinatorialMap& map, const FaceColoring& coloring,
                                  const std::vector<int>& faces) {
  const int nf = map.face_count();
  std::vector<char> inside(nf, 0);
  for (int f : faces) {
    if (f < 0 || f >= nf || inside[f]) return std::nullopt;
    inside[f] = 1;
  }
  if (faces.empty() || static_cast<int>(faces.size()) == nf) return std::nullopt;

  Region region;
  region.faces = faces;
  std::sort(region.faces.begin(), region.faces.end());

  std::vector<int> boundary_degree(map.vertex_count(), 0);
  std::vector<std::vector<int>> interior_adj(nf);
  for (int e = 0; e < map.edge_count(); ++e) {
    const Dart x = map.edges()[e][0];
    const Dart y = map.edges()[e][1];
    const bool in_x = inside[map.face_of(x)];
    const bool in_y = inside[map.face_of(y)];
    if (in_x && in_y) {
      interior_adj[map.face_of(x)].push_back(map.face_of(y));
      interior_adj[map.face_of(y)].push_back(map.face_of(x));
    } else if (in_x != in_y) {
      const Dart inner = in_x ? x : y;
      if (coloring[map.face_of(inner)] != Color::A) return std::nullopt;
      region.boundary_edges.push_back(e);
      ++boundary_degree[map.vertex_of(x)];
      ++boundary_degree[map.vertex_of(y)];
    }
  }
  for (int deg : boundary_degree) {
    if (deg != 0 && deg != 2) return std::nullopt;
  }

  // Face-connected through interior edges.
  std::vector<char> reached(nf, 0);
  std::vector<int> stack{region.faces.front()};
  reached[region.faces.front()] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const int f = stack.back();
    stack.pop_back();
    for (int g : interior_adj[f]) {
      if (!reached[g]) {
        reached[g] = 1;
        ++count;
        stack.push_back(g);
      }
    }
  }
  if (count != region.faces.size()) return std::nullopt;

  // Trace boundary cycles along the inner (A-side) darts.
  std::vector<char> is_boundary_dart(map.dart_count(), 0);
  for (int e : region.boundary_edges) {
    for (Dart x : map.edges()[e]) {
      if (inside[map.face_of(x)]) is_boundary_dart[x] = 1;
    }
  }
  std::vector<char> used(map.dart_count(), 0);
  for (Dart start = 0; start < map.dart_count(); ++start) {
    if (!is_boundary_dart[start] || used[start]) continue;
    std::vector<Dart> cycle;
    Dart x = start;
    while (!used[x]) {
      used[x] = 1;
      cycle.push_back(x);
      const Dart arrive = map.alpha(x);
      std::optional<Dart> next;
      for (Dart y = map.sigma(arrive); y != arrive; y = map.sigma(y)) {
        if (is_boundary_dart[y]) {
          next = y;
          break;
        }
      }
      if (!next) return std::nullopt;
      x = *next;
    }
    if (x != start) return std::nullopt;
    region.boundary_cycles.push_back(std::move(cycle));
  }

  for (int f : region.faces) {
    (coloring[f] == Color::A ? region.a_faces : region.b_faces)++;
  }
  return region;
}

namespace {

class RegionGrower {
 public:
  RegionGrower(const CombinatorialMap& map, const FaceColoring& coloring,
               const RegionLimits& limits)
      : map_(map), coloring_(coloring), limits_(limits), nf_(map.face_count()) {
    neighbors_.resize(nf_);
    for (const auto& e : map.edges()) {
      const int f = map.face_of(e[0]);
      const int g = map.face_of(e[1]);
      if (f == g) continue;
      neighbors_[f].push_back(g);
      neighbors_[g].push_back(f);
    }
    for (auto& n : neighbors_) {
      std::sort(n.begin(), n.end());
      n.erase(std::unique(n.begin(), n.end()), n.end());
    }
  }

  std::vector<Region> run() {
    inside_.assign(nf_, 0);
    excluded_.assign(nf_, 0);
    for (int root = 0; root < nf_; ++root) {
      members_ = {root};
      inside_[root] = 1;
      grow();
      inside_[root] = 0;
      excluded_[root] = 1;
    }
    std::sort(out_.begin(), out_.end(),
              [](const Region& a, const Region& b) { return a.faces < b.faces; });
    return std::move(out_);
  }

 private:
  // A B face inside whose neighbouring A face is excluded leaves a negative
  // boundary edge that no extension can absorb.
  bool dead_end() const {
    for (int f : members_) {
      if (coloring_[f] != Color::B) continue;
      for (int g : neighbors_[f]) {
        if (!inside_[g] && excluded_[g]) return true;
      }
    }
    return false;
  }

  void grow() {
    if (dead_end()) return;
    if (auto r = make_region(map_, coloring_, members_)) {
      if (out_.size() >= limits_.max_regions) {
        throw Error(ErrorKind::SizeLimitExceeded,
                    "more than " + std::to_string(limits_.max_regions) + " positive regions");
      }
      out_.push_back(std::move(*r));
    }
    std::vector<int> frontier;
    for (int f : members_) {
      for (int g : neighbors_[f]) {
        if (!inside_[g] && !excluded_[g]) frontier.push_back(g);
      }
    }
    std::sort(frontier.begin(), frontier.end());
    frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      const int g = frontier[i];
      inside_[g] = 1;
      members_.push_back(g);
      grow();
      members_.pop_back();
      inside_[g] = 0;
      excluded_[g] = 1;
    }
    for (int g : frontier) excluded_[g] = 0;
  }

  const CombinatorialMap& map_;
  const FaceColoring& coloring_;
  const RegionLimits& limits_;
  int nf_;
  std::vector<std::vector<int>> neighbors_;
  std::vector<char> inside_, excluded_;
  std::vector<int> members_;
  std::vector<Region> out_;
};

}  // namespace

std::vector<Region> positive_regions(const CombinatorialMap& map, const FaceColoring& coloring,
                                     const RegionLimits& limits) {
  return RegionGrower(map, coloring, limits).run();
}

BalanceReport is_locally_balanced(const CombinatorialMap& map, const FaceColoring& coloring,
                                  const RegionLimits& limits) {
  BalanceReport r = is_globally_balanced(map, coloring);
  if (!r.globally_balanced) {
    r.reason = "not globally balanced: " + r.reason;
    return r;
  }
  for (const FaceColoring& c : {coloring, coloring.flipped()}) {
    for (auto& region : positive_regions(map, c, limits)) {
      if (region.a_faces <= region.b_faces) {
        r.reason = "positive region with " + std::to_string(region.a_faces) + " A faces and " +
                   std::to_string(region.b_faces) + " B faces";
        r.violation = std::move(region);
        r.violation_coloring = c;
        return r;
      }
    }
  }
  r.locally_balanced = true;
  return r;
}

BalanceReport check_balance(const CombinatorialMap& map, const RegionLimits& limits) {
  BalanceReport r = is_globally_balanced(map);
  if (!r.globally_balanced) return r;
  return is_locally_balanced(map, alternating_coloring(map), limits);
}

namespace {

// Simple directed cycles along A-side darts, each cycle listed once, starting
// at the dart leaving its minimal vertex.
class PositiveCycleSearch {
 public:
  PositiveCycleSearch(const CombinatorialMap& map, const FaceColoring& coloring)
      : map_(map), coloring_(coloring) {
    out_.resize(map.vertex_count());
    for (Dart x = 0; x < map.dart_count(); ++x) {
      if (coloring[map.face_of(x)] == Color::A) out_[map.vertex_of(x)].push_back(x);
    }
  }

  template <typename Visit>
  bool all(Visit&& visit) {
    on_path_.assign(map_.vertex_count(), 0);
    for (int s = 0; s < map_.vertex_count(); ++s) {
      start_ = s;
      on_path_[s] = 1;
      if (!extend(s, visit)) return false;
      on_path_[s] = 0;
    }
    return true;
  }

 private:
  template <typename Visit>
  bool extend(int v, Visit& visit) {
    for (Dart x : out_[v]) {
      const int w = map_.vertex_of(map_.alpha(x));
      if (w < start_) continue;
      path_.push_back(x);
      if (w == start_) {
        if (!visit(path_)) return false;
      } else if (!on_path_[w]) {
        on_path_[w] = 1;
        if (!extend(w, visit)) return false;
        on_path_[w] = 0;
      }
      path_.pop_back();
    }
    return true;
  }

  const CombinatorialMap& map_;
  const FaceColoring& coloring_;
  std::vector<std::vector<Dart>> out_;
  std::vector<char> on_path_;
  std::vector<Dart> path_;
  int start_ = 0;
};

}  // namespace

bool thurston_locally_balanced(const CombinatorialMap& map, const FaceColoring& coloring) {
  for (const FaceColoring& c : {coloring, coloring.flipped()}) {
    PositiveCycleSearch search(map, c);
    const bool ok = search.all([&](const std::vector<Dart>& cycle) {
      std::vector<char> cut(map.edge_count(), 0);
      for (Dart x : cycle) cut[map.edge_of(x)] = 1;
      std::vector<char> seen(map.face_count(), 0);
      std::vector<int> stack;
      for (Dart x : cycle) {
        const int f = map.face_of(x);
        if (!seen[f]) {
          seen[f] = 1;
          stack.push_back(f);
        }
      }
      int a = 0, b = 0;
      while (!stack.empty()) {
        const int f = stack.back();
        stack.pop_back();
        (c[f] == Color::A ? a : b)++;
        for (Dart x : map.faces()[f]) {
          if (cut[map.edge_of(x)]) continue;
          const int g = map.face_of(map.alpha(x));
          if (!seen[g]) {
            seen[g] = 1;
            stack.push_back(g);
          }
        }
      }
      return a > b;
    });
    if (!ok) return false;
  }
  return true;
}

bool corner_bound_check(const CombinatorialMap& map) {
  const int d = map.face_count() / 2;
  const int corners = static_cast<int>(map.corners().size());
  return corners <= 2 * (map.genus() + d - 1);
}

bool is_generic_thurston(const CombinatorialMap& map) {
  if (map.face_count() % 2 != 0 || map.genus() != 0) return false;
  const int d = map.face_count() / 2;
  for (int v = 0; v < map.vertex_count(); ++v) {
    if (map.valence(v) != 4) return false;
  }
  return map.vertex_count() == 2 * d - 2;
}

}  // namespace pullback
