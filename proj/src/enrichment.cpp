#include "pullback/enrichment.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "pullback/error.hpp"

namespace pullback {

DotGraph dot_graph(const CombinatorialMap& map, const FaceColoring& coloring) {
  DotGraph dg;
  dg.m = static_cast<int>(map.corners().size());
  if (dg.m < 2) {
    throw Error(ErrorKind::PreconditionFailed,
                "dot graph needs at least two corners, map has " + std::to_string(dg.m));
  }
  dg.coloring = coloring;
  const int nf = map.face_count();
  dg.dots_per_face.assign(nf, 0);
  for (int f = 0; f < nf; ++f) {
    std::vector<int> seen;
    for (Dart x : map.faces()[f]) {
      const int v = map.vertex_of(x);
      if (map.is_corner(v) && std::find(seen.begin(), seen.end(), v) == seen.end()) {
        seen.push_back(v);
      }
    }
    const int count = dg.m - static_cast<int>(seen.size());
    if (count < 0) {
      throw Error(ErrorKind::NegativeDotCount, "face " + std::to_string(f) + " meets " +
                                                   std::to_string(seen.size()) + " of " +
                                                   std::to_string(dg.m) + " corners");
    }
    dg.dots_per_face[f] = count;
    auto& side = coloring[f] == Color::A ? dg.dots_a : dg.dots_b;
    for (int i = 0; i < count; ++i) side.push_back({f, i});
  }

  dg.face_neighbors.resize(nf);
  for (const auto& e : map.edges()) {
    const int f = map.face_of(e[0]);
    const int g = map.face_of(e[1]);
    dg.face_neighbors[f].push_back(g);
    dg.face_neighbors[g].push_back(f);
  }
  for (auto& n : dg.face_neighbors) {
    std::sort(n.begin(), n.end());
    n.erase(std::unique(n.begin(), n.end()), n.end());
  }

  std::vector<int> first_a(nf, -1);
  for (int i = static_cast<int>(dg.dots_a.size()) - 1; i >= 0; --i) first_a[dg.dots_a[i].face] = i;
  dg.adjacency.resize(dg.dots_b.size());
  for (std::size_t b = 0; b < dg.dots_b.size(); ++b) {
    for (int g : dg.face_neighbors[dg.dots_b[b].face]) {
      for (int k = 0; k < dg.dots_per_face[g]; ++k) dg.adjacency[b].push_back(first_a[g] + k);
    }
  }
  return dg;
}

namespace {

struct Matcher {
  const DotGraph& dg;
  std::vector<int> match_a;  // A dot -> B dot or -1
  std::vector<int> match_b;
  std::vector<int> stamp;
  int round = 0;

  explicit Matcher(const DotGraph& g)
      : dg(g), match_a(g.dots_a.size(), -1), match_b(g.dots_b.size(), -1),
        stamp(g.dots_a.size(), -1) {}

  bool augment(int b) {
    for (int a : dg.adjacency[b]) {
      if (stamp[a] == round) continue;
      stamp[a] = round;
      if (match_a[a] < 0 || augment(match_a[a])) {
        match_a[a] = b;
        match_b[b] = a;
        return true;
      }
    }
    return false;
  }

  void run() {
    for (std::size_t b = 0; b < dg.dots_b.size(); ++b) {
      ++round;
      augment(static_cast<int>(b));
    }
  }
};

}  // namespace

HallResult hall_check(const DotGraph& dg) {
  Matcher mt(dg);
  mt.run();
  HallResult r;
  const bool b_covered =
      std::all_of(mt.match_b.begin(), mt.match_b.end(), [](int a) { return a >= 0; });
  if (b_covered) {
    r.ok = true;
    return r;
  }
  // B dots reachable from unmatched ones along alternating paths.
  std::vector<char> reach_b(dg.dots_b.size(), 0), reach_a(dg.dots_a.size(), 0);
  std::vector<int> queue;
  for (std::size_t b = 0; b < dg.dots_b.size(); ++b) {
    if (mt.match_b[b] < 0) {
      reach_b[b] = 1;
      queue.push_back(static_cast<int>(b));
    }
  }
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (int a : dg.adjacency[queue[i]]) {
      if (reach_a[a]) continue;
      reach_a[a] = 1;
      const int next = mt.match_a[a];
      if (next >= 0 && !reach_b[next]) {
        reach_b[next] = 1;
        queue.push_back(next);
      }
    }
  }
  for (std::size_t b = 0; b < dg.dots_b.size(); ++b) {
    if (reach_b[b]) {
      r.witness.push_back(static_cast<int>(b));
      r.witness_faces.push_back(dg.dots_b[b].face);
    }
  }
  r.witness_faces.erase(std::unique(r.witness_faces.begin(), r.witness_faces.end()),
                        r.witness_faces.end());
  for (int f : r.witness_faces) {
    for (int g : dg.face_neighbors[f]) r.neighbor_faces.push_back(g);
  }
  std::sort(r.neighbor_faces.begin(), r.neighbor_faces.end());
  r.neighbor_faces.erase(std::unique(r.neighbor_faces.begin(), r.neighbor_faces.end()),
                         r.neighbor_faces.end());
  for (int g : r.neighbor_faces) r.neighbor_dots += dg.dots_per_face[g];
  return r;
}

DotMatching perfect_matching(const CombinatorialMap& map, const DotGraph& dg) {
  if (dg.dots_a.size() != dg.dots_b.size()) {
    throw Error(ErrorKind::NoPerfectMatching,
                std::to_string(dg.dots_a.size()) + " A dots vs " +
                    std::to_string(dg.dots_b.size()) + " B dots");
  }
  Matcher mt(dg);
  mt.run();
  for (std::size_t b = 0; b < dg.dots_b.size(); ++b) {
    if (mt.match_b[b] < 0) {
      const HallResult h = hall_check(dg);
      throw Error(ErrorKind::NoPerfectMatching,
                  std::to_string(h.witness.size()) + " B dots in faces with only " +
                      std::to_string(h.neighbor_dots) + " neighbouring A dots");
    }
  }

  std::map<std::pair<int, int>, std::vector<int>> shared;
  for (int e = 0; e < map.edge_count(); ++e) {
    const int f = map.face_of(map.edges()[e][0]);
    const int g = map.face_of(map.edges()[e][1]);
    const auto key = dg.coloring[f] == Color::A ? std::pair{f, g} : std::pair{g, f};
    shared[key].push_back(e);
  }
  std::map<std::pair<int, int>, std::size_t> used;
  DotMatching out;
  for (std::size_t b = 0; b < dg.dots_b.size(); ++b) {
    const int a = mt.match_b[b];
    const std::pair key{dg.dots_a[a].face, dg.dots_b[b].face};
    const auto& edges = shared.at(key);
    const std::size_t k = used[key]++;
    out.pairs.push_back({a, static_cast<int>(b), edges[k % edges.size()]});
  }
  return out;
}

std::vector<int> subdivision_counts(const CombinatorialMap& map, const DotMatching& matching) {
  std::vector<int> counts(map.edge_count(), 0);
  for (const auto& p : matching.pairs) ++counts[p.host_edge];
  return counts;
}

CombinatorialMap subdivide(const CombinatorialMap& map, const std::vector<int>& counts) {
  const int n = map.dart_count();
  int extra = 0;
  for (int c : counts) extra += 2 * c;
  Perm alpha(map.alpha_perm()), sigma(map.sigma_perm());
  alpha.resize(n + extra);
  sigma.resize(n + extra);
  int next = n;
  for (int e = 0; e < map.edge_count(); ++e) {
    const int k = counts[e];
    if (k == 0) continue;
    const Dart x = map.edges()[e][0];
    const Dart y = map.edges()[e][1];
    // New vertex i carries darts p = next + 2i (towards x) and q = p + 1.
    Dart prev = x;
    for (int i = 0; i < k; ++i) {
      const Dart p = next + 2 * i;
      const Dart q = p + 1;
      alpha[prev] = p;
      alpha[p] = prev;
      sigma[p] = q;
      sigma[q] = p;
      prev = q;
    }
    alpha[prev] = y;
    alpha[y] = prev;
    next += 2 * k;
  }
  return CombinatorialMap::build(std::move(alpha), std::move(sigma));
}

CombinatorialMap enrich(const CombinatorialMap& map, const DotMatching& matching) {
  return subdivide(map, subdivision_counts(map, matching));
}

namespace {

// Face-connected components of `faces`, each sorted.
std::vector<std::vector<int>> components(const CombinatorialMap& map,
                                         const std::vector<char>& member) {
  const int nf = map.face_count();
  std::vector<std::vector<int>> adj(nf);
  for (const auto& e : map.edges()) {
    const int f = map.face_of(e[0]);
    const int g = map.face_of(e[1]);
    if (member[f] && member[g]) {
      adj[f].push_back(g);
      adj[g].push_back(f);
    }
  }
  std::vector<char> seen(nf, 0);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < nf; ++s) {
    if (!member[s] || seen[s]) continue;
    std::vector<int> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (int g : adj[comp[i]]) {
        if (!seen[g]) {
          seen[g] = 1;
          comp.push_back(g);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace

std::optional<RegionCertificate> witness_region(const CombinatorialMap& map, const DotGraph& dg,
                                                const HallResult& hall) {
  if (hall.ok) return std::nullopt;
  const int nf = map.face_count();
  std::vector<char> member(nf, 0);
  for (int f : hall.witness_faces) member[f] = 1;
  for (int f : hall.neighbor_faces) member[f] = 1;

  const auto try_set = [&](const std::vector<char>& set,
                           const FaceColoring& c) -> std::optional<RegionCertificate> {
    for (const auto& comp : components(map, set)) {
      auto r = make_region(map, c, comp);
      if (r && r->a_faces <= r->b_faces) return RegionCertificate{std::move(*r), c};
    }
    return std::nullopt;
  };

  if (auto r = try_set(member, dg.coloring)) return r;
  std::vector<char> rest(nf, 0);
  for (int f = 0; f < nf; ++f) rest[f] = !member[f];
  return try_set(rest, dg.coloring.flipped());
}

}  // namespace pullback
