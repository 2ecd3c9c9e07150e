#include "pullback/surface_map.hpp"

#include <algorithm>
#include <sstream>

#include "pullback/error.hpp"

namespace pullback {

namespace {

// Orbits of a permutation ordered by minimal element; fills `owner`.
std::vector<std::vector<int>> orbits(const Perm& p, std::vector<int>& owner) {
  auto cyc = cycles(p);
  owner.assign(p.size(), -1);
  for (std::size_t i = 0; i < cyc.size(); ++i) {
    for (int x : cyc[i]) owner[x] = static_cast<int>(i);
  }
  return cyc;
}

}  // namespace

CombinatorialMap CombinatorialMap::build(Perm alpha, Perm sigma) {
  const std::size_t n = alpha.size();
  if (n == 0 || n % 2 != 0) {
    throw Error(ErrorKind::BadPermutation, "dart count must be a positive even integer");
  }
  if (sigma.size() != n) {
    throw Error(ErrorKind::BadPermutation, "alpha and sigma act on different dart sets");
  }
  if (!is_permutation(alpha)) throw Error(ErrorKind::BadPermutation, "alpha is not a bijection");
  if (!is_permutation(sigma)) throw Error(ErrorKind::BadPermutation, "sigma is not a bijection");
  for (std::size_t d = 0; d < n; ++d) {
    if (alpha[d] == static_cast<int>(d) || alpha[alpha[d]] != static_cast<int>(d)) {
      std::ostringstream os;
      os << "alpha is not a fixed-point-free involution at dart " << d;
      throw Error(ErrorKind::NotInvolution, os.str());
    }
  }
  if (!is_transitive(static_cast<int>(n), {alpha, sigma})) {
    throw Error(ErrorKind::Disconnected, "<sigma, alpha> does not act transitively on darts");
  }

  CombinatorialMap m;
  m.sigma_inv_ = inverse(sigma);
  m.alpha_ = std::move(alpha);
  m.sigma_ = std::move(sigma);
  m.vertices_ = orbits(m.sigma_, m.vertex_of_);
  m.edges_ = orbits(m.alpha_, m.edge_of_);
  Perm phi(n);
  for (std::size_t d = 0; d < n; ++d) phi[d] = m.sigma_[m.alpha_[d]];
  m.faces_ = orbits(phi, m.face_of_);
  return m;
}

int CombinatorialMap::genus() const {
  const int twice = 2 - euler_characteristic();
  if (twice < 0 || twice % 2 != 0) {
    throw Error(ErrorKind::NonIntegerGenus, "Euler characteristic " +
                                                std::to_string(euler_characteristic()) +
                                                " does not give a nonnegative integer genus");
  }
  return twice / 2;
}

std::vector<int> CombinatorialMap::loop_edges() const {
  std::vector<int> loops;
  for (int e = 0; e < edge_count(); ++e) {
    if (vertex_of_[edges_[e][0]] == vertex_of_[edges_[e][1]]) loops.push_back(e);
  }
  return loops;
}

std::vector<int> CombinatorialMap::corners() const {
  std::vector<int> out;
  for (int v = 0; v < vertex_count(); ++v) {
    if (is_corner(v)) out.push_back(v);
  }
  return out;
}

FaceColoring FaceColoring::flipped() const {
  FaceColoring f = *this;
  for (auto& c : f.colors) c = opposite(c);
  return f;
}

int FaceColoring::count(Color c) const {
  return static_cast<int>(std::count(colors.begin(), colors.end(), c));
}

bool is_proper_coloring(const CombinatorialMap& map, const FaceColoring& coloring) {
  if (static_cast<int>(coloring.colors.size()) != map.face_count()) return false;
  for (const auto& e : map.edges()) {
    if (coloring[map.face_of(e[0])] == coloring[map.face_of(e[1])]) return false;
  }
  return true;
}

FaceColoring alternating_coloring(const CombinatorialMap& map) {
  const int nf = map.face_count();
  std::vector<int> color(nf, -1);
  std::vector<std::vector<int>> adj(nf);
  for (const auto& e : map.edges()) {
    const int f = map.face_of(e[0]);
    const int g = map.face_of(e[1]);
    adj[f].push_back(g);
    adj[g].push_back(f);
  }
  const int start = map.face_of(0);
  color[start] = 0;
  std::vector<int> stack{start};
  while (!stack.empty()) {
    const int f = stack.back();
    stack.pop_back();
    for (int g : adj[f]) {
      if (color[g] < 0) {
        color[g] = 1 - color[f];
        stack.push_back(g);
      } else if (color[g] == color[f]) {
        throw Error(ErrorKind::NotBipartiteFaces,
                    "face adjacency has an odd cycle through faces " + std::to_string(f) +
                        " and " + std::to_string(g));
      }
    }
  }
  FaceColoring out;
  out.colors.reserve(nf);
  for (int c : color) out.colors.push_back(c == 0 ? Color::A : Color::B);
  return out;
}

FaceAdjacency face_adjacency(const CombinatorialMap& map) {
  FaceAdjacency fa;
  fa.face_count = map.face_count();
  for (int e = 0; e < map.edge_count(); ++e) {
    const auto& darts = map.edges()[e];
    fa.arcs.push_back({e, map.face_of(darts[0]), map.face_of(darts[1])});
  }
  return fa;
}

DegreeProfile degree_profile(const CombinatorialMap& map) {
  DegreeProfile p;
  for (int v = 0; v < map.vertex_count(); ++v) p.valences.push_back(map.valence(v));
  p.corners = map.corners();
  return p;
}

std::optional<Dart> dart_of_face_at_vertex(const CombinatorialMap& map, int face, int vertex) {
  for (Dart x : map.faces()[face]) {
    if (map.vertex_of(x) == vertex) return x;
  }
  return std::nullopt;
}

CombinatorialMap relabeled(const CombinatorialMap& map, std::span<const int> relabel) {
  const int n = map.dart_count();
  Perm alpha(n), sigma(n);
  for (int x = 0; x < n; ++x) {
    alpha[relabel[x]] = relabel[map.alpha(x)];
    sigma[relabel[x]] = relabel[map.sigma(x)];
  }
  return CombinatorialMap::build(std::move(alpha), std::move(sigma));
}

namespace {

// Breadth-first numbering from `start`; returns relabel[old] = new.
Perm bfs_relabel(const CombinatorialMap& map, Dart start) {
  const int n = map.dart_count();
  Perm relabel(n, -1);
  std::vector<Dart> order;
  order.reserve(n);
  relabel[start] = 0;
  order.push_back(start);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Dart x = order[i];
    for (Dart y : {map.alpha(x), map.sigma(x)}) {
      if (relabel[y] < 0) {
        relabel[y] = static_cast<int>(order.size());
        order.push_back(y);
      }
    }
  }
  return relabel;
}

// Encodes the relabeled (alpha, sigma) as one sequence for lexicographic comparison.
std::vector<int> code_of(const CombinatorialMap& map, const Perm& relabel) {
  const int n = map.dart_count();
  std::vector<int> order(n);
  for (int x = 0; x < n; ++x) order[relabel[x]] = x;
  std::vector<int> code(2 * n);
  for (int i = 0; i < n; ++i) {
    code[i] = relabel[map.alpha(order[i])];
    code[n + i] = relabel[map.sigma(order[i])];
  }
  return code;
}

}  // namespace

CanonicalForm relabel_from(const CombinatorialMap& map, Dart start) {
  Perm r = bfs_relabel(map, start);
  return {relabeled(map, r), std::move(r)};
}

CanonicalForm canonical_form(const CombinatorialMap& map) {
  Perm best;
  std::vector<int> best_code;
  for (Dart s = 0; s < map.dart_count(); ++s) {
    Perm r = bfs_relabel(map, s);
    auto code = code_of(map, r);
    if (best.empty() || code < best_code) {
      best = std::move(r);
      best_code = std::move(code);
    }
  }
  return {relabeled(map, best), std::move(best)};
}

bool are_isomorphic(const CombinatorialMap& a, const CombinatorialMap& b) {
  if (a.dart_count() != b.dart_count() || a.vertex_count() != b.vertex_count() ||
      a.face_count() != b.face_count()) {
    return false;
  }
  return canonical_form(a).map == canonical_form(b).map;
}

bool are_isomorphic_marked(const CombinatorialMap& a, Dart mark_a, const CombinatorialMap& b,
                           Dart mark_b) {
  if (a.dart_count() != b.dart_count()) return false;
  return code_of(a, bfs_relabel(a, mark_a)) == code_of(b, bfs_relabel(b, mark_b));
}

}  // namespace pullback
