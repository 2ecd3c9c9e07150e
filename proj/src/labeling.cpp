#include "pullback/labeling.hpp"

#include <algorithm>

#include "pullback/enrichment.hpp"
#include "pullback/error.hpp"

namespace pullback {

namespace {

int mod(int x, int m) { return ((x % m) + m) % m; }

// The dart of each edge lying on an A face.
std::vector<Dart> a_darts(const CombinatorialMap& map, const FaceColoring& coloring) {
  std::vector<Dart> out;
  out.reserve(map.edge_count());
  for (const auto& e : map.edges()) {
    out.push_back(coloring[map.face_of(e[0])] == Color::A ? e[0] : e[1]);
  }
  return out;
}

}  // namespace

VertexLabeling admissible_labeling(const CombinatorialMap& map, const FaceColoring& coloring) {
  const int m = map.face_length(map.face_of(0));
  for (int f = 0; f < map.face_count(); ++f) {
    if (map.face_length(f) != m) {
      throw Error(ErrorKind::InconsistentPropagation,
                  "face " + std::to_string(f) + " has length " +
                      std::to_string(map.face_length(f)) + ", expected " + std::to_string(m));
    }
  }
  std::vector<int> lab(map.vertex_count(), -1);
  const int start = map.vertex_of(0);
  lab[start] = 0;
  std::vector<int> queue{start};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const int v = queue[i];
    for (Dart x : map.vertices()[v]) {
      const int w = map.vertex_of(map.alpha(x));
      const int step = coloring[map.face_of(x)] == Color::A ? 1 : -1;
      const int want = mod(lab[v] + step, m);
      if (lab[w] < 0) {
        lab[w] = want;
        queue.push_back(w);
      } else if (lab[w] != want) {
        throw Error(ErrorKind::InconsistentPropagation,
                    "vertex " + std::to_string(w) + " needs labels " + std::to_string(lab[w] + 1) +
                        " and " + std::to_string(want + 1));
      }
    }
  }
  VertexLabeling out{m, {}};
  for (int l : lab) out.label.push_back(l + 1);
  if (auto check = verify_labeling(map, coloring, out); !check.ok) {
    throw Error(ErrorKind::InconsistentPropagation, check.reason);
  }
  return out;
}

LabelingCheck verify_labeling(const CombinatorialMap& map, const FaceColoring& coloring,
                              const VertexLabeling& lab) {
  const int m = lab.m;
  if (m <= 0 || static_cast<int>(lab.label.size()) != map.vertex_count()) {
    return {false, "labeling does not cover the vertices"};
  }
  for (int v = 0; v < map.vertex_count(); ++v) {
    if (lab.label[v] < 1 || lab.label[v] > m) {
      return {false, "vertex " + std::to_string(v) + " has label out of range"};
    }
  }
  for (int f = 0; f < map.face_count(); ++f) {
    const auto& darts = map.faces()[f];
    if (static_cast<int>(darts.size()) != m) {
      return {false, "face " + std::to_string(f) + " does not have " + std::to_string(m) +
                         " vertices"};
    }
    const int step = coloring[f] == Color::A ? 1 : -1;
    for (std::size_t i = 0; i < darts.size(); ++i) {
      const int here = lab.label[map.vertex_of(darts[i])] - 1;
      const int next = lab.label[map.vertex_of(darts[(i + 1) % darts.size()])] - 1;
      if (next != mod(here + step, m)) {
        return {false, "labels around face " + std::to_string(f) + " are not cyclic"};
      }
    }
  }
  const int d = coloring.count(Color::A);
  std::vector<int> weight(m, 0);
  for (int v = 0; v < map.vertex_count(); ++v) weight[lab.label[v] - 1] += map.valence(v) / 2;
  for (int j = 0; j < m; ++j) {
    if (weight[j] != d) {
      return {false, "label " + std::to_string(j + 1) + " has half-valence sum " +
                         std::to_string(weight[j]) + ", expected " + std::to_string(d)};
    }
  }
  return {true, {}};
}

Passport passport_of(const CombinatorialMap& map, const VertexLabeling& lab) {
  Passport p;
  p.parts.resize(lab.m);
  for (int v = 0; v < map.vertex_count(); ++v) {
    p.parts[lab.label[v] - 1].push_back(map.valence(v) / 2);
  }
  for (auto& part : p.parts) std::sort(part.begin(), part.end(), std::greater<>());
  p.d = 0;
  if (!p.parts.empty()) {
    for (int x : p.parts.front()) p.d += x;
  }
  return p;
}

LabeledMap compress_labels(const CombinatorialMap& map, const FaceColoring& coloring,
                           const VertexLabeling& lab) {
  if (map.corners().empty()) {
    throw Error(ErrorKind::PreconditionFailed, "label compression needs a corner");
  }
  std::vector<char> keep_label(lab.m + 1, 0);
  for (int v = 0; v < map.vertex_count(); ++v) {
    if (map.is_corner(v)) keep_label[lab.label[v]] = 1;
  }
  const int n = map.dart_count();
  Perm alpha = map.alpha_perm();
  std::vector<char> removed(n, 0);
  for (int v = 0; v < map.vertex_count(); ++v) {
    if (keep_label[lab.label[v]]) continue;
    const Dart p = map.vertices()[v][0];
    const Dart q = map.vertices()[v][1];
    const Dart a = alpha[p];
    const Dart b = alpha[q];
    alpha[a] = b;
    alpha[b] = a;
    removed[p] = removed[q] = 1;
  }
  std::vector<int> renum(n, -1);
  int next = 0;
  for (Dart x = 0; x < n; ++x) {
    if (!removed[x]) renum[x] = next++;
  }
  Perm new_alpha(next), new_sigma(next);
  for (Dart x = 0; x < n; ++x) {
    if (removed[x]) continue;
    new_alpha[renum[x]] = renum[alpha[x]];
    new_sigma[renum[x]] = renum[map.sigma(x)];
  }
  auto out_map = CombinatorialMap::build(std::move(new_alpha), std::move(new_sigma));

  std::vector<int> new_label(lab.m + 1, 0);
  int m = 0;
  for (int j = 1; j <= lab.m; ++j) {
    if (keep_label[j]) new_label[j] = ++m;
  }
  VertexLabeling out_lab{m, std::vector<int>(out_map.vertex_count(), 0)};
  FaceColoring out_col;
  out_col.colors.resize(out_map.face_count());
  for (Dart x = 0; x < n; ++x) {
    if (removed[x]) continue;
    out_lab.label[out_map.vertex_of(renum[x])] = new_label[lab.label[map.vertex_of(x)]];
    out_col.colors[out_map.face_of(renum[x])] = coloring[map.face_of(x)];
  }
  return {std::move(out_map), std::move(out_col), std::move(out_lab)};
}

std::vector<int> counts_from_labels(const CombinatorialMap& map, const FaceColoring& coloring,
                                    int m, const std::vector<int>& labels) {
  std::vector<int> counts;
  for (Dart x : a_darts(map, coloring)) {
    const int tail = labels[map.vertex_of(x)];
    const int head = labels[map.vertex_of(map.alpha(x))];
    counts.push_back(mod(head - tail - 1, m));
  }
  return counts;
}

namespace {

class LabelSearch {
 public:
  LabelSearch(const CombinatorialMap& map, const FaceColoring& coloring, int m, bool distinct)
      : map_(map), m_(m), distinct_(distinct) {
    const auto darts = a_darts(map, coloring);
    const int nv = map.vertex_count();
    // Vertex order: breadth-first from the vertex of dart 0.
    std::vector<int> pos(nv, -1);
    order_.push_back(map.vertex_of(0));
    pos[order_[0]] = 0;
    for (std::size_t i = 0; i < order_.size(); ++i) {
      for (Dart x : map.vertices()[order_[i]]) {
        const int w = map.vertex_of(map.alpha(x));
        if (pos[w] < 0) {
          pos[w] = static_cast<int>(order_.size());
          order_.push_back(w);
        }
      }
    }
    closing_.resize(nv);
    for (int e = 0; e < map.edge_count(); ++e) {
      const int t = map.vertex_of(darts[e]);
      const int h = map.vertex_of(map.alpha(darts[e]));
      closing_[std::max(pos[t], pos[h])].push_back({t, h, map.face_of(darts[e]),
                                                    map.face_of(map.alpha(darts[e]))});
    }
    sum_.assign(map.face_count(), 0);
    left_.resize(map.face_count());
    for (int f = 0; f < map.face_count(); ++f) left_[f] = map.face_length(f);
    labels_.assign(nv, -1);
    used_.assign(m, 0);
  }

  std::optional<std::vector<int>> run() {
    if (dfs(0)) return labels_;
    return std::nullopt;
  }

 private:
  struct Arc {
    int tail, head, face_a, face_b;
  };

  bool dfs(std::size_t i) {
    if (i == order_.size()) return true;
    const int v = order_[i];
    const bool corner = map_.is_corner(v);
    for (int l = 0; l < m_; ++l) {
      if (i == 0 && l != 0) break;
      if (distinct_ && corner && used_[l]) continue;
      labels_[v] = l;
      if (apply(i, +1)) {
        if (distinct_ && corner) used_[l] = 1;
        if (dfs(i + 1)) return true;
        if (distinct_ && corner) used_[l] = 0;
      }
      apply(i, -1);
    }
    labels_[v] = -1;
    return false;
  }

  // Adds (sign = +1) or removes the edges closed at step i; reports feasibility.
  bool apply(std::size_t i, int sign) {
    bool ok = true;
    for (const Arc& a : closing_[i]) {
      const int len = mod(labels_[a.head] - labels_[a.tail] - 1, m_) + 1;
      for (int f : {a.face_a, a.face_b}) {
        sum_[f] += sign * len;
        left_[f] -= sign;
      }
    }
    if (sign < 0) return true;
    for (const Arc& a : closing_[i]) {
      for (int f : {a.face_a, a.face_b}) {
        if (sum_[f] + left_[f] > m_ || (left_[f] == 0 && sum_[f] != m_)) ok = false;
      }
    }
    return ok;
  }

  const CombinatorialMap& map_;
  int m_;
  bool distinct_;
  std::vector<int> order_;
  std::vector<std::vector<Arc>> closing_;
  std::vector<int> sum_, left_, labels_;
  std::vector<char> used_;
};

}  // namespace

std::optional<std::vector<int>> search_vertex_labels(const CombinatorialMap& map,
                                                     const FaceColoring& coloring, int m,
                                                     bool distinct_corners) {
  if (m < 1) return std::nullopt;
  return LabelSearch(map, coloring, m, distinct_corners).run();
}

namespace {

Realization from_counts(const CombinatorialMap& map, const FaceColoring& coloring,
                        std::vector<int> counts, bool from_matching) {
  auto enriched = subdivide(map, counts);
  auto lab = admissible_labeling(enriched, coloring);
  return {std::move(enriched), coloring, std::move(lab), std::move(counts), from_matching};
}

}  // namespace

Realization realize(const CombinatorialMap& map, const FaceColoring& coloring) {
  const DotGraph dg = dot_graph(map, coloring);
  const DotMatching matching = perfect_matching(map, dg);
  try {
    return from_counts(map, coloring, subdivision_counts(map, matching), true);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::InconsistentPropagation) throw;
  }
  auto labels = search_vertex_labels(map, coloring, dg.m, false);
  if (!labels) {
    throw Error(ErrorKind::InconsistentPropagation,
                "no enrichment with " + std::to_string(dg.m) + " vertices per face admits labels");
  }
  return from_counts(map, coloring, counts_from_labels(map, coloring, dg.m, *labels), false);
}

Realization generic_labeling(const CombinatorialMap& map, const FaceColoring& coloring) {
  const int m = static_cast<int>(map.corners().size());
  auto labels = search_vertex_labels(map, coloring, m, true);
  if (!labels) {
    throw Error(ErrorKind::PreconditionFailed, "no labeling with distinct corner labels");
  }
  return from_counts(map, coloring, counts_from_labels(map, coloring, m, *labels), false);
}

}  // namespace pullback
