#include "pullback/real_combinatorics.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "pullback/error.hpp"

namespace pullback {

bool WeightComposition::valid() const {
  if (d < 2 || n() < 2 || n() > 2 * d - 2) return false;
  for (int x : a) {
    if (x < 1 || x > d - 1) return false;
  }
  return std::accumulate(a.begin(), a.end(), 0) == 2 * d - 2;
}

std::vector<WeightComposition> compositions(int d) {
  std::vector<WeightComposition> out;
  std::vector<int> cur;
  const int total = 2 * d - 2;
  auto rec = [&](auto& self, int left) -> void {
    if (left == 0) {
      if (cur.size() >= 2) out.push_back({d, cur});
      return;
    }
    for (int x = 1; x <= std::min(left, d - 1); ++x) {
      cur.push_back(x);
      self(self, left - x);
      cur.pop_back();
    }
  };
  if (d >= 2) rec(rec, total);
  return out;
}

bool is_valid_pairing(const NonCrossingPairing& p) {
  if (!p.type.valid()) return false;
  std::vector<int> degree(p.type.n() + 1, 0);
  for (auto [i, j] : p.arcs) {
    if (i < 1 || j > p.type.n() || i >= j) return false;
    ++degree[i];
    ++degree[j];
  }
  for (int k = 1; k <= p.type.n(); ++k) {
    if (degree[k] != p.type.a[k - 1]) return false;
  }
  for (auto [i, j] : p.arcs) {
    for (auto [k, l] : p.arcs) {
      if (i < k && k < j && j < l) return false;
    }
  }
  return true;
}

std::vector<NonCrossingPairing> enumerate_pairings(const WeightComposition& t) {
  std::vector<NonCrossingPairing> out;
  if (!t.valid()) return out;
  const int n = t.n();
  std::vector<int> suffix(n + 1, 0);
  for (int k = n - 1; k >= 0; --k) suffix[k] = suffix[k + 1] + t.a[k];
  std::vector<int> stack;
  std::vector<std::pair<int, int>> arcs;
  // At point k close the b most recent open arcs, then open the rest.
  auto rec = [&](auto& self, int k) -> void {
    if (k == n) {
      if (stack.empty()) {
        auto sorted = arcs;
        std::sort(sorted.begin(), sorted.end());
        out.push_back({t, std::move(sorted)});
      }
      return;
    }
    if (static_cast<int>(stack.size()) > suffix[k]) return;
    const int most = std::min<int>(t.a[k], stack.size());
    for (int b = 0; b <= most; ++b) {
      std::vector<int> popped(stack.end() - b, stack.end());
      stack.resize(stack.size() - b);
      for (int i : popped) arcs.emplace_back(i + 1, k + 1);
      for (int f = 0; f < t.a[k] - b; ++f) stack.push_back(k);
      self(self, k + 1);
      stack.resize(stack.size() - (t.a[k] - b));
      stack.insert(stack.end(), popped.begin(), popped.end());
      arcs.resize(arcs.size() - b);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.arcs < y.arcs; });
  return out;
}

std::uint64_t count_pairings(const WeightComposition& t) {
  if (!t.valid()) return 0;
  const int n = t.n();
  const int h_max = 2 * t.d;
  // ways[k][h]: completions from point k with h open arcs.
  std::vector<std::vector<std::uint64_t>> ways(n + 1, std::vector<std::uint64_t>(h_max + 1, 0));
  ways[n][0] = 1;
  for (int k = n - 1; k >= 0; --k) {
    for (int h = 0; h <= h_max; ++h) {
      for (int b = 0; b <= std::min(t.a[k], h); ++b) {
        const int next = h - b + t.a[k] - b;
        if (next <= h_max) ways[k][h] += ways[k + 1][next];
      }
    }
  }
  return ways[0][0];
}

bool is_ssyt(const Tableau2Row& t, const WeightComposition& type) {
  const int len = type.d - 1;
  if (static_cast<int>(t.top.size()) != len || static_cast<int>(t.bottom.size()) != len) {
    return false;
  }
  std::vector<int> count(type.n() + 1, 0);
  for (const auto* row : {&t.top, &t.bottom}) {
    for (int c = 0; c < len; ++c) {
      const int v = (*row)[c];
      if (v < 1 || v > type.n()) return false;
      if (c > 0 && (*row)[c - 1] > v) return false;
      ++count[v];
    }
  }
  for (int c = 0; c < len; ++c) {
    if (t.top[c] >= t.bottom[c]) return false;
  }
  for (int k = 1; k <= type.n(); ++k) {
    if (count[k] != type.a[k - 1]) return false;
  }
  return true;
}

std::vector<Tableau2Row> enumerate_ssyt(const WeightComposition& t) {
  std::vector<Tableau2Row> out;
  if (!t.valid()) return out;
  const int n = t.n();
  const int len = t.d - 1;
  std::vector<int> left(t.a);
  Tableau2Row cur;
  auto rec = [&](auto& self, int col) -> void {
    if (col == len) {
      out.push_back(cur);
      return;
    }
    const int top_min = col == 0 ? 0 : cur.top.back() - 1;
    const int bottom_min = col == 0 ? 0 : cur.bottom.back() - 1;
    for (int top = top_min; top < n; ++top) {
      if (left[top] == 0) continue;
      // Values below the top row can no longer be placed anywhere.
      bool stranded = false;
      for (int v = 0; v < top; ++v) stranded = stranded || left[v] > 0;
      if (stranded) break;
      --left[top];
      for (int bottom = std::max(bottom_min, top + 1); bottom < n; ++bottom) {
        if (left[bottom] == 0) continue;
        --left[bottom];
        cur.top.push_back(top + 1);
        cur.bottom.push_back(bottom + 1);
        self(self, col + 1);
        cur.top.pop_back();
        cur.bottom.pop_back();
        ++left[bottom];
      }
      ++left[top];
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t kostka(const WeightComposition& t) {
  if (!t.valid()) return 0;
  const int len = t.d - 1;
  // ways[r1]: fillings of the values so far with r1 entries in the top row.
  std::vector<std::uint64_t> ways(len + 1, 0);
  ways[0] = 1;
  int placed = 0;
  for (int k = 0; k < t.n(); ++k) {
    std::vector<std::uint64_t> next(len + 1, 0);
    for (int r1 = 0; r1 <= len; ++r1) {
      if (ways[r1] == 0) continue;
      const int r2 = placed - r1;
      for (int x = 0; x <= t.a[k]; ++x) {
        const int y = t.a[k] - x;
        if (r1 + x <= len && r2 + y <= r1) next[r1 + x] += ways[r1];
      }
    }
    ways = std::move(next);
    placed += t.a[k];
  }
  return ways[len];
}

boost::multiprecision::cpp_int catalan(int d) {
  if (d < 1) throw Error(ErrorKind::PreconditionFailed, "catalan needs d >= 1");
  boost::multiprecision::cpp_int binom = 1;
  const int top = 2 * d - 2;
  const int k = d - 1;
  for (int i = 1; i <= k; ++i) binom = binom * (top - k + i) / i;
  return binom / d;
}

Tableau2Row pairing_to_tableau(const NonCrossingPairing& p) {
  const int n = p.type.n();
  std::vector<int> forward(n + 1, 0), backward(n + 1, 0);
  for (auto [i, j] : p.arcs) {
    ++forward[i];
    ++backward[j];
  }
  Tableau2Row t;
  for (int k = 1; k <= n; ++k) {
    t.top.insert(t.top.end(), forward[k], k);
    t.bottom.insert(t.bottom.end(), backward[k], k);
  }
  return t;
}

NonCrossingPairing tableau_to_pairing(const Tableau2Row& t, const WeightComposition& type) {
  const int n = type.n();
  std::vector<int> forward(n + 1, 0), backward(n + 1, 0);
  for (int v : t.top) ++forward[v];
  for (int v : t.bottom) ++backward[v];
  NonCrossingPairing p{type, {}};
  std::vector<int> stack;
  for (int k = 1; k <= n; ++k) {
    for (int b = 0; b < backward[k]; ++b) {
      if (stack.empty()) {
        throw Error(ErrorKind::PreconditionFailed, "tableau columns are not strictly increasing");
      }
      p.arcs.emplace_back(stack.back(), k);
      stack.pop_back();
    }
    stack.insert(stack.end(), forward[k], k);
  }
  std::sort(p.arcs.begin(), p.arcs.end());
  return p;
}

MirrorGraph mirror_graph(const NonCrossingPairing& p) {
  const int n = p.type.n();
  const int arcs = static_cast<int>(p.arcs.size());
  const int darts = 2 * n + 4 * arcs;
  const auto east = [](int k) { return 2 * k; };
  const auto west = [](int k) { return 2 * k + 1; };  // arrives at k + 1
  const auto up_i = [n](int t) { return 2 * n + 4 * t; };
  const auto up_j = [n](int t) { return 2 * n + 4 * t + 1; };
  const auto low_i = [n](int t) { return 2 * n + 4 * t + 2; };
  const auto low_j = [n](int t) { return 2 * n + 4 * t + 3; };

  std::vector<int> copy(arcs, 0);
  for (int t = 1; t < arcs; ++t) {
    if (p.arcs[t] == p.arcs[t - 1]) copy[t] = copy[t - 1] + 1;
  }

  Perm alpha(darts), sigma(darts), tau(darts);
  for (int k = 0; k < n; ++k) {
    alpha[east(k)] = west(k);
    alpha[west(k)] = east(k);
    tau[east(k)] = east(k);
    tau[west(k)] = west(k);
  }
  for (int t = 0; t < arcs; ++t) {
    alpha[up_i(t)] = up_j(t);
    alpha[up_j(t)] = up_i(t);
    alpha[low_i(t)] = low_j(t);
    alpha[low_j(t)] = low_i(t);
    tau[up_i(t)] = low_i(t);
    tau[low_i(t)] = up_i(t);
    tau[up_j(t)] = low_j(t);
    tau[low_j(t)] = up_j(t);
  }

  for (int k = 0; k < n; ++k) {
    std::vector<int> right, left;  // arc indices leaving k rightwards / leftwards
    for (int t = 0; t < arcs; ++t) {
      if (p.arcs[t].first == k + 1) right.push_back(t);
      if (p.arcs[t].second == k + 1) left.push_back(t);
    }
    // Innermost arcs sit next to the real line.
    const auto inner_right = [&](int s, int t) {
      return std::pair(p.arcs[s].second, copy[s]) < std::pair(p.arcs[t].second, copy[t]);
    };
    const auto inner_left = [&](int s, int t) {
      return std::pair(p.arcs[s].first, -copy[s]) > std::pair(p.arcs[t].first, -copy[t]);
    };
    std::sort(right.begin(), right.end(), inner_right);
    std::sort(left.begin(), left.end(), inner_left);

    std::vector<Dart> ring{east(k)};
    for (int t : right) ring.push_back(up_i(t));
    for (auto it = left.rbegin(); it != left.rend(); ++it) ring.push_back(up_j(*it));
    ring.push_back(west((k + n - 1) % n));
    for (int t : left) ring.push_back(low_j(t));
    for (auto it = right.rbegin(); it != right.rend(); ++it) ring.push_back(low_i(*it));
    for (std::size_t i = 0; i < ring.size(); ++i) sigma[ring[i]] = ring[(i + 1) % ring.size()];
  }

  auto map = CombinatorialMap::build(std::move(alpha), std::move(sigma));
  auto coloring = alternating_coloring(map);
  std::vector<Dart> real;
  for (int k = 0; k < n; ++k) real.push_back(east(k));
  return {std::move(map), std::move(coloring), std::move(real), std::move(tau)};
}

bool is_real_balanced(const CombinatorialMap& map, const std::vector<Dart>& real_cycle) {
  const int nv = map.vertex_count();
  if (static_cast<int>(real_cycle.size()) != nv) return false;
  std::vector<char> seen(nv, 0);
  for (std::size_t k = 0; k < real_cycle.size(); ++k) {
    const Dart x = real_cycle[k];
    if (x < 0 || x >= map.dart_count()) return false;
    const int v = map.vertex_of(x);
    if (seen[v]) return false;
    seen[v] = 1;
    const Dart next = real_cycle[(k + 1) % real_cycle.size()];
    if (map.vertex_of(next) != map.vertex_of(map.alpha(x))) return false;
  }
  if (map.genus() != 0) return false;
  FaceColoring coloring;
  try {
    coloring = alternating_coloring(map);
  } catch (const Error&) {
    return false;
  }

  // The reflection fixes the darts leaving each point along the real line and
  // reverses the rotation around it.
  Perm tau(map.dart_count(), -1);
  for (std::size_t k = 0; k < real_cycle.size(); ++k) {
    const Dart r = real_cycle[k];
    const Dart back = map.alpha(real_cycle[(k + real_cycle.size() - 1) % real_cycle.size()]);
    int pos = 0;
    for (Dart y = r; y != back; y = map.sigma(y)) ++pos;
    if (2 * pos != map.valence(map.vertex_of(r))) return false;
    Dart fwd = r, rev = r;
    for (int i = 0; i < map.valence(map.vertex_of(r)); ++i) {
      tau[fwd] = rev;
      fwd = map.sigma(fwd);
      rev = map.sigma_inv(rev);
    }
  }
  for (Dart x = 0; x < map.dart_count(); ++x) {
    if (tau[tau[x]] != x || tau[map.alpha(x)] != map.alpha(tau[x])) return false;
    if (coloring[map.face_of(map.alpha(tau[x]))] == coloring[map.face_of(x)]) return false;
  }
  return true;
}

std::vector<CoverageRow> count_coverage_check(int d) {
  std::vector<CoverageRow> rows;
  for (const auto& type : compositions(d)) {
    CoverageRow row;
    row.type = type;
    const auto pairings = enumerate_pairings(type);
    const auto tableaux = enumerate_ssyt(type);
    row.pairings = pairings.size();
    row.tableaux = tableaux.size();
    row.kostka = kostka(type);

    std::set<Tableau2Row> images;
    row.bijection_ok = true;
    for (const auto& p : pairings) {
      const auto t = pairing_to_tableau(p);
      if (!is_ssyt(t, type) || !images.insert(t).second || tableau_to_pairing(t, type) != p) {
        row.bijection_ok = false;
      }
    }
    row.bijection_ok = row.bijection_ok && images.size() == tableaux.size() &&
                       std::equal(images.begin(), images.end(), tableaux.begin());

    std::set<std::pair<Perm, Perm>> marked;
    for (const auto& p : pairings) {
      const auto mg = mirror_graph(p);
      const auto rel = relabel_from(mg.map, mg.real_cycle.front());
      marked.emplace(rel.map.alpha_perm(), rel.map.sigma_perm());
    }
    row.mirrors_distinct = marked.size() == pairings.size();
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace pullback
