#include "pullback/monodromy.hpp"

#include <algorithm>
#include <set>

#include "pullback/error.hpp"

namespace pullback {

Constellation constellation_from(const CombinatorialMap& map, const FaceColoring& coloring,
                                 const VertexLabeling& lab) {
  std::vector<int> sheet(map.face_count(), -1);
  int d = 0;
  for (int f = 0; f < map.face_count(); ++f) {
    if (coloring[f] == Color::A) sheet[f] = d++;
  }
  Constellation c{d, std::vector<Perm>(lab.m, identity_perm(d))};
  for (int v = 0; v < map.vertex_count(); ++v) {
    Perm& p = c.perms[lab.label[v] - 1];
    for (Dart y : map.vertices()[v]) {
      if (coloring[map.face_of(y)] != Color::A) continue;
      const Dart z = map.sigma_inv(map.sigma_inv(y));
      p[sheet[map.face_of(y)]] = sheet[map.face_of(z)];
    }
  }
  return c;
}

Passport passport_of(const Constellation& c) {
  Passport p{c.d, {}};
  for (const auto& s : c.perms) p.parts.push_back(cycle_type(s));
  return p;
}

int rh_genus(const Passport& p) {
  int branching = 0;
  for (const auto& part : p.parts) {
    for (int x : part) branching += x - 1;
  }
  const int twice = branching - 2 * p.d + 2;
  if (twice < 0 || twice % 2 != 0) {
    throw Error(ErrorKind::NonIntegerGenus,
                "total branching " + std::to_string(branching) + " with degree " +
                    std::to_string(p.d) + " gives no integer genus");
  }
  return twice / 2;
}

namespace {

std::vector<int> without_ones(std::vector<int> part) {
  part.erase(std::remove(part.begin(), part.end(), 1), part.end());
  return part;
}

}  // namespace

ConstellationReport verify_constellation(const Constellation& c, const Passport& expected,
                                         bool ignore_fixed_points) {
  ConstellationReport r;
  bool shapes_ok = c.d >= 1 && !c.perms.empty();
  for (const auto& p : c.perms) {
    if (static_cast<int>(p.size()) != c.d || !is_permutation(p)) shapes_ok = false;
  }
  if (!shapes_ok) {
    r.failures.push_back("entries are not permutations of the sheets");
    return r;
  }
  Perm prod = identity_perm(c.d);
  for (const auto& p : c.perms) prod = then(prod, p);
  r.product_identity = prod == identity_perm(c.d);
  if (!r.product_identity) r.failures.push_back("product is " + cycle_string(prod));
  r.transitive = is_transitive(c.d, c.perms);
  if (!r.transitive) r.failures.push_back("action on sheets is not transitive");

  const Passport actual = passport_of(c);
  if (expected.parts.empty()) {
    r.passport_matches = true;
  } else {
    r.passport_matches = expected.parts.size() == actual.parts.size();
    for (std::size_t j = 0; r.passport_matches && j < actual.parts.size(); ++j) {
      auto want = expected.parts[j];
      auto got = actual.parts[j];
      std::sort(want.begin(), want.end(), std::greater<>());
      if (ignore_fixed_points) {
        want = without_ones(want);
        got = without_ones(got);
      }
      r.passport_matches = want == got;
    }
    if (!r.passport_matches) r.failures.push_back("cycle types differ from the passport");
  }
  try {
    r.genus = rh_genus(actual);
    r.genus_valid = true;
  } catch (const Error& e) {
    r.failures.push_back(e.what());
  }
  return r;
}

LabeledMap pullback_from_constellation(const Constellation& c) {
  const auto report = verify_constellation(c);
  if (!report.ok() || c.perms.size() < 2) {
    throw Error(ErrorKind::NotVerified,
                report.ok() ? "need at least two branch points" : report.failures.front());
  }
  const int d = c.d;
  const int m = static_cast<int>(c.perms.size());
  std::vector<Perm> inv;
  for (const auto& p : c.perms) inv.push_back(inverse(p));
  const auto out = [m](int i, int j) { return 2 * (i * m + j); };
  const auto in = [&](int i, int j) { return out(i, j) + 1; };

  Perm alpha(2 * d * m), sigma(2 * d * m);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < m; ++j) {
      const int prev = (j + m - 1) % m;
      alpha[out(i, j)] = in(i, j);
      alpha[in(i, j)] = out(i, j);
      sigma[in(i, prev)] = out(i, j);
      sigma[out(i, j)] = in(inv[j][i], prev);
    }
  }
  auto map = CombinatorialMap::build(std::move(alpha), std::move(sigma));
  FaceColoring coloring;
  coloring.colors.assign(map.face_count(), Color::B);
  VertexLabeling lab{m, std::vector<int>(map.vertex_count(), 0)};
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < m; ++j) {
      coloring.colors[map.face_of(out(i, j))] = Color::A;
      lab.label[map.vertex_of(out(i, j))] = j + 1;
    }
  }
  return {std::move(map), std::move(coloring), std::move(lab)};
}

namespace {

std::vector<Perm> relabel_from(const Constellation& c, int start) {
  std::vector<int> fresh(c.d, -1);
  std::vector<int> order{start};
  fresh[start] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (const auto& p : c.perms) {
      const int y = p[order[i]];
      if (fresh[y] < 0) {
        fresh[y] = static_cast<int>(order.size());
        order.push_back(y);
      }
    }
  }
  std::vector<Perm> out;
  for (const auto& p : c.perms) {
    Perm q(c.d);
    for (int x = 0; x < c.d; ++x) q[fresh[x]] = fresh[p[x]];
    out.push_back(std::move(q));
  }
  return out;
}

}  // namespace

Constellation canonical_constellation(const Constellation& c) {
  if (!is_transitive(c.d, c.perms)) {
    throw Error(ErrorKind::NotVerified, "canonical form needs a transitive constellation");
  }
  Constellation best{c.d, relabel_from(c, 0)};
  for (int s = 1; s < c.d; ++s) {
    auto cand = relabel_from(c, s);
    if (cand < best.perms) best.perms = std::move(cand);
  }
  return best;
}

bool are_conjugate(const Constellation& a, const Constellation& b) {
  if (a.d != b.d || a.perms.size() != b.perms.size()) return false;
  return canonical_constellation(a) == canonical_constellation(b);
}

std::vector<Constellation> all_constellations(int d, int m) {
  std::vector<Perm> group;
  Perm p = identity_perm(d);
  do {
    group.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::set<Constellation> found;
  std::vector<int> pick(m - 1, 0);
  const int size = static_cast<int>(group.size());
  while (true) {
    Constellation c{d, {}};
    Perm prod = identity_perm(d);
    for (int k : pick) {
      c.perms.push_back(group[k]);
      prod = then(prod, group[k]);
    }
    c.perms.push_back(inverse(prod));
    if (is_transitive(d, c.perms)) found.insert(canonical_constellation(c));
    int pos = m - 2;
    while (pos >= 0 && ++pick[pos] == size) pick[pos--] = 0;
    if (pos < 0) break;
  }
  return {found.begin(), found.end()};
}

}  // namespace pullback
