#include "pullback/chargeable.hpp"

#include <cmath>

#include "pullback/error.hpp"

namespace pullback {

int ChargeableGraph::add_vertex(Side side, Role role, double capacity) {
  vertices.push_back({side, role, capacity});
  return static_cast<int>(vertices.size()) - 1;
}

int ChargeableGraph::add_edge(int x, int y) {
  edges.emplace_back(x, y);
  return static_cast<int>(edges.size()) - 1;
}

ChargeBalance charge_conservation_check(const ChargeableGraph& g, const Weighting& w) {
  if (w.weight.size() != g.edges.size()) {
    throw Error(ErrorKind::InfeasibleWeighting, "weighting size does not match edge count");
  }
  std::vector<double> load(g.vertices.size(), 0.0);
  ChargeBalance r;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const double x = w.weight[e];
    if (!(x > 0.0)) {
      throw Error(ErrorKind::InfeasibleWeighting, "edge " + std::to_string(e) + " has weight " +
                                                      std::to_string(x));
    }
    const auto [a, b] = g.edges[e];
    if (g.vertices[a].side != Side::X || g.vertices[b].side != Side::Y) {
      throw Error(ErrorKind::InfeasibleWeighting,
                  "edge " + std::to_string(e) + " does not join X to Y");
    }
    load[a] += x;
    load[b] += x;
    if (g.vertices[a].role == Role::Input) r.in_value += x;
    if (g.vertices[b].role == Role::Output) r.out_value += x;
  }
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    const auto& vx = g.vertices[v];
    if (vx.role != Role::Interior) continue;
    if (std::abs(load[v] - vx.capacity) > kChargeTolerance * std::max(1.0, vx.capacity)) {
      throw Error(ErrorKind::InfeasibleWeighting,
                  "vertex " + std::to_string(v) + " carries " + std::to_string(load[v]) +
                      " instead of " + std::to_string(vx.capacity));
    }
  }
  r.equal = std::abs(r.in_value - r.out_value) <= kChargeTolerance;
  return r;
}

std::string to_string(ChargeFamily f) {
  switch (f) {
    case ChargeFamily::Figure: return "figure";
    case ChargeFamily::DirectOnly: return "direct";
    case ChargeFamily::Layered: return "layered";
    case ChargeFamily::Cycle: return "cycle";
    case ChargeFamily::Complete: return "complete";
  }
  return "unknown";
}

namespace {

// Interior classes of size n joined by `links`; slack goes to private I/O edges.
ChargeInstance build(int n, const std::vector<std::pair<int, int>>& links, double capacity,
                     std::mt19937_64& rng) {
  ChargeInstance inst;
  auto& g = inst.graph;
  std::vector<int> xs, ys;
  for (int i = 0; i < n; ++i) xs.push_back(g.add_vertex(Side::X, Role::Interior, capacity));
  for (int i = 0; i < n; ++i) ys.push_back(g.add_vertex(Side::Y, Role::Interior, capacity));
  std::vector<int> degree(2 * n, 0);
  for (auto [i, j] : links) {
    ++degree[i];
    ++degree[n + j];
  }
  int max_degree = 1;
  for (int deg : degree) max_degree = std::max(max_degree, deg);
  std::uniform_real_distribution<double> pick(0.05, 0.95);
  std::vector<double> load(2 * n, 0.0);
  for (auto [i, j] : links) {
    g.add_edge(xs[i], ys[j]);
    const double w = pick(rng) * capacity / (max_degree + 1);
    inst.weighting.weight.push_back(w);
    load[i] += w;
    load[n + j] += w;
  }
  // Extra input-output edges pass straight through.
  std::uniform_int_distribution<int> extra(0, 2);
  for (int k = extra(rng); k > 0; --k) {
    const int in = g.add_vertex(Side::X, Role::Input);
    const int out = g.add_vertex(Side::Y, Role::Output);
    g.add_edge(in, out);
    inst.weighting.weight.push_back(pick(rng) * capacity);
  }
  for (int i = 0; i < n; ++i) {
    const int in = g.add_vertex(Side::X, Role::Input);
    g.add_edge(in, ys[i]);
    inst.weighting.weight.push_back(capacity - load[n + i]);
    const int out = g.add_vertex(Side::Y, Role::Output);
    g.add_edge(xs[i], out);
    inst.weighting.weight.push_back(capacity - load[i]);
  }
  return inst;
}

}  // namespace

ChargeInstance random_instance(ChargeFamily family, double capacity, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> size(2, 8);
  switch (family) {
    case ChargeFamily::Figure: {
      // One interior edge of weight k between two interior vertices, two inputs
      // on one side and two outputs on the other.
      ChargeInstance inst;
      auto& g = inst.graph;
      std::uniform_real_distribution<double> part(0.05, 0.95);
      const double k = part(rng) * capacity / 2;
      const double a = part(rng) * (capacity - k);
      const double alpha = part(rng) * (capacity - k);
      const int x = g.add_vertex(Side::X, Role::Interior, capacity);
      const int y = g.add_vertex(Side::Y, Role::Interior, capacity);
      g.add_edge(x, y);
      inst.weighting.weight.push_back(k);
      for (double w : {a, capacity - k - a}) {
        g.add_edge(g.add_vertex(Side::X, Role::Input), y);
        inst.weighting.weight.push_back(w);
      }
      for (double w : {alpha, capacity - k - alpha}) {
        g.add_edge(x, g.add_vertex(Side::Y, Role::Output));
        inst.weighting.weight.push_back(w);
      }
      return inst;
    }
    case ChargeFamily::DirectOnly: {
      ChargeInstance inst;
      std::uniform_real_distribution<double> pick(0.05, capacity);
      for (int k = size(rng); k > 0; --k) {
        const int in = inst.graph.add_vertex(Side::X, Role::Input);
        const int out = inst.graph.add_vertex(Side::Y, Role::Output);
        inst.graph.add_edge(in, out);
        inst.weighting.weight.push_back(pick(rng));
      }
      return inst;
    }
    case ChargeFamily::Layered: {
      const int n = size(rng);
      std::bernoulli_distribution coin(0.4);
      std::vector<std::pair<int, int>> links;
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          if (coin(rng)) links.emplace_back(i, j);
        }
      }
      return build(n, links, capacity, rng);
    }
    case ChargeFamily::Cycle: {
      const int n = size(rng);
      std::vector<std::pair<int, int>> links;
      for (int i = 0; i < n; ++i) {
        links.emplace_back(i, i);
        links.emplace_back(i, (i + 1) % n);
      }
      return build(n, links, capacity, rng);
    }
    case ChargeFamily::Complete: {
      const int n = size(rng);
      std::vector<std::pair<int, int>> links;
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) links.emplace_back(i, j);
      }
      return build(n, links, capacity, rng);
    }
  }
  return {};
}

}  // namespace pullback
