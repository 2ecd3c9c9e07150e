#pragma once

#include <random>
#include <string>
#include <vector>

namespace pullback {

enum class Side { X, Y };
enum class Role { Interior, Input, Output };

/// Bipartite graph with inputs on the X side and outputs on the Y side. Interior
/// vertices carry a capacity.
struct ChargeableGraph {
  struct Vertex {
    Side side;
    Role role;
    double capacity = 0.0;  // interior vertices only
  };
  std::vector<Vertex> vertices;
  std::vector<std::pair<int, int>> edges;  // (X vertex, Y vertex)

  int add_vertex(Side side, Role role, double capacity = 0.0);
  int add_edge(int x, int y);
};

/// Positive weight per edge.
struct Weighting {
  std::vector<double> weight;
};

struct ChargeBalance {
  double in_value = 0.0;
  double out_value = 0.0;
  bool equal = false;
};

inline constexpr double kChargeTolerance = 1e-9;

/// Input and output values of a feasible weighting. Throws InfeasibleWeighting if
/// a weight is not positive or an interior vertex sum misses its capacity.
ChargeBalance charge_conservation_check(const ChargeableGraph& g, const Weighting& w);

/// Random test families with constant capacity M. Every interior vertex gets a
/// private input or output edge that absorbs the slack, and both interior classes
/// have the same size.
enum class ChargeFamily { Figure, DirectOnly, Layered, Cycle, Complete };

std::string to_string(ChargeFamily f);

struct ChargeInstance {
  ChargeableGraph graph;
  Weighting weighting;
};

ChargeInstance random_instance(ChargeFamily family, double capacity, std::mt19937_64& rng);

}  // namespace pullback
