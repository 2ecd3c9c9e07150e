#pragma once

#include <span>
#include <string>
#include <vector>

namespace pullback {

/// A permutation of {0, ..., n-1} in one-line notation: p[i] is the image of i.
using Perm = std::vector<int>;

bool is_permutation(std::span<const int> p);

Perm identity_perm(int n);
Perm inverse(std::span<const int> p);

/// Left-to-right composition: the result applies `first`, then `second`.
Perm then(std::span<const int> first, std::span<const int> second);

/// Cycles with each cycle starting at its minimal element, cycles ordered by
/// that minimum. Fixed points are included.
std::vector<std::vector<int>> cycles(std::span<const int> p);

/// Cycle lengths sorted in decreasing order (a partition of n).
std::vector<int> cycle_type(std::span<const int> p);

int cycle_count(std::span<const int> p);

/// Builds a permutation of {0..n-1} from disjoint cycles; unlisted points are fixed.
Perm from_cycles(int n, const std::vector<std::vector<int>>& cyc);

/// True when the group generated by `gens` acts transitively on {0..n-1}.
bool is_transitive(int n, const std::vector<Perm>& gens);

/// Cycle notation with 1-based points, fixed points omitted; "()" for identity.
std::string cycle_string(std::span<const int> p);

}  // namespace pullback
