#include "pullback/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "pullback/error.hpp"

namespace pullback {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BadPermutation: return "BadPermutation";
    case ErrorKind::NotInvolution: return "NotInvolution";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::NonIntegerGenus: return "NonIntegerGenus";
    case ErrorKind::NotBipartiteFaces: return "NotBipartiteFaces";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorKind::NegativeDotCount: return "NegativeDotCount";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::NoPerfectMatching: return "NoPerfectMatching";
    case ErrorKind::InconsistentPropagation: return "InconsistentPropagation";
    case ErrorKind::InfeasibleWeighting: return "InfeasibleWeighting";
    case ErrorKind::NotVerified: return "NotVerified";
    case ErrorKind::UnsupportedFormat: return "UnsupportedFormat";
  }
  return "Unknown";
}

bool is_permutation(std::span<const int> p) {
  const int n = static_cast<int>(p.size());
  std::vector<bool> seen(p.size(), false);
  for (int x : p) {
    if (x < 0 || x >= n || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

Perm identity_perm(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm inverse(std::span<const int> p) {
  Perm inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<int>(i);
  return inv;
}

Perm then(std::span<const int> first, std::span<const int> second) {
  Perm r(first.size());
  for (std::size_t i = 0; i < first.size(); ++i) r[i] = second[first[i]];
  return r;
}

std::vector<std::vector<int>> cycles(std::span<const int> p) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s]) continue;
    std::vector<int> cyc;
    for (int x = static_cast<int>(s); !seen[x]; x = p[x]) {
      seen[x] = true;
      cyc.push_back(x);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::vector<int> cycle_type(std::span<const int> p) {
  std::vector<int> t;
  for (const auto& c : cycles(p)) t.push_back(static_cast<int>(c.size()));
  std::sort(t.rbegin(), t.rend());
  return t;
}

int cycle_count(std::span<const int> p) {
  std::vector<bool> seen(p.size(), false);
  int count = 0;
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s]) continue;
    ++count;
    for (int x = static_cast<int>(s); !seen[x]; x = p[x]) seen[x] = true;
  }
  return count;
}

Perm from_cycles(int n, const std::vector<std::vector<int>>& cyc) {
  Perm p = identity_perm(n);
  std::vector<bool> used(n, false);
  for (const auto& c : cyc) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      const int x = c[i];
      if (x < 0 || x >= n || used[x]) {
        throw Error(ErrorKind::BadPermutation, "cycles are not disjoint or out of range");
      }
      used[x] = true;
      p[x] = c[(i + 1) % c.size()];
    }
  }
  return p;
}

bool is_transitive(int n, const std::vector<Perm>& gens) {
  if (n == 0) return true;
  std::vector<Perm> invs;
  for (const auto& g : gens) invs.push_back(inverse(g));
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (std::size_t k = 0; k < gens.size(); ++k) {
      for (int y : {gens[k][x], invs[k][x]}) {
        if (!seen[y]) {
          seen[y] = true;
          ++reached;
          stack.push_back(y);
        }
      }
    }
  }
  return reached == n;
}

std::string cycle_string(std::span<const int> p) {
  std::ostringstream os;
  bool any = false;
  for (const auto& c : cycles(p)) {
    if (c.size() < 2) continue;
    any = true;
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i] + 1;
    os << ')';
  }
  if (!any) os << "()";
  return os.str();
}

}  // namespace pullback
