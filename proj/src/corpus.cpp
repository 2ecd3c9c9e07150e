#include "pullback/corpus.hpp"

#include <algorithm>
#include <set>

#include "pullback/balance.hpp"

namespace pullback {

namespace {

// Builds (P, Q) on {0..E-1} in breadth-first order from edge 0, so every rooted
// structure is produced once: label i receives P(i), then Q(i), each either an
// existing label without preimage or the next fresh label. W(e) = P(Q(e)) is the
// vertex rotation on A darts.
class RootedGenerator {
 public:
  RootedGenerator(int edges, int max_degree, bool planar, std::set<std::pair<Perm, Perm>>& seen,
                  std::vector<CombinatorialMap>& out)
      : n_(edges), max_d_(max_degree), planar_(planar), seen_(seen), out_(out) {
    p_.assign(n_, -1);
    q_.assign(n_, -1);
    p_inv_.assign(n_, -1);
    q_inv_.assign(n_, -1);
    // Planar maps have sum(len(W cycles) - 2) = 4d - 4 - E.
    slack_ = 4 * max_d_ - 4 - n_;
  }

  void run() {
    if (planar_ && slack_ < 0) return;
    fresh_ = 1;
    assign_p(0);
  }

 private:
  int w(int e) const { return q_[e] < 0 ? -1 : p_[q_[e]]; }

  // Chain through e under W; false when it violates the valence rules.
  bool w_ok(int e) const {
    int len = 1;
    int x = e;
    while (w(x) >= 0) {
      x = w(x);
      if (x == e) return len >= 2 && (!planar_ || len - 2 <= slack_);
      ++len;
    }
    x = e;
    while (true) {
      int prev = -1;
      if (p_inv_[x] >= 0 && q_inv_[p_inv_[x]] >= 0) prev = q_inv_[p_inv_[x]];
      if (prev < 0) break;
      x = prev;
      ++len;
    }
    return !planar_ || len - 2 <= slack_;
  }

  static bool closes(const Perm& f, int from, int to) {
    for (int x = from; x >= 0; x = f[x]) {
      if (x == to) return true;
    }
    return false;
  }

  template <typename Next>
  void choose(Perm& f, Perm& f_inv, int& closed, int i, Next&& next) {
    const int limit = std::min(fresh_, n_ - 1);
    for (int y = 0; y <= limit; ++y) {
      if (f_inv[y] >= 0) continue;
      const bool is_fresh = y == fresh_;
      if (is_fresh) ++fresh_;
      f[i] = y;
      f_inv[y] = i;
      const bool closing = closes(f, y, i);
      if (closing) ++closed;
      if (closed <= max_d_ && w_ok(i) && (q_inv_[i] < 0 || w_ok(q_inv_[i])) &&
          (p_inv_[i] < 0 || q_inv_[p_inv_[i]] < 0 || w_ok(q_inv_[p_inv_[i]]))) {
        next();
      }
      if (closing) --closed;
      f[i] = -1;
      f_inv[y] = -1;
      if (is_fresh) --fresh_;
    }
  }

  void assign_p(int i) {
    if (i == fresh_) {
      if (i == n_) leaf();
      return;
    }
    choose(p_, p_inv_, closed_p_, i, [&] { assign_q(i); });
  }

  void assign_q(int i) {
    choose(q_, q_inv_, closed_q_, i, [&] { assign_p(i + 1); });
  }

  void leaf() {
    if (closed_p_ != closed_q_) return;
    Perm alpha(2 * n_), sigma(2 * n_);
    for (int e = 0; e < n_; ++e) {
      alpha[2 * e] = 2 * e + 1;
      alpha[2 * e + 1] = 2 * e;
      sigma[2 * e + 1] = 2 * p_[e];
      sigma[2 * e] = 2 * q_[e] + 1;
    }
    auto map = CombinatorialMap::build(std::move(alpha), std::move(sigma));
    if (planar_ && map.genus() != 0) return;
    if (!is_globally_balanced(map).globally_balanced) return;
    auto canon = canonical_form(map).map;
    if (seen_.emplace(canon.alpha_perm(), canon.sigma_perm()).second) {
      out_.push_back(std::move(canon));
    }
  }

  int n_, max_d_;
  bool planar_;
  int slack_ = 0;
  int fresh_ = 0;
  int closed_p_ = 0, closed_q_ = 0;
  Perm p_, q_, p_inv_, q_inv_;
  std::set<std::pair<Perm, Perm>>& seen_;
  std::vector<CombinatorialMap>& out_;
};

}  // namespace

std::vector<CombinatorialMap> balanced_corpus(const CorpusOptions& options) {
  std::set<std::pair<Perm, Perm>> seen;
  std::vector<CombinatorialMap> out;
  const int top = std::max(options.max_edges, options.max_planar_edges);
  for (int edges = 2; edges <= top; ++edges) {
    const bool planar = edges > options.max_edges;
    RootedGenerator(edges, options.max_degree, planar, seen, out).run();
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::pair(a.alpha_perm(), a.sigma_perm()) < std::pair(b.alpha_perm(), b.sigma_perm());
  });
  return out;
}

}  // namespace pullback
