#include "nlperim/maxflow.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "nlperim/errors.hpp"

namespace nlperim {

MinCutSolver::MinCutSolver(int nodes) : n_(nodes) {
  if (nodes < 2) throw InvalidArgument("min cut needs at least two nodes");
}

void MinCutSolver::add_edge(int u, int v, double cap_uv, double cap_vu) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v)
    throw InvalidArgument("bad edge endpoints");
  if (cap_uv < 0 || cap_vu < 0) throw InvalidArgument("negative capacity");
  inputs_.push_back({u, v, cap_uv, cap_vu});
}

void MinCutSolver::finalize() {
  std::vector<std::size_t> degree(n_ + 1, 0);
  for (const auto& e : inputs_) {
    ++degree[e.u];
    ++degree[e.v];
  }
  first_.assign(n_ + 1, 0);
  for (int v = 0; v < n_; ++v) first_[v + 1] = first_[v] + degree[v];
  const std::size_t m = first_[n_];
  to_.resize(m);
  rev_.resize(m);
  cap_.resize(m);
  std::vector<std::size_t> slot(first_.begin(), first_.end() - 1);
  for (const auto& e : inputs_) {
    const std::size_t a = slot[e.u]++;
    const std::size_t b = slot[e.v]++;
    to_[a] = e.v;
    cap_[a] = e.cap_uv;
    rev_[a] = b;
    to_[b] = e.u;
    cap_[b] = e.cap_vu;
    rev_[b] = a;
  }
  inputs_.clear();
  inputs_.shrink_to_fit();
  finalized_ = true;
}

std::vector<std::uint8_t> MinCutSolver::min_cut(int s, int t) {
  if (!finalized_) finalize();
  const int n = n_;
  std::vector<int> height(n, 0);
  std::vector<double> excess(n, 0.0);
  std::vector<std::size_t> cur(first_.begin(), first_.end() - 1);

  // Exact distance labels from the sink (reverse residual BFS).
  {
    std::vector<int> dist(n, n);
    dist[t] = 0;
    std::deque<int> queue = {t};
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (std::size_t e = first_[v]; e < first_[v + 1]; ++e) {
        const int u = to_[e];
        if (dist[u] == n && cap_[rev_[e]] > 0.0) {
          dist[u] = dist[v] + 1;
          queue.push_back(u);
        }
      }
    }
    height = dist;
  }
  height[s] = n;

  std::vector<int> count(2 * n, 0);
  for (int v = 0; v < n; ++v)
    if (height[v] < n) ++count[height[v]];

  std::vector<std::vector<int>> bucket(n + 1);
  int highest = 0;
  auto activate = [&](int v) {
    if (v == s || v == t || height[v] >= n) return;
    bucket[height[v]].push_back(v);
    highest = std::max(highest, height[v]);
  };

  for (std::size_t e = first_[s]; e < first_[s + 1]; ++e) {
    const double d = cap_[e];
    if (d <= 0.0) continue;
    cap_[e] = 0.0;
    cap_[rev_[e]] += d;
    const int v = to_[e];
    const bool was_idle = excess[v] == 0.0;
    excess[v] += d;
    if (was_idle) activate(v);
  }

  auto apply_gap = [&](int h) {
    // No node sits at height h: everything strictly above (below n) is cut
    // off from the sink in this phase.
    for (int v = 0; v < n; ++v) {
      if (v == s) continue;
      if (height[v] > h && height[v] < n) {
        --count[height[v]];
        height[v] = n;
      }
    }
  };

  while (highest >= 0) {
    while (highest >= 0 && bucket[highest].empty()) --highest;
    if (highest < 0) break;
    const int v = bucket[highest].back();
    bucket[highest].pop_back();
    if (height[v] != highest || excess[v] <= 0.0 || height[v] >= n) continue;

    // discharge v
    while (excess[v] > 0.0 && height[v] < n) {
      if (cur[v] == first_[v + 1]) {
        // relabel
        int min_h = 2 * n;
        for (std::size_t e = first_[v]; e < first_[v + 1]; ++e)
          if (cap_[e] > 0.0) min_h = std::min(min_h, height[to_[e]] + 1);
        const int old_h = height[v];
        --count[old_h];
        height[v] = min_h;
        cur[v] = first_[v];
        if (height[v] < n) ++count[height[v]];
        if (count[old_h] == 0 && old_h > 0 && old_h < n) apply_gap(old_h);
        if (height[v] >= n) break;
        continue;
      }
      const std::size_t e = cur[v];
      const int w = to_[e];
      if (cap_[e] > 0.0 && height[v] == height[w] + 1) {
        const double d = std::min(excess[v], cap_[e]);
        cap_[e] -= d;
        cap_[rev_[e]] += d;
        excess[v] -= d;
        const bool was_idle = excess[w] == 0.0;
        excess[w] += d;
        if (was_idle) activate(w);
      } else {
        ++cur[v];
      }
    }
    if (excess[v] > 0.0 && height[v] < n) activate(v);
  }

  std::vector<std::uint8_t> side(n, 0);
  for (int v = 0; v < n; ++v) side[v] = height[v] >= n ? 1 : 0;
  side[s] = 1;
  side[t] = 0;
  return side;
}

}  // namespace nlperim
