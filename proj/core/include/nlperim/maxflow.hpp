#pragma once

#include <cstdint>
#include <vector>

namespace nlperim {

/// s-t min cut on a graph with real capacities, by highest-label
/// push-relabel with the gap heuristic. Only the first phase runs (heights
/// below n), which is enough to identify a minimum cut; the excess left on
/// lifted nodes is never routed back. Node selection and arc scans follow
/// construction order, so the cut side is deterministic.
class MinCutSolver {
public:
  explicit MinCutSolver(int nodes);

  /// Adds a residual arc pair u->v / v->u with the given capacities.
  void add_edge(int u, int v, double cap_uv, double cap_vu);

  /// Computes the cut; returns the source-side labeling (1 = source side).
  std::vector<std::uint8_t> min_cut(int s, int t);

private:
  void finalize();

  int n_;
  bool finalized_ = false;
  struct EdgeInput {
    int u, v;
    double cap_uv, cap_vu;
  };
  std::vector<EdgeInput> inputs_;
  std::vector<std::size_t> first_;  // CSR offsets, size n_+1
  std::vector<int> to_;
  std::vector<std::size_t> rev_;
  std::vector<double> cap_;  // residual capacities
};

}  // namespace nlperim
