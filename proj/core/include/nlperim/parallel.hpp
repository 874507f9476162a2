#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace nlperim {

/// Fixed-tree pairwise summation. The reduction tree depends only on the
/// length of the input, so the result is bit-reproducible for a given
/// sequence of addends regardless of how the entries were produced.
double pairwise_sum(std::span<const double> values);

namespace parallel {

/// Worker cap for the cell loops. 0 restores the hardware default.
void set_max_threads(int n);
int max_threads();

/// Runs body(begin, end) over a chunked partition of [0, n). Each index is
/// visited exactly once; bodies must write disjoint state so that results
/// do not depend on the partition.
void for_range(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace parallel
}  // namespace nlperim
