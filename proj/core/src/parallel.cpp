#include "nlperim/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace nlperim {

double pairwise_sum(std::span<const double> values) {
  const std::size_t n = values.size();
  if (n <= 32) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

namespace parallel {

namespace {
std::atomic<int> g_max_threads{0};
}

void set_max_threads(int n) { g_max_threads.store(n < 0 ? 0 : n); }

int max_threads() {
  int n = g_max_threads.load();
  if (n <= 0) {
    unsigned hw = std::thread::hardware_concurrency();
    n = hw == 0 ? 1 : static_cast<int>(hw);
  }
  return n;
}

void for_range(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body) {
  if (n == 0) return;
  const int workers = std::min<std::size_t>(max_threads(), n);
  if (workers <= 1 || n < 4096) {
    body(0, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (n + workers - 1) / workers;
  for (int t = 0; t < workers; ++t) {
    const std::size_t b = std::min(n, static_cast<std::size_t>(t) * chunk);
    const std::size_t e = std::min(n, b + chunk);
    if (b >= e) break;
    pool.emplace_back([&body, b, e] { body(b, e); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace parallel
}  // namespace nlperim
