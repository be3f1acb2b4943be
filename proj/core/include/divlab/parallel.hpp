#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace divlab {

namespace detail {
inline std::atomic<int>& jobs_setting() {
  static std::atomic<int> value{0};
  return value;
}
}  // namespace detail

/// Worker count used by parallel_for. Results are written to per-index slots
/// and reduced in index order, so outputs are independent of this setting.
inline int jobs() {
  int j = detail::jobs_setting().load();
  if (j > 0) return j;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

inline void set_jobs(int n) { detail::jobs_setting().store(n); }

/// Runs fn(i) for i in [0, count) on a small thread pool. fn must only write
/// to state owned by index i.
template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
  const int nthreads = jobs();
  if (nthreads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      fn(i);
    }
  };
  std::vector<std::thread> pool;
  const int spawn = static_cast<int>(
      std::min<std::size_t>(count, static_cast<std::size_t>(nthreads)));
  pool.reserve(spawn);
  for (int t = 0; t < spawn; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

}  // namespace divlab
