#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace kgon {

inline int resolve_jobs(int jobs) {
  if (jobs > 0) return jobs;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs per_task(t) for t in [0, tasks) on a small pool and combines the
// results in task order, so the reduction is independent of scheduling.
template <typename T, typename PerTask, typename Combine>
T parallel_reduce(std::size_t tasks, int jobs, T init, PerTask per_task, Combine combine) {
  jobs = resolve_jobs(jobs);
  if (jobs <= 1 || tasks <= 1) {
    T acc = std::move(init);
    for (std::size_t t = 0; t < tasks; ++t) combine(acc, per_task(t));
    return acc;
  }
  std::vector<T> results(tasks);
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      std::size_t t = next.fetch_add(1);
      if (t >= tasks) return;
      results[t] = per_task(t);
    }
  };
  std::vector<std::thread> pool;
  int n_threads = std::min<std::size_t>(static_cast<std::size_t>(jobs), tasks);
  pool.reserve(static_cast<std::size_t>(n_threads));
  for (int i = 0; i < n_threads; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  T acc = std::move(init);
  for (std::size_t t = 0; t < tasks; ++t) combine(acc, std::move(results[t]));
  return acc;
}

}  // namespace kgon
