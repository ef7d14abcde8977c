#ifndef ADIM_PARALLEL_HPP
#define ADIM_PARALLEL_HPP

#include <cstdint>
#include <thread>
#include <vector>

namespace adim::detail {

// 0 means "pick for me"; anything else is clamped to a sane range.
inline int resolve_workers(int requested) {
  if (requested <= 0) {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
  }
  return requested > 64 ? 64 : requested;
}

// Runs fn(worker_id, begin, end) over contiguous chunks of [0, total).
// Callers are responsible for making the merged result order-independent.
template <class Fn>
void parallel_chunks(std::uint64_t total, int workers, Fn&& fn) {
  workers = resolve_workers(workers);
  if (total < 2 || workers == 1) {
    fn(0, std::uint64_t{0}, total);
    return;
  }
  if (static_cast<std::uint64_t>(workers) > total)
    workers = static_cast<int>(total);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::uint64_t chunk = (total + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const std::uint64_t begin = chunk * w;
    const std::uint64_t end = begin + chunk < total ? begin + chunk : total;
    if (begin >= end) break;
    pool.emplace_back([&fn, w, begin, end] { fn(w, begin, end); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace adim::detail

#endif  // ADIM_PARALLEL_HPP
