#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace fermatci {

/// Splits [0, total) into one contiguous chunk per worker and runs fn(chunk,
/// begin, end) on each, chunk index ascending. With workers <= 1 (or a tiny
/// range) everything runs inline on the calling thread.
///
/// Determinism contract: callers write results into per-chunk slots (or reduce
/// with an order-independent operation) and merge in chunk order afterwards,
/// so the outcome never depends on thread scheduling.
inline void parallel_chunks(std::size_t total, int workers,
                            const std::function<void(int chunk, std::size_t begin, std::size_t end)>& fn) {
  if (workers < 1) workers = 1;
  auto w = static_cast<std::size_t>(workers);
  if (w > total) w = total == 0 ? 1 : total;
  if (w <= 1) {
    fn(0, 0, total);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(w);
  const std::size_t base = total / w;
  const std::size_t extra = total % w;
  std::size_t begin = 0;
  for (std::size_t c = 0; c < w; ++c) {
    const std::size_t len = base + (c < extra ? 1 : 0);
    const std::size_t end = begin + len;
    threads.emplace_back(fn, static_cast<int>(c), begin, end);
    begin = end;
  }
  for (auto& t : threads) t.join();
}

}  // namespace fermatci
