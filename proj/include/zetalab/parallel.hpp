#pragma once

#include <atomic>
#include <thread>
#include <vector>

#include "zetalab/base.hpp"

namespace zetalab {

// Deterministic parallel map: the index range [0, count) is cut into
// fixed-size chunks, workers pull chunks from a shared counter, and results
// are kept in chunk order.  The chunk size never depends on the worker
// count, so merged output is byte-identical for 1 or N threads.
template <typename Result, typename Fn>
std::vector<Result> parallel_map_chunks(int64 count, int64 chunk, int threads,
                                        Fn fn) {
  require(count >= 0, "parallel_map_chunks: negative count");
  require(chunk >= 1, "parallel_map_chunks: chunk size must be >= 1");
  require(threads >= 1, "parallel_map_chunks: need at least one worker");
  const int64 nchunks = count == 0 ? 0 : (count + chunk - 1) / chunk;
  std::vector<Result> out(static_cast<size_t>(nchunks));
  if (nchunks == 0) return out;
  std::atomic<int64> next{0};
  auto worker = [&]() {
    for (int64 c = next.fetch_add(1); c < nchunks; c = next.fetch_add(1)) {
      const int64 b = c * chunk;
      const int64 e = std::min(count, b + chunk);
      out[static_cast<size_t>(c)] = fn(c, b, e);
    }
  };
  if (threads == 1 || nchunks == 1) {
    worker();
    return out;
  }
  std::vector<std::thread> pool;
  const int spawn = static_cast<int>(std::min<int64>(threads, nchunks));
  pool.reserve(static_cast<size_t>(spawn));
  for (int t = 0; t < spawn; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return out;
}

}  // namespace zetalab
