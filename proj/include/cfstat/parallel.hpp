#pragma once

// Deterministic chunked map-reduce. Work is cut into fixed-size chunks whose
// boundaries do not depend on the worker count; per-chunk results are merged
// in chunk order, so any worker count yields bit-identical results.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace cfstat {

inline unsigned default_workers() noexcept {
  const unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

/// map(begin, end) -> T over [0, n) in chunks of `chunk`; merge(acc, T&&)
/// folds results left to right in chunk order.
template <class T, class Map, class Merge>
T chunked_reduce(std::size_t n, std::size_t chunk, unsigned workers, T init, Map&& map, Merge&& merge) {
  if (n == 0) return init;
  chunk = std::max<std::size_t>(chunk, 1);
  const std::size_t chunks = (n + chunk - 1) / chunk;
  std::vector<std::optional<T>> parts(chunks);

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto run = [&] {
    for (std::size_t c; (c = next.fetch_add(1)) < chunks;) {
      try {
        const std::size_t b = c * chunk;
        parts[c].emplace(map(b, std::min(n, b + chunk)));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(chunks);
      }
    }
  };

  const unsigned threads = static_cast<unsigned>(std::min<std::size_t>(std::max(workers, 1u), chunks));
  if (threads <= 1) {
    run();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads - 1);
    for (unsigned i = 1; i < threads; ++i) pool.emplace_back(run);
    run();
  }
  if (failure) std::rethrow_exception(failure);

  for (auto& part : parts) merge(init, std::move(*part));
  return init;
}

}  // namespace cfstat
