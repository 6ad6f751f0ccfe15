#pragma once

#include <cstdint>
#include <thread>
#include <vector>

#include "bpsim/rng.hpp"

namespace bpsim {

/// Evaluates fn once per replicate, replicate k drawing from the dedicated
/// stream RngStream(seed, stream_lo + k). Results are identical whatever
/// the worker count.
template <typename T, typename Fn>
std::vector<T> map_replicates(std::uint64_t seed, std::uint64_t stream_lo,
                              long n, Fn&& fn, unsigned n_threads = 0) {
  std::vector<T> results(n);
  if (n_threads == 0) {
    n_threads = std::thread::hardware_concurrency();
    if (n_threads == 0) n_threads = 1;
  }
  if (n_threads > static_cast<unsigned>(n)) {
    n_threads = static_cast<unsigned>(n > 0 ? n : 1);
  }
  auto worker = [&](long lo, long hi) {
    for (long k = lo; k < hi; ++k) {
      RngStream rng(seed, stream_lo + static_cast<std::uint64_t>(k));
      results[k] = fn(rng);
    }
  };
  if (n_threads <= 1) {
    worker(0, n);
    return results;
  }
  std::vector<std::thread> pool;
  pool.reserve(n_threads);
  const long chunk = (n + n_threads - 1) / n_threads;
  for (unsigned t = 0; t < n_threads; ++t) {
    const long lo = t * chunk;
    const long hi = std::min<long>(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back(worker, lo, hi);
  }
  for (std::thread& th : pool) th.join();
  return results;
}

}  // namespace bpsim
