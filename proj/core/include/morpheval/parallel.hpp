#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace morpheval {

// jobs <= 0 means "all hardware threads".
inline int ResolveJobs(int jobs) {
  if (jobs > 0) return jobs;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Splits [0, n) into at most `jobs` contiguous shards and runs
// fn(shard, begin, end) for each. Shard boundaries depend only on n and the
// shard count, so per-shard results merged in shard order are deterministic.
// The exception from the lowest-numbered failing shard is rethrown.
template <typename Fn>
void ForEachShard(std::size_t n, int jobs, Fn&& fn) {
  const std::size_t shards =
      std::max<std::size_t>(1, std::min<std::size_t>(ResolveJobs(jobs), n));
  if (shards == 1) {
    fn(std::size_t{0}, std::size_t{0}, n);
    return;
  }
  std::vector<std::exception_ptr> errors(shards);
  std::vector<std::thread> threads;
  threads.reserve(shards);
  for (std::size_t s = 0; s < shards; ++s) {
    const std::size_t begin = n * s / shards;
    const std::size_t end = n * (s + 1) / shards;
    threads.emplace_back([&, s, begin, end] {
      try {
        fn(s, begin, end);
      } catch (...) {
        errors[s] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

inline std::size_t ShardCount(std::size_t n, int jobs) {
  return std::max<std::size_t>(1, std::min<std::size_t>(ResolveJobs(jobs), n));
}

}  // namespace morpheval
