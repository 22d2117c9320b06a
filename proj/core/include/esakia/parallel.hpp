#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace esakia {

inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1U, std::thread::hardware_concurrency());
}

namespace detail {

template <class Body>
void run_workers(unsigned threads, Body&& body) {
  if (threads <= 1) {
    body();
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      try {
        body();
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace detail

// Smallest index in [0, total) satisfying pred, scanning disjoint chunks in
// parallel. The answer does not depend on the thread count.
template <class Pred>
std::optional<std::uint64_t> parallel_find_first(std::uint64_t total, Pred&& pred, unsigned threads = 0) {
  constexpr std::uint64_t kChunk = 256;
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> best{total};
  detail::run_workers(resolve_threads(threads), [&] {
    for (;;) {
      const std::uint64_t begin = next.fetch_add(kChunk);
      if (begin >= total || begin >= best.load()) return;
      const std::uint64_t end = std::min(total, begin + kChunk);
      for (std::uint64_t i = begin; i < end; ++i) {
        if (i >= best.load()) return;
        if (pred(i)) {
          std::uint64_t cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
          return;
        }
      }
    }
  });
  const std::uint64_t found = best.load();
  if (found == total) return std::nullopt;
  return found;
}

// Calls body(i) for every i in [0, total); body must only touch per-index state.
template <class Body>
void parallel_for(std::uint64_t total, Body&& body, unsigned threads = 0) {
  constexpr std::uint64_t kChunk = 64;
  std::atomic<std::uint64_t> next{0};
  detail::run_workers(resolve_threads(threads), [&] {
    for (;;) {
      const std::uint64_t begin = next.fetch_add(kChunk);
      if (begin >= total) return;
      const std::uint64_t end = std::min(total, begin + kChunk);
      for (std::uint64_t i = begin; i < end; ++i) body(i);
    }
  });
}

}  // namespace esakia
